#ifndef BALANCED_GEOM_HPP
#define BALANCED_GEOM_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "balanced/errors.hpp"
#include "balanced/scalar.hpp"

namespace balanced {

template <PlaneScalar S>
using Vec2 = Eigen::Matrix<S, 2, 1>;

/// Row-major 2x2 linear map acting on column vectors.
template <PlaneScalar S>
using Mat2 = Eigen::Matrix<S, 2, 2>;

template <PlaneScalar S>
S det2(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <PlaneScalar S>
S det2(const Mat2<S>& g) {
  return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
}

// Written out by hand; Eigen's matrix-vector product does not compile for
// the rational scalar with boost 1.74.
template <PlaneScalar S>
Vec2<S> apply(const Mat2<S>& g, const Vec2<S>& v) {
  return Vec2<S>(g(0, 0) * v.x() + g(0, 1) * v.y(), g(1, 0) * v.x() + g(1, 1) * v.y());
}

template <PlaneScalar S>
Mat2<S> compose(const Mat2<S>& lhs, const Mat2<S>& rhs) {
  Mat2<S> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
  return out;
}

inline Vec2<double> to_float(const Vec2<Rational>& v) { return {to_double(v.x()), to_double(v.y())}; }
inline Vec2<double> to_float(const Vec2<double>& v) { return v; }

/// Index reduction for Convention-1 style cyclic labels: k mod m in [0, m).
inline std::size_t cyclic_index(long long k, long long m) {
  const long long r = k % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

/// An ordered list of nonzero plane vectors. The scalar type fixes the
/// arithmetic mode for every member.
template <PlaneScalar S>
class Configuration {
 public:
  using value_type = Vec2<S>;

  Configuration() = default;

  explicit Configuration(std::vector<Vec2<S>> vectors) : vectors_(std::move(vectors)) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (vectors_[i].x() == 0 && vectors_[i].y() == 0)
        throw Error(ErrorCode::ZeroVector, "member " + std::to_string(i) + " is the zero vector",
                    static_cast<long>(i));
    }
  }

  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  bool odd() const { return size() % 2 == 1; }

  /// n with m = 2n + 1. Throws InvalidSize unless m is odd and at least 3.
  std::size_t n() const {
    if (!odd() || size() < 3)
      throw Error(ErrorCode::InvalidSize,
                  "need an odd number of vectors >= 3, got " + std::to_string(size()));
    return (size() - 1) / 2;
  }

  const Vec2<S>& operator[](std::size_t i) const { return vectors_[i]; }

  /// Member at a cyclic label.
  const Vec2<S>& cyclic(long long k) const {
    return vectors_[cyclic_index(k, static_cast<long long>(size()))];
  }

  const std::vector<Vec2<S>>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.vectors_ == b.vectors_;
  }

 private:
  std::vector<Vec2<S>> vectors_;
};

/// A configuration sorted by strictly increasing polar argument.
/// `permutation[i]` is the input position of labeled member i.
template <PlaneScalar S>
struct LabeledConfiguration {
  Configuration<S> config;
  std::vector<std::size_t> permutation;

  std::size_t size() const { return config.size(); }
  const Vec2<S>& operator[](std::size_t i) const { return config[i]; }
  const Vec2<S>& cyclic(long long k) const { return config.cyclic(k); }
};

inline Configuration<double> to_float(const Configuration<double>& c) { return c; }
inline Configuration<double> to_float(const Configuration<Rational>& c) {
  std::vector<Vec2<double>> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(to_float(v));
  return Configuration<double>(std::move(out));
}

template <PlaneScalar S>
Configuration<S> transform(const Mat2<S>& g, const Configuration<S>& c) {
  std::vector<Vec2<S>> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(apply(g, v));
  return Configuration<S>(std::move(out));
}

/// Polar argument in [0, 2pi), zero on the positive x-axis. Exact vectors
/// are converted to float first.
template <PlaneScalar S>
double argument(const Vec2<S>& v) {
  if (v.x() == 0 && v.y() == 0) throw Error(ErrorCode::ZeroVector, "argument of the zero vector");
  const Vec2<double> f = to_float(v);
  double theta = std::atan2(f.y(), f.x());
  if (theta < 0) theta += 2 * std::numbers::pi;
  if (theta >= 2 * std::numbers::pi) theta = 0;
  return theta;
}

/// Sorts by argument. Arguments closer than `angle_tol` radians (cyclically,
/// so 0 and 2pi-eps collide) raise DuplicateArgument; in exact mode parallel
/// same-direction members are detected exactly as well.
template <PlaneScalar S>
LabeledConfiguration<S> label_by_increasing_arguments(const Configuration<S>& c,
                                                      double angle_tol = 1e-12) {
  const std::size_t m = c.size();
  std::vector<double> args(m);
  for (std::size_t i = 0; i < m; ++i) args[i] = argument(c[i]);

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return args[a] < args[b]; });

  auto duplicate = [&](std::size_t a, std::size_t b) {
    throw Error(ErrorCode::DuplicateArgument,
                "members " + std::to_string(std::min(a, b)) + " and " + std::to_string(std::max(a, b)) +
                    " have the same argument");
  };
  if constexpr (is_exact_v<S>) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (det2(c[i], c[j]) == 0 && c[i].dot(c[j]) > 0) duplicate(i, j);
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (args[perm[i + 1]] - args[perm[i]] < angle_tol) duplicate(perm[i], perm[i + 1]);
  }
  if (m > 1 && args[perm.front()] + 2 * std::numbers::pi - args[perm.back()] < angle_tol)
    duplicate(perm.front(), perm.back());

  std::vector<Vec2<S>> sorted;
  sorted.reserve(m);
  for (std::size_t i : perm) sorted.push_back(c[i]);
  return {Configuration<S>(std::move(sorted)), std::move(perm)};
}

/// The m-th roots of unity (cos 2pi k/m, sin 2pi k/m), k = 0..m-1.
inline LabeledConfiguration<double> roots_of_unity(long long m) {
  if (m <= 0) throw Error(ErrorCode::InvalidSize, "roots_of_unity needs m >= 1");
  std::vector<Vec2<double>> out;
  std::vector<std::size_t> perm;
  out.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    out.emplace_back(std::cos(theta), std::sin(theta));
    perm.push_back(static_cast<std::size_t>(k));
  }
  return {Configuration<double>(std::move(out)), std::move(perm)};
}

/// omega^k for omega = exp(2 pi i / m), any integer k.
inline Vec2<double> root_of_unity(long long k, long long m) {
  const double theta = 2 * std::numbers::pi * static_cast<double>(cyclic_index(k, m)) /
                       static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

/// Rescales so that the longest member has unit length. Determinants scale
/// by the square of the factor, so balance verdicts are unchanged.
inline Configuration<double> scale_to_unit(const Configuration<double>& c) {
  double longest = 0;
  for (const auto& v : c) longest = std::max(longest, v.norm());
  if (longest == 0) return c;
  std::vector<Vec2<double>> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(v / longest);
  return Configuration<double>(std::move(out));
}

inline LabeledConfiguration<double> scale_to_unit(const LabeledConfiguration<double>& c) {
  return {scale_to_unit(c.config), c.permutation};
}

template <PlaneScalar S>
double max_abs_det(const Configuration<S>& c) {
  double best = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) best = std::max(best, abs_value(det2(c[i], c[j])));
  return best;
}

/// Relative default tolerance for float-mode determinant comparisons:
/// 1e-9 times the largest |det(v_i, v_j)|. Exact configurations use 0.
template <PlaneScalar S>
double default_tolerance(const Configuration<S>& c) {
  if constexpr (is_exact_v<S>) {
    return 0.0;
  } else {
    return 1e-9 * max_abs_det(c);
  }
}

}  // namespace balanced

#endif  // BALANCED_GEOM_HPP
