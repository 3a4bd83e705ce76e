#ifndef BALANCED_CANONICAL_HPP
#define BALANCED_CANONICAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "balanced/balance.hpp"
#include "balanced/geom.hpp"

namespace balanced {

/// The unique g with g v0 = (1,0) and g vn = (0,1): the inverse of the
/// matrix with columns v0, vn.
template <PlaneScalar S>
Mat2<S> frame_map(const Vec2<S>& v0, const Vec2<S>& vn, double tol = 1e-12) {
  const S d = det2(v0, vn);
  if (is_zero(d, tol)) throw Error(ErrorCode::SingularFrame, "frame vectors are parallel");
  Mat2<S> g;
  g << vn.y() / d, -vn.x() / d, -v0.y() / d, v0.x() / d;
  return g;
}

/// Inverse of an invertible 2x2 map.
template <PlaneScalar S>
Mat2<S> inverse(const Mat2<S>& g) {
  const S d = det2(g);
  if (d == 0) throw Error(ErrorCode::SingularFrame, "map is not invertible");
  Mat2<S> out;
  out << g(1, 1) / d, -g(0, 1) / d, -g(1, 0) / d, g(0, 0) / d;
  return out;
}

/// x-coordinate of g v_next, which must have y-coordinate -1 within tol.
template <PlaneScalar S>
S extract_t(const Mat2<S>& g, const Vec2<S>& v_next, double tol) {
  const Vec2<S> p = apply(g, v_next);
  if (!is_zero(S(p.y() + 1), tol))
    throw Error(ErrorCode::NotNormalized,
                "image of v_{n+1} has y = " + std::to_string(to_double(p.y())) + ", expected -1");
  return p.x();
}

/// The k in 1..n with |t - 2cos(2 pi k / m)| <= tol (nearest if several).
long long match_k(double t, long long m, double tol);

/// Rebuilds all m members from v_0, v_n, v_{n+1}, using
///   v_i       = -v_{i-1} - (A1/An) v_{n+i}
///   v_{n+i+1} = -(A1/An) v_i - v_{n+i}
/// for i = 1..n-1, with A1 = det(v_n, v_{n+1}) and An = det(v_0, v_n).
/// The result is in label order. Exact for rational input.
template <PlaneScalar S>
Configuration<S> reconstruct_from_triple(const Vec2<S>& v0, const Vec2<S>& vn, const Vec2<S>& vn1, long long m,
                                         double tol = 0) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidSize, "reconstruction needs odd m >= 3");
  const auto n = static_cast<std::size_t>((m - 1) / 2);
  const S an = det2(v0, vn);
  if (is_zero(an, tol)) throw Error(ErrorCode::SingularFrame, "v_0 and v_n are parallel");
  const S ratio = det2(vn, vn1) / an;

  std::vector<Vec2<S>> v(static_cast<std::size_t>(m));
  v[0] = v0;
  v[n] = vn;
  v[n + 1] = vn1;
  for (std::size_t i = 1; i < n; ++i) {
    v[i] = -v[i - 1] - v[n + i] * ratio;
    v[n + i + 1] = -(v[i] * ratio) - v[n + i];
    for (std::size_t slot : {i, n + i + 1})
      if (is_zero(v[slot].x(), tol) && is_zero(v[slot].y(), tol))
        throw Error(ErrorCode::DegenerateStep, "reconstructed v_" + std::to_string(slot) + " is zero",
                    static_cast<long>(slot));
  }
  return Configuration<S>(std::move(v));
}

struct CanonOptions {
  /// Absolute determinant tolerance for balance/uniformity after unit
  /// scaling; negative selects the relative default (1e-9 max |det|).
  double balance_tol = -1;
  /// Singular-frame threshold after unit scaling.
  double frame_tol = 1e-12;
  /// Allowed deviation of the y-coordinate of g_C v_{n+1} from -1.
  double normalize_tol = 1e-6;
  double grid_tol = 1e-6;
  double residual_tol = 1e-8;
};

/// Witness of GL2-equivalence with the m-th roots of unity:
/// g v_i = omega^{index_map[i]} for the labeled members v_i.
struct CanonicalForm {
  long long m = 0;
  /// g_k^{-1} g_C, acting on the input coordinates.
  Mat2<double> g;
  /// Frame map sending v_0 -> (1,0), v_n -> (0,1).
  Mat2<double> frame;
  double t = 0;
  long long k = 0;
  /// Exponent of omega assigned to labeled member i: -2ki mod m.
  std::vector<long long> index_map;
  /// labeled member i = input member permutation[i].
  std::vector<std::size_t> permutation;
  double residual = 0;
  LabeledConfiguration<double> labeled;
};

/// Labels c by increasing arguments, computes g_C, t_C and k_C, and returns
/// the composite map onto the roots of unity. Throws NotBalanced,
/// NotUniform, NoGridMatch or ResidualTooLarge.
CanonicalForm canonicalize(const Configuration<double>& c, const CanonOptions& options = {});

inline CanonicalForm canonicalize(const Configuration<Rational>& c, const CanonOptions& options = {}) {
  return canonicalize(to_float(c), options);
}

struct Equivalence {
  bool equivalent = false;
  std::optional<ErrorCode> reason;
  std::string detail;
};

/// Same-size uniform balanced configurations are GL2-equivalent; any
/// canonicalization failure or a size mismatch yields false with a reason.
Equivalence gl2_equivalent(const Configuration<double>& a, const Configuration<double>& b,
                           const CanonOptions& options = {});

}  // namespace balanced

#endif  // BALANCED_CANONICAL_HPP
