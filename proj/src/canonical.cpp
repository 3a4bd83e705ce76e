#include "balanced/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "balanced/recurrence.hpp"

namespace balanced {

long long match_k(double t, long long m, double tol) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidSize, "match_k needs odd m >= 3");
  long long best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (long long k = 1; k <= (m - 1) / 2; ++k) {
    const double gap = std::abs(t - t_value(k, m));
    if (gap <= tol && gap < best_gap) {
      best = k;
      best_gap = gap;
    }
  }
  if (best == 0)
    throw Error(ErrorCode::NoGridMatch, "t = " + std::to_string(t) + " is not 2cos(2 pi k / " +
                                            std::to_string(m) + ") for any k");
  return best;
}

CanonicalForm canonicalize(const Configuration<double>& c, const CanonOptions& options) {
  const long long m = static_cast<long long>(c.size());
  const auto n = static_cast<long long>(c.n());

  double longest = 0;
  for (const auto& v : c) longest = std::max(longest, v.norm());
  const Configuration<double> unit = scale_to_unit(c);
  const double tol = options.balance_tol >= 0 ? options.balance_tol : default_tolerance(unit);

  const auto balance = is_balanced(unit, tol);
  if (!balance.balanced)
    throw Error(ErrorCode::NotBalanced,
                "row " + std::to_string(balance.witness->index) + " is not symmetric (unmatched value " +
                    std::to_string(balance.witness->value) + ")",
                static_cast<long>(balance.witness->index));
  if (const auto uniform = is_uniform(unit, tol); !uniform.uniform)
    throw Error(ErrorCode::NotUniform,
                "members " + std::to_string(uniform.witness->first) + " and " +
                    std::to_string(uniform.witness->second) + " are parallel");

  CanonicalForm out;
  out.m = m;
  out.labeled = label_by_increasing_arguments(unit);
  out.permutation = out.labeled.permutation;
  const auto& v = out.labeled;

  const Mat2<double> frame = frame_map(v[0], v.cyclic(n), options.frame_tol);
  out.t = extract_t(frame, v.cyclic(n + 1), options.normalize_tol);
  out.k = match_k(out.t, m, options.grid_tol);

  // g_k^{-1} has columns 1 and omega^k.
  Mat2<double> model_inverse;
  model_inverse.col(0) = root_of_unity(0, m);
  model_inverse.col(1) = root_of_unity(out.k, m);
  const Mat2<double> g_unit = model_inverse * frame;

  out.index_map.resize(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long exponent = static_cast<long long>(cyclic_index(-2 * out.k * i, m));
    out.index_map[static_cast<std::size_t>(i)] = exponent;
    const double err = (g_unit * v[static_cast<std::size_t>(i)] - root_of_unity(exponent, m)).norm();
    out.residual = std::max(out.residual, err);
  }
  // Undo the unit scaling so g acts on the caller's coordinates.
  out.g = g_unit / longest;
  out.frame = frame / longest;
  std::vector<Vec2<double>> original;
  for (std::size_t i : out.permutation) original.push_back(c[i]);
  out.labeled = {Configuration<double>(std::move(original)), out.permutation};
  if (!(out.residual <= options.residual_tol))
    throw Error(ErrorCode::ResidualTooLarge, "residual " + std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

Equivalence gl2_equivalent(const Configuration<double>& a, const Configuration<double>& b,
                           const CanonOptions& options) {
  if (a.size() != b.size())
    return {false, ErrorCode::InvalidSize,
            "sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size())};
  try {
    canonicalize(a, options);
    canonicalize(b, options);
  } catch (const Error& e) {
    return {false, e.code(), e.what()};
  }
  return {true, std::nullopt, ""};
}

}  // namespace balanced
