#ifndef BALANCED_ROOTS_HPP
#define BALANCED_ROOTS_HPP

#include <cstddef>
#include <vector>

#include "balanced/polynomial.hpp"

namespace balanced {

/// An open interval (lo, hi) with dyadic endpoints containing exactly one
/// real root, or a degenerate interval lo == hi holding an exact root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double width() const { return to_double(Rational(hi - lo)); }
};

/// Number of sign changes in a coefficient sequence, zeros skipped.
std::size_t sign_variations(const std::vector<BigInt>& coeffs);

/// p(t + 1).
IntPoly taylor_shift_one(const IntPoly& p);

/// Isolates the distinct real roots of p (p nonzero) by Descartes-rule
/// bisection over dyadic intervals, in ascending order.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

/// Bisects an isolating interval of a root of p until it is narrower than
/// `width`, using exact sign evaluation at the dyadic midpoints.
RootInterval refine_root(const IntPoly& p, RootInterval interval, const Rational& width);

/// isolate_real_roots followed by refine_root on each interval.
std::vector<RootInterval> real_roots(const IntPoly& p, const Rational& width);

}  // namespace balanced

#endif  // BALANCED_ROOTS_HPP
