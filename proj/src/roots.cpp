#include "balanced/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace balanced {

namespace {

/// A search node: polynomial q whose roots in (0, 1) correspond to roots of
/// the input in (c / 2^k, (c + 1) / 2^k) on the scaled axis.
struct Node {
  IntPoly q;
  BigInt c;
  unsigned k;
};

BigInt pow2(unsigned e) { return BigInt(1) << e; }

/// Upper bound on the number of roots of q in (0, 1): variations of
/// (x + 1)^d q(1 / (x + 1)).
std::size_t descartes_unit_bound(const IntPoly& q) {
  std::vector<BigInt> rev(q.coeffs().rbegin(), q.coeffs().rend());
  return sign_variations(taylor_shift_one(IntPoly(std::move(rev))).coeffs());
}

/// 2^d q(x / 2).
IntPoly halve(const IntPoly& q) {
  const int d = q.degree();
  std::vector<BigInt> out(q.coeffs());
  for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] <<= static_cast<unsigned>(d - i);
  return IntPoly(std::move(out));
}

/// Roots of q in (0, 1), as intervals/points on the x-axis of q.
void isolate_unit(const IntPoly& q0, std::vector<RootInterval>& out) {
  std::vector<Node> stack{{q0, BigInt(0), 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const std::size_t bound = descartes_unit_bound(node.q);
    if (bound == 0) continue;
    const Rational scale = Rational(1) / Rational(pow2(node.k));
    if (bound == 1) {
      out.push_back({Rational(node.c) * scale, Rational(node.c + 1) * scale});
      continue;
    }
    IntPoly left = halve(node.q);
    IntPoly right = taylor_shift_one(left);
    if (right.coeff(0) == 0) {
      out.push_back({Rational(2 * node.c + 1) / Rational(pow2(node.k + 1)),
                     Rational(2 * node.c + 1) / Rational(pow2(node.k + 1))});
      std::vector<BigInt> shifted(right.coeffs().begin() + 1, right.coeffs().end());
      right = IntPoly(std::move(shifted));
    }
    stack.push_back({std::move(left), 2 * node.c, node.k + 1});
    stack.push_back({std::move(right), 2 * node.c + 1, node.k + 1});
  }
}

/// Exponent e with every root of p strictly inside (-2^e, 2^e)
/// (Cauchy bound 1 + max |a_i / a_d|).
unsigned root_bound_exponent(const IntPoly& p) {
  BigInt top(0);
  for (int i = 0; i < p.degree(); ++i) top = std::max(top, BigInt(boost::multiprecision::abs(p.coeff(i))));
  const BigInt bound = top / boost::multiprecision::abs(p.leading()) + 2;
  return static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
}

/// p(s * 2^e * x) for s = +1 or -1.
IntPoly scale_argument(const IntPoly& p, unsigned e, int s) {
  std::vector<BigInt> out(p.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] <<= static_cast<unsigned>(i) * e;
    if (s < 0 && i % 2 == 1) out[i] = -out[i];
  }
  return IntPoly(std::move(out));
}

}  // namespace

std::size_t sign_variations(const std::vector<BigInt>& coeffs) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

IntPoly taylor_shift_one(const IntPoly& p) {
  std::vector<BigInt> a(p.coeffs());
  const std::size_t d = a.size();
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = d - 1; j-- > i;) a[j] += a[j + 1];
  return IntPoly(std::move(a));
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  IntPoly s = squarefree_part(p);
  std::vector<RootInterval> roots;
  if (s.degree() <= 0) return roots;
  if (s.coeff(0) == 0) {
    roots.push_back({Rational(0), Rational(0)});
    std::vector<BigInt> shifted(s.coeffs().begin() + 1, s.coeffs().end());
    s = IntPoly(std::move(shifted));
  }
  if (s.degree() <= 0) return roots;

  const unsigned e = root_bound_exponent(s);
  const Rational bound(pow2(e));
  for (int side : {1, -1}) {
    std::vector<RootInterval> unit;
    isolate_unit(scale_argument(s, e, side), unit);
    for (const auto& iv : unit) {
      if (side > 0)
        roots.push_back({iv.lo * bound, iv.hi * bound});
      else
        roots.push_back({-iv.hi * bound, -iv.lo * bound});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) {
    // An exact root can share its value with the open end of the next interval.
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return roots;
}

RootInterval refine_root(const IntPoly& p, RootInterval interval, const Rational& width) {
  if (interval.exact()) return interval;
  const IntPoly s = squarefree_part(p);
  // Sign of s just to the right of lo; the single simple root inside flips it.
  int sign_lo = s.sign_at(interval.lo);
  if (sign_lo == 0) sign_lo = s.derivative().sign_at(interval.lo);
  while (interval.hi - interval.lo > width) {
    const Rational mid = interval.midpoint();
    const int sm = s.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == sign_lo)
      interval.lo = mid;
    else
      interval.hi = mid;
  }
  return interval;
}

std::vector<RootInterval> real_roots(const IntPoly& p, const Rational& width) {
  auto roots = isolate_real_roots(p);
  for (auto& r : roots) r = refine_root(p, r, width);
  return roots;
}

}  // namespace balanced
