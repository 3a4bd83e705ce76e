#ifndef BALANCED_POLYNOMIAL_HPP
#define BALANCED_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "balanced/geom.hpp"
#include "balanced/scalar.hpp"

namespace balanced {

/// Univariate polynomial in t with arbitrary-precision integer coefficients,
/// stored in ascending degree with trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// The monomial t.
  static IntPoly t();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// p(-t) = p(t).
  bool is_even() const;
  /// p(-t) = -p(t).
  bool is_odd() const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;
  int sign_at(const Rational& t) const;

  IntPoly derivative() const;
  /// p(-t).
  IntPoly reflect() const;
  /// p(t) with its integer content divided out and a positive leading coefficient.
  IntPoly primitive() const;
  BigInt content() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "t^5 - 4*t^3 + 3*t" style rendering.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder of a by b (b nonzero): lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Exact division; throws std::invalid_argument if b does not divide a over Z.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);
/// p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

/// A vector-valued polynomial t -> (x(t), y(t)).
struct PolyPair {
  IntPoly x;
  IntPoly y;

  Vec2<Rational> operator()(const Rational& t) const { return {x(t), y(t)}; }
  Vec2<double> operator()(double t) const { return {x(t), y(t)}; }
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

}  // namespace balanced

#endif  // BALANCED_POLYNOMIAL_HPP
