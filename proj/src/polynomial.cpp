#include "balanced/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace balanced {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::t() { return IntPoly{0, 1}; }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool IntPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool IntPoly::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational IntPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

double IntPoly::operator()(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->convert_to<double>();
  return acc;
}

int IntPoly::sign_at(const Rational& t) const { return (*this)(t).sign(); }

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long long>(i));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reflect() const {
  IntPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = boost::multiprecision::abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by the zero polynomial");
  IntPoly r = a;
  const BigInt& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    std::vector<BigInt> mono(static_cast<std::size_t>(shift) + 1, BigInt(0));
    mono.back() = r.leading();
    r = lb * r - IntPoly(std::move(mono)) * b;
  }
  return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly p = a.primitive();
  IntPoly q = b.primitive();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPoly r = pseudo_remainder(p, q).primitive();
    p = std::move(q);
    q = std::move(r);
  }
  return p.primitive();
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::invalid_argument("inexact polynomial division");
  }
  std::vector<BigInt> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigInt rem;
    BigInt q;
    boost::multiprecision::divide_qr(r.leading(), b.leading(), q, rem);
    if (rem != 0) throw std::invalid_argument("inexact polynomial division");
    const int shift = r.degree() - b.degree();
    quotient[static_cast<std::size_t>(shift)] = q;
    std::vector<BigInt> mono(static_cast<std::size_t>(shift) + 1, BigInt(0));
    mono.back() = q;
    r -= IntPoly(std::move(mono)) * b;
  }
  if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
  return IntPoly(std::move(quotient));
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPoly g = gcd(p, p.derivative());
  return exact_divide(p.primitive(), g);
}

}  // namespace balanced
