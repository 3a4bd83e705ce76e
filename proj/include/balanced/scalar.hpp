#ifndef BALANCED_SCALAR_HPP
#define BALANCED_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <concepts>

namespace balanced {

// Expression templates are disabled: Eigen's scalar promotion does not
// cope with boost's expression types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// The two arithmetic modes of a configuration: binary float or exact rational.
template <class S>
concept PlaneScalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <PlaneScalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const Rational& x) { return std::abs(to_double(x)); }

/// Zero test: exact in rational mode, |x| <= tol in float mode.
inline bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
inline bool is_zero(const Rational& x, double /*tol*/) { return x == 0; }

template <PlaneScalar S>
bool nearly_equal(const S& a, const S& b, double tol) {
  return is_zero(S(a - b), tol);
}

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }

}  // namespace balanced

#endif  // BALANCED_SCALAR_HPP
