#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fundform {

/// Arbitrary-precision integer. All kernels use this type; there is no
/// fixed-width fallback.
using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}
inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor and ceiling of a rational.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Floor division with the quotient rounded toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  ///< gcd, always >= 0
  Integer x;  ///< Bezout coefficient of a
  Integer y;  ///< Bezout coefficient of b
};

/// g = a*x + b*y with g = gcd(a, b) >= 0.
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Divides v by its content; the zero vector is returned unchanged.
IntVector primitive_part(const IntVector& v);

/// Clears denominators and divides by the content, so the result is a
/// primitive integer vector proportional to v (same sign).
IntVector integer_normalize(const RatVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);

}  // namespace fundform
