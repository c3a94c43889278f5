#pragma once

#include "fundform/arith.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fundform {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Enumeration order used for jet rows, unknown columns and form
/// coefficients: total degree ascending, then lexicographically descending
/// inside one degree (x1^d comes first).
bool enumeration_before(const Exponent& a, const Exponent& b);

/// All exponents of total degree `degree` in k variables, in enumeration order.
std::vector<Exponent> graded_monomials(std::size_t k, int degree);

/// All exponents of total degree 0..max_degree in enumeration order.
std::vector<Exponent> monomials_up_to_degree(std::size_t k, int max_degree);

/// Standard graded-lex monomial order (degree first, then lex ascending).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t num_vars = 0) : n_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const Exponent& e, const Rational& c);
  /// sum coeffs[i] * x_i + c0
  static Polynomial linear(const RatVector& coeffs, const Rational& c0);
  static Polynomial linear(const IntVector& coeffs, const Integer& c0);

  std::size_t num_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);
  Polynomial homogeneous_part(int d) const;

  Rational evaluate(const RatVector& x) const;
  Rational evaluate(const IntVector& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;

  /// Scalar multiple with integer coefficients of content 1 and positive
  /// leading coefficient (zero stays zero).
  Polynomial integer_normalized() const;

  /// Terms "c*x1^a1*...*xk^ak" from the highest graded-lex monomial down.
  /// With `normalize`, the integer-normalized multiple is printed.
  std::string to_string(const std::string& var = "x", bool normalize = false) const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Polynomial whose coefficient on monomials[i] is coeffs[i].
Polynomial from_coefficients(std::size_t k, const std::vector<Exponent>& monomials,
                             const RatVector& coeffs);

/// Univariate polynomials as coefficient vectors, index = power; trimmed so
/// the last entry is nonzero (the zero polynomial is empty).
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p);
int degree(const UniPoly& p);
/// Returns (quotient, remainder).
std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
Rational evaluate(const UniPoly& p, const Rational& t);
UniPoly derivative(const UniPoly& p);
/// Distinct rational roots in ascending order.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Prime factorisation of |n| > 0 as an ascending list with multiplicity.
std::vector<Integer> factor_integer(const Integer& n);

}  // namespace fundform
