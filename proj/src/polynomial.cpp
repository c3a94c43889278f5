#include "fundform/polynomial.hpp"
#include "fundform/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fundform {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool enumeration_before(const Exponent& a, const Exponent& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

void compose(std::size_t i, int rem, Exponent& cur, std::vector<Exponent>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = rem;
    out.push_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[i] = e;
    compose(i + 1, rem - e, cur, out);
  }
}

}  // namespace

std::vector<Exponent> graded_monomials(std::size_t k, int degree) {
  if (k == 0) throw InvalidInput("monomials in zero variables");
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent cur(k, 0);
  compose(0, degree, cur, out);
  return out;
}

std::vector<Exponent> monomials_up_to_degree(std::size_t k, int max_degree) {
  std::vector<Exponent> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = graded_monomials(k, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const RatVector& coeffs, const Rational& c0) {
  Polynomial p = constant(coeffs.size(), c0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Polynomial Polynomial::linear(const IntVector& coeffs, const Integer& c0) {
  return linear(to_rational(coeffs), Rational(c0));
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw InvalidInput("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(n_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) p.terms_.emplace(e, c);
  return p;
}

Rational Polynomial::evaluate(const RatVector& x) const {
  if (x.size() != n_) throw InvalidInput("evaluation point has wrong dimension");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= x[i];
    s += t;
  }
  return s;
}

Rational Polynomial::evaluate(const IntVector& x) const { return evaluate(to_rational(x)); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw InvalidInput("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw InvalidInput("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw InvalidInput("polynomials in different variable counts");
  Polynomial p(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::integer_normalized() const {
  if (terms_.empty()) return *this;
  RatVector coeffs;
  for (const auto& [e, c] : terms_) coeffs.push_back(c);
  IntVector ints = integer_normalize(coeffs);
  Polynomial p(n_);
  std::size_t i = 0;
  const bool flip = ints.back() < 0;
  for (const auto& [e, c] : terms_) {
    p.terms_.emplace(e, Rational(flip ? Integer(-ints[i]) : ints[i]));
    ++i;
  }
  return p;
}

std::string Polynomial::to_string(const std::string& var, bool normalize) const {
  const Polynomial& p = normalize ? integer_normalized() : *this;
  if (normalize) return p.to_string(var, false);
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << fundform::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << fundform::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

Polynomial from_coefficients(std::size_t k, const std::vector<Exponent>& monomials,
                             const RatVector& coeffs) {
  if (monomials.size() != coeffs.size()) throw InvalidInput("coefficient count mismatch");
  Polynomial p(k);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(monomials[i], coeffs[i]);
  return p;
}

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a, d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw InvalidInput("division by the zero polynomial");
  if (r.size() < d.size()) return {UniPoly{}, r};
  UniPoly q(r.size() - d.size() + 1, Rational(0));
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Rational f = r.back() / d.back();
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UniPoly r = divide(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    const Rational lead = x.back();
    for (auto& c : x) c /= lead;
  }
  return x;
}

Rational evaluate(const UniPoly& p, const Rational& t) {
  Rational s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * t + *it;
  return s;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs_of(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> primes = factor_integer(n);
  std::vector<Integer> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t before = divs.size();
    Integer pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (std::size_t t = 0; t < before; ++t) divs.push_back(divs[t] * pk);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Integer> factor_integer(const Integer& n) {
  Integer m = abs_of(n);
  if (m == 0) throw InvalidInput("factorisation of zero");
  std::vector<Integer> out;
  for (unsigned p = 2; p < 1000 && Integer(p) * p <= m; ++p)
    while (m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  std::vector<Integer> rest;
  factor_into(m, rest);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  trim(p);
  if (p.empty()) throw InvalidInput("roots of the zero polynomial");
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) roots.insert(0);
  RatVector tail(p.begin() + static_cast<std::ptrdiff_t>(low), p.end());
  if (tail.size() > 1) {
    IntVector ints = integer_normalize(tail);
    for (const auto& num : divisors_of(ints.front()))
      for (const auto& den : divisors_of(ints.back()))
        for (int s : {1, -1}) {
          Rational cand(Integer(s * num), den);
          if (evaluate(tail, cand) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace fundform
