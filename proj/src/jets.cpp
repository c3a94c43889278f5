#include "fundform/jets.hpp"
#include "fundform/error.hpp"

namespace fundform {

std::size_t JetSystem::rows_for_order(int r) const {
  if (r < 0 || r > order) throw InvalidInput("jet order out of range");
  return static_cast<std::size_t>(binomial(r + static_cast<std::int64_t>(config.dim),
                                           static_cast<std::int64_t>(config.dim)));
}

Integer falling_monomial(const Exponent& alpha, const LatticePoint& p) {
  Integer v = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int t = 0; t < alpha[j]; ++t) v *= p[j] - t;
  return v;
}

namespace {

Integer power_monomial(const Exponent& alpha, const LatticePoint& p) {
  Integer v = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int t = 0; t < alpha[j]; ++t) v *= p[j];
  return v;
}

}  // namespace

JetSystem build_jets(const PointConfig& s, int m) {
  if (m < 0) throw InvalidInput("jet order must be nonnegative");
  if (s.points.empty()) throw InvalidInput("jets of an empty configuration");
  const PointConfig checked = PointConfig::make(s.dim, s.points);
  JetSystem js;
  js.config = checked;
  js.order = m;
  js.row_exponents = monomials_up_to_degree(s.dim, m);
  const std::size_t cols = s.points.size();
  js.j = RationalMatrix(js.row_exponents.size(), cols);
  js.lt = RationalMatrix(js.row_exponents.size(), cols);
  RowSpace jrow(cols), ltrow(cols);
  std::size_t row = 0;
  for (int r = 0; r <= m; ++r) {
    for (const auto& alpha : graded_monomials(s.dim, r)) {
      RatVector jr(cols), lr(cols);
      for (std::size_t i = 0; i < cols; ++i) {
        jr[i] = Rational(falling_monomial(alpha, s.points[i]));
        lr[i] = Rational(power_monomial(alpha, s.points[i]));
        js.j(row, i) = jr[i];
        js.lt(row, i) = lr[i];
      }
      jrow.add(jr);
      ltrow.add(lr);
      ++row;
    }
    js.j_ranks.push_back(jrow.rank());
    js.lt_ranks.push_back(ltrow.rank());
  }
  return js;
}

std::size_t h0(const PointConfig& s, int m) {
  if (m < 1) throw InvalidInput("h0 needs m >= 1");
  const auto js = build_jets(s, m - 1);
  return s.points.size() - js.j_ranks.back();
}

Integer expected_h0(std::size_t n, std::size_t k, int m) {
  if (m < 0) throw InvalidInput("expected_h0 needs m >= 0");
  const Integer e = Integer(n + 1) - binomial(m - 1 + static_cast<std::int64_t>(k),
                                              static_cast<std::int64_t>(k));
  return e < 0 ? Integer(0) : e;
}

bool is_special(const PointConfig& s, int m) {
  return Integer(h0(s, m)) > expected_h0(s.points.size() - 1, s.dim, m);
}

int min_vanishing_degree(const PointConfig& s) {
  if (s.points.size() < 2) throw InvalidInput("min_vanishing_degree needs at least two points");
  const std::size_t cols = s.points.size();
  RowSpace rows(cols);
  for (int d = 0;; ++d) {
    for (const auto& alpha : graded_monomials(s.dim, d)) {
      RatVector r(cols);
      for (std::size_t i = 0; i < cols; ++i) r[i] = Rational(power_monomial(alpha, s.points[i]));
      if (!rows.add(r)) return d == 0 ? 1 : d;
    }
  }
}

std::vector<Polynomial> FundamentalForm::forms() const {
  std::vector<Polynomial> out;
  for (const auto& b : basis) out.push_back(from_coefficients(k, monomials, b));
  return out;
}

bool FundamentalForm::vanishes_at(const RatVector& w) const {
  for (const auto& f : forms())
    if (f.evaluate(w) != 0) return false;
  return true;
}

FundamentalForm fundamental_form(const PointConfig& s, int m) {
  if (m < 1) throw InvalidInput("fundamental form needs m >= 1");
  const auto js = build_jets(s, m);
  FundamentalForm ff;
  ff.k = s.dim;
  ff.m = m;
  ff.monomials = graded_monomials(s.dim, m);
  const auto ker = kernel_basis(js.j_block(m - 1), Side::Right);
  const std::size_t first = js.rows_for_order(m - 1);

  std::vector<Rational> weight;
  const Integer mfact = factorial(m);
  for (const auto& alpha : ff.monomials) {
    Integer den = 1;
    for (int a : alpha) den *= factorial(a);
    weight.emplace_back(mfact, den);
  }

  RationalMatrix coeffs(0, ff.monomials.size());
  for (const auto& c : ker.vectors) {
    RatVector row(ff.monomials.size(), Rational(0));
    for (std::size_t a = 0; a < ff.monomials.size(); ++a) {
      Rational s_alpha = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s_alpha += js.j(first + a, i) * c[i];
      row[a] = weight[a] * s_alpha;
    }
    coeffs.append_row(row);
  }
  if (coeffs.rows() > 0) ff.basis = canonical_row_basis(coeffs);
  return ff;
}

}  // namespace fundform
