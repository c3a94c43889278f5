#include "fundform/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace fundform {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw InvalidInput("matrix entry is not integral");
      r(i, j) = numerator_of(m(i, j));
    }
  return r;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, {}};
  RationalMatrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    const Rational inv = 1 / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    res.pivots.push_back(c);
    ++row;
  }
  return res;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) throw InvalidInput("rank of a matrix with a zero dimension");
  return rref(m).rank();
}

std::vector<RatVector> canonical_row_basis(const RationalMatrix& m) {
  std::vector<RatVector> out;
  if (m.empty()) return out;
  auto r = rref(m);
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

KernelBasis kernel_basis(const RationalMatrix& m, Side side) {
  if (m.empty()) throw InvalidInput("kernel of a matrix with a zero dimension");
  const RationalMatrix a = side == Side::Right ? m : m.transpose();
  const auto r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  RationalMatrix raw(0, a.cols());
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    raw.append_row(v);
  }
  KernelBasis kb;
  kb.side = side;
  if (raw.rows() > 0) kb.vectors = canonical_row_basis(raw);
  return kb;
}

std::optional<RatVector> solve(const RationalMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw InvalidInput("solve: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto r = rref(aug);
  RatVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  return numerator_of(determinant(to_rational(m)));
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw InvalidInput("inverse of a singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const Integer d = determinant(m);
  if (d != 1 && d != -1) throw InvalidInput("matrix is not unimodular");
  return to_integer(inverse(to_rational(m)));
}

RatVector RowSpace::reduce(RatVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * basis_[i][j];
  }
  return v;
}

bool RowSpace::add(const RatVector& v) {
  if (v.size() != dim_) throw InvalidInput("RowSpace: vector of wrong length");
  RatVector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  for (auto& b : basis_) {
    const Rational f = b[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) b[j] -= f * r[j];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const RatVector& v) const {
  if (v.size() != dim_) throw InvalidInput("RowSpace: vector of wrong length");
  const RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm hf{m, IntegerMatrix::identity(m.rows()), 0};
  IntegerMatrix& h = hf.h;
  IntegerMatrix& u = hf.u;
  std::size_t row = 0;
  for (std::size_t c = 0; c < h.cols() && row < h.rows(); ++c) {
    // Euclid on column c among rows >= row
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs_of(h(i, c)) < abs_of(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = floor_div(h(i, c), h(row, c));
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer q = floor_div(h(i, c), h(row, c));
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  hf.rank = row;
  return hf;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  if (m.empty()) throw InvalidInput("Smith form of a matrix with a zero dimension");
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t nr = a.rows(), nc = a.cols();

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    a.swap_rows(t, i);
    u.swap_rows(t, i);
    a.swap_cols(t, j);
    v.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    std::size_t bi = nr, bj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a(i, j) != 0 && (bi == nr || abs_of(a(i, j)) < abs_of(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == nr) break;
    move_to_pivot(t, bi, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = floor_div(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = floor_div(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // bring the smallest remaining entry of row/column t to the pivot
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < nr; ++i)
          if (a(i, t) != 0 && abs_of(a(i, t)) < abs_of(a(bi2, bj2))) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(t, j) != 0 && abs_of(a(t, j)) < abs_of(a(bi2, bj2))) {
            bi2 = t;
            bj2 = j;
          }
        move_to_pivot(t, bi2, bj2);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm sf{std::move(u), std::move(a), std::move(v), {}};
  for (std::size_t t = 0; t < std::min(nr, nc); ++t)
    if (sf.d(t, t) != 0) sf.divisors.push_back(sf.d(t, t));
  return sf;
}

bool is_saturated(const IntegerMatrix& l) {
  const auto sf = smith_normal_form(l);
  if (sf.divisors.size() < l.rows()) throw InvalidInput("dependent generators");
  return std::all_of(sf.divisors.begin(), sf.divisors.end(),
                     [](const Integer& d) { return d == 1; });
}

Integer lattice_index(const IntegerMatrix& m) {
  Integer idx = 1;
  for (const auto& d : smith_normal_form(m).divisors) idx *= d;
  return idx;
}

IntegerMatrix integral_kernel(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return IntegerMatrix(0, 0);
  if (m.rows() == 0) return IntegerMatrix::identity(n);
  const auto sf = smith_normal_form(m);
  const std::size_t r = sf.divisors.size();
  if (r == n) return IntegerMatrix(0, n);
  IntegerMatrix raw(n - r, n);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) raw(j - r, i) = sf.v(i, j);
  const auto hf = hermite_normal_form(raw);
  return hf.h.row_block(0, hf.rank);
}

IntegerMatrix lattice_coordinate_map(const IntegerMatrix& basis) {
  const std::size_t d = basis.rows();
  const auto hf = hermite_normal_form(basis.transpose());
  const auto& h = hf.h;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != (i == j && i < d ? 1 : 0))
        throw InvalidInput("lattice basis is not saturated or not independent");
  return hf.u;
}

IntegerMatrix complete_to_unimodular(const IntVector& primitive) {
  IntegerMatrix b(1, primitive.size());
  for (std::size_t j = 0; j < primitive.size(); ++j) b(0, j) = primitive[j];
  return unimodular_inverse(lattice_coordinate_map(b)).transpose();
}

namespace {

Rational form_product(const RationalMatrix& q, const RatVector& x, const RatVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational t = 0;
    for (std::size_t j = 0; j < y.size(); ++j) t += q(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

Integer round_nearest(const Rational& q) { return floor_of(q + Rational(1, 2)); }

}  // namespace

IntegerMatrix lll_reduce(const IntegerMatrix& basis, const RationalMatrix& form) {
  IntegerMatrix b = basis;
  const std::size_t n = b.rows();
  if (n < 2) return b;
  const Rational delta(3, 4);

  std::vector<RatVector> star(n);
  std::vector<Rational> norms(n);
  std::vector<RatVector> mu(n, RatVector(n, Rational(0)));
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      RatVector bi = to_rational(b.row(i));
      star[i] = bi;
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = norms[j] == 0 ? Rational(0) : form_product(form, bi, star[j]) / norms[j];
        for (std::size_t l = 0; l < bi.size(); ++l) star[i][l] -= mu[i][j] * star[j][l];
      }
      norms[i] = form_product(form, star[i], star[i]);
    }
  };

  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer q = round_nearest(mu[k][jj]);
      if (q != 0) {
        b.add_row_multiple(k, jj, -q);
        gram_schmidt();
      }
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      b.swap_rows(k, k - 1);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace fundform
