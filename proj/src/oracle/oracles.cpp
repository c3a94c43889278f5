#include "fundform/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fundform::oracle {

namespace {

// Bareiss on a copy; returns (rank, determinant of the leading block when square and full rank).
std::pair<std::size_t, Integer> bareiss(IntegerMatrix a) {
  const std::size_t n = a.rows(), c = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col < c && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < c; ++j) std::swap(a(piv, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  Integer det = 0;
  if (n == c && r == n) det = sign * a(n - 1, n - 1);
  return {r, det};
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::size_t bareiss_rank(const IntegerMatrix& m) { return bareiss(m).first; }

std::size_t bareiss_rank(const RationalMatrix& m) {
  IntegerMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, denominator_of(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = numerator_of(m(i, j) * den);
  }
  return bareiss_rank(a);
}

Integer bareiss_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss(m).second;
}

ScanWidth scan_width(const std::vector<IntVector>& vertices, int radius) {
  const std::size_t k = vertices.front().size();
  ScanWidth best{-1, {}};
  IntVector v(k, Integer(-radius));
  while (true) {
    if (content(v) == 1) {
      Integer lo = dot(v, vertices[0]), hi = lo;
      for (const auto& x : vertices) {
        const Integer d = dot(v, x);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      if (best.width < 0 || hi - lo < best.width) best = {hi - lo, v};
    }
    std::size_t i = 0;
    while (i < k && v[i] == radius) v[i++] = -radius;
    if (i == k) break;
    ++v[i];
  }
  return best;
}

bool in_hull(const std::vector<IntVector>& vertices, const IntVector& x) {
  const std::size_t k = x.size();
  bool inside = false;
  for_each_subset(vertices.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
    if (inside) return;
    IntegerMatrix m(k + 1, k + 1);
    for (std::size_t c = 0; c <= k; ++c) {
      for (std::size_t r = 0; r < k; ++r) m(r, c) = vertices[idx[c]][r];
      m(k, c) = 1;
    }
    const Integer det = bareiss_determinant(m);
    if (det == 0) return;
    // Cramer: every barycentric coordinate det(M_c) / det must be >= 0
    for (std::size_t c = 0; c <= k; ++c) {
      IntegerMatrix mc = m;
      for (std::size_t r = 0; r < k; ++r) mc(r, c) = x[r];
      mc(k, c) = 1;
      const Integer dc = bareiss_determinant(mc);
      if ((dc < 0 && det > 0) || (dc > 0 && det < 0)) return;
    }
    inside = true;
  });
  return inside;
}

std::vector<IntVector> box_scan_points(const std::vector<IntVector>& vertices) {
  const std::size_t k = vertices.front().size();
  IntVector lo = vertices.front(), hi = lo;
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (in_hull(vertices, x)) out.push_back(x);
    std::size_t i = 0;
    while (i < k && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == k) break;
    ++x[i];
  }
  return out;
}

Integer minor_gcd(const IntegerMatrix& m) {
  const std::size_t r = bareiss_rank(m);
  if (r == 0) return 0;
  Integer g = 0;
  for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
      IntegerMatrix sub(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, bareiss_determinant(sub));
    });
  });
  return g;
}

bool saturated_by_minors(const IntegerMatrix& m) { return minor_gcd(m) == 1; }

bool is_integral_kernel_of(const IntegerMatrix& m, const IntegerMatrix& k) {
  const std::size_t expected = m.cols() - (m.rows() == 0 ? 0 : bareiss_rank(m));
  if (k.rows() != expected) return false;
  if (expected == 0) return true;
  if (k.cols() != m.cols()) return false;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (dot(m.row(r), k.row(i)) != 0) return false;
  return bareiss_rank(k) == expected && saturated_by_minors(k);
}

int vanishing_degree_by_rank(const std::vector<IntVector>& points) {
  const std::size_t k = points.front().size();
  for (int d = 1;; ++d) {
    std::vector<std::vector<int>> monos;
    std::vector<int> e(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == k) {
        monos.push_back(e);
        return;
      }
      for (int a = 0; a <= left; ++a) {
        e[i] = a;
        rec(i + 1, left - a);
      }
      e[i] = 0;
    };
    rec(0, d);
    if (monos.size() <= points.size()) {
      IntegerMatrix ev(monos.size(), points.size());
      for (std::size_t r = 0; r < monos.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c) {
          Integer v = 1;
          for (std::size_t i = 0; i < k; ++i)
            for (int t = 0; t < monos[r][i]; ++t) v *= points[c][i];
          ev(r, c) = v;
        }
      if (bareiss_rank(ev) < monos.size()) return d;
    } else {
      return d;
    }
  }
}

}  // namespace fundform::oracle
