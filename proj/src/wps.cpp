#include "fundform/wps.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace fundform {

namespace {

bool in_semigroup(const Integer& target, const IntVector& gens) {
  if (target > 1'000'000) return false;
  const auto n = static_cast<std::size_t>(target);
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::size_t s = 1; s <= n; ++s)
    for (const auto& g : gens) {
      const auto gi = static_cast<std::size_t>(g);
      if (gi <= s && reach[s - gi]) {
        reach[s] = 1;
        break;
      }
    }
  return reach[n];
}

void monomials_rec(const IntVector& w, std::size_t i, const Integer& rem, IntVector& cur,
                   std::vector<IntVector>& out) {
  if (i + 1 == w.size()) {
    if (rem % w[i] == 0) {
      cur[i] = rem / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (Integer e = rem / w[i]; e >= 0; --e) {
    cur[i] = e;
    monomials_rec(w, i + 1, rem - e * w[i], cur, out);
  }
}

}  // namespace

WeightVector WeightVector::make(const IntVector& weights) {
  if (weights.size() != 4) throw InvalidInput("expected four weights");
  for (const auto& a : weights)
    if (a < 1) throw InvalidInput("weights must be positive");
  if (content(weights) != 1) throw InvalidInput("weights must have gcd 1");
  WeightVector w{weights, true};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    IntVector others;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (j != i) others.push_back(weights[j]);
    if (in_semigroup(weights[i], others)) w.well_formed = false;
  }
  return w;
}

std::string BinomialGenerator::to_string() const {
  auto mono = [](const IntVector& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + fundform::to_string(e[i]);
    }
    return s.empty() ? std::string("1") : s;
  };
  return mono(plus) + " - " + mono(minus);
}

Integer weight_lcm(const WeightVector& w) {
  Integer l = 1;
  for (const auto& a : w.weights) l = lcm(l, a);
  return l;
}

LatticePolytope rr_polytope(const WeightVector& w) {
  const Integer l = weight_lcm(w);
  std::vector<LatticePoint> verts;
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    LatticePoint v(w.weights.size(), Integer(0));
    v[i] = l / w.weights[i];
    verts.push_back(std::move(v));
  }
  return LatticePolytope(w.weights.size(), verts);
}

std::vector<IntVector> weighted_monomials(const WeightVector& w, const Integer& d) {
  std::vector<IntVector> out;
  if (d < 0) return out;
  IntVector cur(w.weights.size(), Integer(0));
  monomials_rec(w.weights, 0, d, cur, out);
  return out;
}

std::vector<BinomialGenerator> binomial_candidates(const WeightVector& w, const Integer& d) {
  const auto monos = weighted_monomials(w, d);
  std::vector<BinomialGenerator> out;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = i + 1; j < monos.size(); ++j) {
      bool disjoint = true;
      for (std::size_t l = 0; l < monos[i].size(); ++l)
        if (monos[i][l] != 0 && monos[j][l] != 0) disjoint = false;
      if (!disjoint) continue;
      IntVector u(monos[i].size());
      for (std::size_t l = 0; l < u.size(); ++l) u[l] = monos[i][l] - monos[j][l];
      if (content(u) != 1) continue;
      out.push_back({u, monos[i], monos[j], d});
    }
  return out;
}

std::vector<BinomialGenerator> lowest_degree_binomials(const WeightVector& w, std::size_t count,
                                                       const Integer& degree_budget) {
  Integer budget = degree_budget;
  if (budget <= 0)
    for (std::size_t i = 0; i < w.weights.size(); ++i)
      for (std::size_t j = i + 1; j < w.weights.size(); ++j)
        budget = std::max(budget, lcm(w.weights[i], w.weights[j]));
  std::vector<BinomialGenerator> chosen;
  RowSpace span(w.weights.size());
  for (Integer d = 1; d <= budget && chosen.size() < count; ++d)
    for (auto& b : binomial_candidates(w, d)) {
      if (chosen.size() == count) break;
      if (span.add(to_rational(b.u))) chosen.push_back(std::move(b));
    }
  if (chosen.size() < count) {
    std::ostringstream os;
    os << "found " << chosen.size() << " of " << count << " independent binomials up to degree " << budget;
    throw StageError("binomials", os.str());
  }
  return chosen;
}

IntVector width_direction(const WeightVector& w, const IntVector& u1, const IntVector& u2) {
  if (dot(u1, w.weights) != 0 || dot(u2, w.weights) != 0)
    throw InvalidInput("binomial exponent differences are not orthogonal to w");
  const IntegerMatrix k = integral_kernel(IntegerMatrix::from_rows({u1, u2}));
  if (k.rows() != 2) throw InvalidInput("u1 and u2 must be linearly independent");
  const auto c = solve(to_rational(k.transpose()), to_rational(w.weights));
  if (!c || !is_integral((*c)[0]) || !is_integral((*c)[1]))
    throw std::logic_error("w is not in the integral kernel");
  const Integer c1 = numerator_of((*c)[0]), c2 = numerator_of((*c)[1]);
  const auto eg = extended_gcd(c1, c2);
  if (eg.g != 1) throw std::logic_error("w is not primitive in the kernel lattice");
  IntVector vt(k.cols());
  for (std::size_t j = 0; j < vt.size(); ++j) vt[j] = -eg.y * k(0, j) + eg.x * k(1, j);

  const Integer a1 = w.weights[0];
  std::optional<IntVector> best;
  for (int s : {1, -1}) {
    IntVector t = vt;
    for (auto& x : t) x *= s;
    const Integer q = floor_div(t[0], a1);
    for (std::size_t j = 0; j < t.size(); ++j) t[j] -= q * w.weights[j];
    if (!best || t < *best) best = t;
  }
  return *best;
}

Projection project_to_3d(const LatticePolytope& rr, const WeightVector& w, const IntVector& v_tilde) {
  return project_to_3d(rr, w, v_tilde, integral_kernel(IntegerMatrix::from_rows({w.weights})));
}

Projection project_to_3d(const LatticePolytope& rr, const WeightVector& w, const IntVector& v_tilde,
                         const IntegerMatrix& basis) {
  if (basis.rows() + 1 != w.weights.size() || basis.cols() != w.weights.size())
    throw InvalidInput("projection basis has wrong shape");
  for (std::size_t r = 0; r < basis.rows(); ++r)
    if (dot(basis.row(r), w.weights) != 0) throw InvalidInput("projection basis is not orthogonal to w");
  const IntegerMatrix cmap = lattice_coordinate_map(basis);
  const LatticePoint origin = rr.vertices().front();
  std::vector<LatticePoint> ys;
  for (const auto& x : rr.vertices()) {
    IntVector dx(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) dx[j] = x[j] - origin[j];
    if (dot(dx, w.weights) != 0) throw InvalidInput("polytope does not lie in a w-hyperplane");
    IntVector y = cmap * dx;
    y.resize(basis.rows());
    ys.push_back(std::move(y));
  }
  return {LatticePolytope(basis.rows(), ys), basis * v_tilde, basis, origin};
}

FiberExtension extend_by_fibers(const WeightVector& w, std::vector<BinomialGenerator>& chosen,
                                const IntVector& v_tilde, const Integer& degree_bound,
                                std::size_t max_added) {
  FiberExtension ext{degree_bound, {}};
  for (Integer d = 1; d <= degree_bound; ++d) {
    std::map<Integer, std::vector<IntVector>> fibers;
    for (auto& a : weighted_monomials(w, d)) fibers[dot(a, v_tilde)].push_back(std::move(a));
    std::vector<BinomialGenerator> candidates;
    bool have_candidates = false;
    for (const auto& [key, members] : fibers) {
      if (members.size() < 2) continue;
      while (true) {
        // connected components under the moves +-u of the chosen binomials
        std::map<IntVector, std::size_t> comp;
        const std::set<IntVector> in_fiber(members.begin(), members.end());
        std::size_t ncomp = 0;
        for (const auto& s : members) {
          if (comp.count(s)) continue;
          std::vector<IntVector> stack{s};
          comp[s] = ncomp;
          while (!stack.empty()) {
            IntVector b = std::move(stack.back());
            stack.pop_back();
            for (const auto& g : chosen)
              for (int sg : {1, -1}) {
                IntVector c = b;
                bool nonneg = true;
                for (std::size_t j = 0; j < c.size(); ++j) {
                  c[j] += sg * g.u[j];
                  if (c[j] < 0) nonneg = false;
                }
                if (nonneg && in_fiber.count(c) && !comp.count(c)) {
                  comp[c] = ncomp;
                  stack.push_back(std::move(c));
                }
              }
          }
          ++ncomp;
        }
        if (ncomp <= 1) break;
        if (ext.added.size() >= max_added)
          throw StageError("fibers", "fiber of degree " + to_string(d) + " stays disconnected");
        if (!have_candidates) {
          candidates = binomial_candidates(w, d);
          have_candidates = true;
        }
        auto bridge = std::find_if(candidates.begin(), candidates.end(), [&](const BinomialGenerator& b) {
          return dot(b.u, v_tilde) == 0 && comp.count(b.plus) && comp.count(b.minus) &&
                 comp.at(b.plus) != comp.at(b.minus);
        });
        if (bridge == candidates.end())
          throw StageError("fibers", "no bridging binomial in degree " + to_string(d));
        chosen.push_back(*bridge);
        ext.added.push_back(*bridge);
      }
    }
  }
  return ext;
}

std::string to_string(Verdict v) {
  return v == Verdict::NefNotSemiample ? "nef_not_semiample" : "inconclusive";
}

namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(name) + ": " + e.what());
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

ScreenReport screen(const WeightVector& w, const ScreenOptions& options) {
  ScreenReport r;
  r.weights = w;
  r.lcm = weight_lcm(w);
  const LatticePolytope rr = stage("rr_polytope", [&] { return rr_polytope(w); });

  r.binomials = stage("binomials", [&] { return lowest_degree_binomials(w, 2, options.degree_budget); });
  std::set<Integer> chosen_degrees;
  for (const auto& b : r.binomials) chosen_degrees.insert(b.degree);
  for (const auto& d : chosen_degrees)
    for (const auto& c : binomial_candidates(w, d))
      if (std::none_of(r.binomials.begin(), r.binomials.end(), [&](const BinomialGenerator& b) { return b.u == c.u; }))
        r.alternatives.push_back(c);

  r.v_tilde = stage("width_direction",
                    [&] { return width_direction(w, r.binomials[0].u, r.binomials[1].u); });
  for (const auto& x : rr.vertices()) r.vertex_values.push_back(dot(x, r.v_tilde));
  {
    Integer lo = r.vertex_values.front(), hi = lo;
    for (const auto& x : r.vertex_values) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    r.m = hi - lo;
  }
  if (r.m < 1) throw StageError("width_direction", "v_tilde is constant on the polytope");

  // subtorus certificate: saturate the binomial lattice inside L_v if needed,
  // then make every low-degree fiber connected
  stage("fibers", [&] {
    IntegerMatrix l = IntegerMatrix::from_rows({r.binomials[0].u, r.binomials[1].u});
    std::size_t extra = 0;
    for (Integer d = 1; lattice_index(l) != 1 && extra < options.max_extra_binomials; ++d)
      for (const auto& c : binomial_candidates(w, d)) {
        if (dot(c.u, r.v_tilde) != 0) continue;
        IntegerMatrix trial = l;
        trial.append_row(c.u);
        if (lattice_index(trial) < lattice_index(l)) {
          l = trial;
          r.binomials.push_back(c);
          r.extension_reason = "saturation";
          if (++extra == options.max_extra_binomials || lattice_index(l) == 1) break;
        }
      }
    const Integer bound = (r.lcm - 1) / r.m;
    const auto ext = extend_by_fibers(w, r.binomials, r.v_tilde, bound, options.max_extra_binomials);
    if (!ext.added.empty())
      r.extension_reason += (r.extension_reason.empty() ? "" : ",") + std::string("disconnected_fiber");
    return 0;
  });

  const Projection proj = stage("projection", [&] { return project_to_3d(rr, w, r.v_tilde); });
  r.projected_vertices = proj.polytope.vertices();
  if (width_in_direction(proj.polytope, proj.direction) != r.m)
    throw StageError("projection", "projection changed the width");

  if (options.certify_width) {
    const auto lw = stage("lattice_width", [&] { return lattice_width(proj.polytope, options.width_budget); });
    if (lw.certified) r.certified_width = lw.width;
  }

  r.corollary = stage("corollary", [&] {
    CorollaryReport c = corollary_check(proj.polytope, proj.direction);
    r.orientation = 1;
    if (!c.passed()) {
      IntVector neg = proj.direction;
      for (auto& x : neg) x = -x;
      CorollaryReport c2 = corollary_check(proj.polytope, neg);
      if (c2.passed()) {
        r.orientation = -1;
        return c2;
      }
    }
    return c;
  });
  r.direction = r.corollary.direction;

  r.nef = stage("nef", [&] {
    std::vector<Integer> degrees;
    std::vector<IntVector> rows;
    for (const auto& b : r.binomials) {
      degrees.push_back(b.degree);
      rows.push_back(b.u);
    }
    return nef_check(degrees, r.lcm, r.m, IntegerMatrix::from_rows(rows));
  });

  const bool width_ok = !r.certified_width || *r.certified_width == r.m;
  r.verdict = r.corollary.passed() && r.nef.nef && width_ok ? Verdict::NefNotSemiample : Verdict::Inconclusive;
  return r;
}

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open table fixture " + path);
  std::vector<TableRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("a1", 0) == 0) continue;
    }
    std::vector<Integer> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        vals.emplace_back(cell);
      } catch (const std::exception&) {
        throw InvalidInput("malformed table cell '" + cell + "'");
      }
    }
    if (vals.size() != 5) throw InvalidInput("table row must have five columns: " + line);
    rows.push_back({IntVector(vals.begin(), vals.begin() + 4), vals[4]});
  }
  return rows;
}

std::vector<TableResult> reproduce_table(const std::vector<TableRow>& rows, const ScreenOptions& options,
                                         unsigned threads) {
  std::vector<TableResult> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      TableResult& res = results[i];
      res.row = rows[i];
      try {
        res.report = screen(WeightVector::make(rows[i].weights), options);
        res.m_match = res.report->m == rows[i].m;
        res.pass = res.m_match && res.report->verdict == Verdict::NefNotSemiample;
      } catch (const std::exception& e) {
        res.error = e.what();
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace fundform
