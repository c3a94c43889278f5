#include "fundform/base_locus.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"
#include "fundform/jets.hpp"
#include "fundform/oracle.hpp"
#include "fundform/report_json.hpp"
#include "fundform/screen.hpp"
#include "fundform/surface2.hpp"
#include "fundform/wps.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace fundform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCondition = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  std::string weights;
  std::string direction;
  std::string fixture = FUNDFORM_DEFAULT_TABLE;
  int m = 0;
  std::size_t budget = 2'000'000;
  unsigned threads = 0;
  bool strict = false;
  bool oracle = false;
  bool no_certify = false;
};

struct Outcome {
  Json input;
  Json result;
  bool condition = true;  ///< the subcommand's verdict; false may map to exit 1
};

class JsonInputError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

Json read_input(const Options& o) {
  if (o.input_path.empty() == o.inline_json.empty())
    throw InvalidInput("give exactly one of --input or --json");
  std::string text = o.inline_json;
  if (!o.input_path.empty()) {
    std::ifstream in(o.input_path);
    if (!in) throw InvalidInput("cannot read input file " + o.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw JsonInputError("malformed JSON input");
  }
}

IntVector parse_int_list(const std::string& s, const char* what) {
  IntVector v;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      v.push_back(integer_from_json(Json(cell)));
    } catch (const InvalidInput&) {
      throw InvalidInput(std::string("malformed ") + what + " '" + s + "'");
    }
  }
  if (v.empty()) throw InvalidInput(std::string("empty ") + what);
  return v;
}

std::optional<IntVector> direction_option(const Options& o, std::size_t dim) {
  if (o.direction.empty()) return std::nullopt;
  IntVector v = parse_int_list(o.direction, "direction");
  if (v.size() != dim) throw InvalidInput("direction has wrong dimension");
  return make_direction(v);
}

Json options_echo(const Options& o) {
  Json j = Json::object();
  if (o.m) j["m"] = o.m;
  if (!o.direction.empty()) j["direction"] = o.direction;
  j["budget"] = o.budget;
  j["oracle"] = o.oracle;
  return j;
}

Outcome run_points(const Options& o) {
  if (o.m < 1) throw InvalidInput("points needs --m >= 1");
  const Json in = read_input(o);
  const PointConfig s = points_from_json(in);
  const auto dir = direction_option(o, s.dim);
  Outcome out{{{"data", in}, {"options", options_echo(o)}}, Json::object()};
  Json& r = out.result;

  const JetSystem js = build_jets(s, o.m);
  Json jr = Json::array(), lr = Json::array();
  for (auto x : js.j_ranks) jr.push_back(x);
  for (auto x : js.lt_ranks) lr.push_back(x);
  r["n"] = s.size() - 1;
  r["k"] = s.dim;
  r["differences_generate"] = s.differences_generate;
  r["min_vanishing_degree"] = min_vanishing_degree(s);
  r["jets"] = {{"order", o.m}, {"j_ranks", jr}, {"lt_ranks", lr}};
  r["h0"] = h0(s, o.m);
  r["expected_h0"] = to_json(expected_h0(s.size() - 1, s.dim, o.m));
  r["is_special"] = is_special(s, o.m);
  const FundamentalForm ff = fundamental_form(s, o.m);
  r["fundamental_form"] = to_json(ff);
  if (s.dim == 2) {
    if (ff.dimension() == 0)
      r["base_locus"] = nullptr;
    else
      r["base_locus"] = to_json(base_locus_k2(ff));
  }
  out.condition = r["is_special"].get<bool>();
  if (dir) {
    const BasePointResult bp = is_base_point(s, o.m, *dir);
    const bool via_form = is_base_point_via_form(ff, *dir);
    r["base_point"] = {{"direction", to_json(*dir)},
                       {"base_point", bp.base_point},
                       {"via_form", via_form},
                       {"agree", bp.base_point == via_form},
                       {"witness", bp.witness ? to_json(*bp.witness) : Json(nullptr)}};
    out.condition = bp.base_point;
  }
  if (o.oracle) {
    Json diffs = Json::array();
    for (int q = 0; q <= o.m; ++q) {
      if (oracle::bareiss_rank(js.j_block(q)) != js.j_ranks[static_cast<std::size_t>(q)])
        diffs.push_back("rank J_" + std::to_string(q));
      if (oracle::bareiss_rank(js.lt_block(q)) != js.lt_ranks[static_cast<std::size_t>(q)])
        diffs.push_back("rank Lt(J_" + std::to_string(q) + ")");
    }
    if (oracle::vanishing_degree_by_rank(s.points) != r["min_vanishing_degree"].get<int>())
      diffs.push_back("min_vanishing_degree");
    r["oracle"] = {{"agree", diffs.empty()}, {"differences", diffs}};
    if (!diffs.empty()) out.condition = false;
  }
  return out;
}

Outcome run_polytope(const Options& o) {
  const Json in = read_input(o);
  const LatticePolytope p = polytope_from_json(in);
  const auto dir = direction_option(o, p.dim());
  Outcome out{{{"data", in}, {"options", options_echo(o)}}, Json::object()};
  Json& r = out.result;
  r["dim"] = p.dim();
  r["vertices"] = to_json(p.vertices());
  r["affine_dimension"] = p.affine_dimension();
  r["full_dimensional"] = p.is_full_dimensional();
  r["lattice_point_count"] = p.lattice_points(o.budget).size();
  const LatticeWidth lw = lattice_width(p, o.budget);
  r["lattice_width"] = to_json(lw);
  r["pseudonef_bound"] = to_json(lw.width);
  out.condition = lw.certified;
  if (dir) {
    r["width_in_direction"] = to_json(width_in_direction(p, *dir));
    if (p.is_full_dimensional()) {
      const CorollaryReport c = corollary_check(p, *dir);
      r["corollary"] = to_json(c);
      out.condition = c.passed();
    }
  }
  if (o.m > 0) {
    try {
      const WidthBasePoint wb = width_base_point(p, o.m);
      r["width_base_point"] = {{"applicable", true}, {"width", to_json(wb.width)}, {"witness", to_json(wb.witness)}};
    } catch (const HypothesisFailed& e) {
      r["width_base_point"] = {{"applicable", false}, {"reason", e.what()}};
    }
  }
  if (o.oracle && p.is_full_dimensional()) {
    Json diffs = Json::array();
    const auto scan = oracle::scan_width(p.vertices(), 10);
    if (lw.certified ? scan.width != lw.width : scan.width < lw.width) diffs.push_back("lattice_width");
    if (oracle::box_scan_points(p.vertices()).size() != p.lattice_points(o.budget).size())
      diffs.push_back("lattice_point_count");
    r["oracle"] = {{"agree", diffs.empty()}, {"scan_width", to_json(scan.width)}, {"differences", diffs}};
    if (!diffs.empty()) out.condition = false;
  }
  return out;
}

Outcome run_classify(const Options& o) {
  const Json in = read_input(o);
  const LatticePolytope p = polytope_from_json(in);
  if (p.dim() != 2) throw InvalidInput("classify needs \"dim\": 2");
  Outcome out{{{"data", in}, {"options", options_echo(o)}}, Json::object()};
  const PolygonClass c = classify(p);
  out.result = to_json(c);
  out.result["lattice_point_count"] = p.lattice_points(o.budget).size();
  out.result["lattice_width"] = to_json(lattice_width(p, o.budget).width);
  out.condition = c.type != PolygonType::NotSpecial;
  if (o.oracle && c.type != PolygonType::NotSpecial) {
    std::vector<IntVector> img;
    for (const auto& x : p.lattice_points(o.budget)) {
      IntVector y = c.transform_u * x;
      y[0] += c.transform_t[0];
      y[1] += c.transform_t[1];
      img.push_back(y);
    }
    std::sort(img.begin(), img.end());
    auto nf = oracle::box_scan_points(normal_form_vertices(c.type, c.a, c.b));
    std::sort(nf.begin(), nf.end());
    const bool agree = img == nf && determinant(c.transform_u) * determinant(c.transform_u) == 1;
    out.result["oracle"] = {{"agree", agree}};
    if (!agree) out.condition = false;
  }
  return out;
}

ScreenOptions screen_options(const Options& o) {
  ScreenOptions so;
  so.certify_width = !o.no_certify;
  so.width_budget = o.budget;
  return so;
}

Json screen_oracle(const ScreenReport& r) {
  Json diffs = Json::array();
  std::vector<IntVector> rows;
  for (const auto& b : r.binomials) rows.push_back(b.u);
  const IntegerMatrix l = IntegerMatrix::from_rows(rows);
  if (oracle::saturated_by_minors(l) != r.nef.saturation_ok) diffs.push_back("saturation");
  const IntegerMatrix first_two = IntegerMatrix::from_rows({rows[0], rows[1]});
  if (!oracle::is_integral_kernel_of(first_two, IntegerMatrix::from_rows({r.weights.weights, r.v_tilde})))
    diffs.push_back("v_tilde");
  const auto scan = oracle::scan_width(r.projected_vertices, 10);
  if (scan.width < r.m) diffs.push_back("width");
  return {{"agree", diffs.empty()}, {"scan_width", to_json(scan.width)}, {"differences", diffs}};
}

Outcome run_screen(const Options& o) {
  IntVector weights;
  Json data;
  if (!o.weights.empty()) {
    if (!o.input_path.empty() || !o.inline_json.empty()) throw InvalidInput("give --weights or an input, not both");
    weights = parse_int_list(o.weights, "weights");
    data = {{"weights", to_json(weights)}};
  } else {
    data = read_input(o);
    if (!data.is_object() || !data.contains("weights")) throw InvalidInput("missing field 'weights'");
    if (!data["weights"].is_array()) throw InvalidInput("'weights' must be an array");
    weights = vector_from_json(data["weights"], data["weights"].size());
  }
  const WeightVector w = WeightVector::make(weights);
  Json opts = options_echo(o);
  opts["certify_width"] = !o.no_certify;
  Outcome out{{{"data", data}, {"options", opts}}, Json::object()};
  try {
    const ScreenReport r = screen(w, screen_options(o));
    out.result = to_json(r);
    out.condition = r.verdict == Verdict::NefNotSemiample;
    if (o.oracle) {
      out.result["oracle"] = screen_oracle(r);
      if (!out.result["oracle"]["agree"].get<bool>()) out.condition = false;
    }
  } catch (const StageError& e) {
    out.result = {{"weights", to_json(weights)},
                  {"verdict", to_string(Verdict::Inconclusive)},
                  {"error", {{"stage", e.stage()}, {"message", e.what()}}}};
    out.condition = false;
  }
  return out;
}

unsigned thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("FUNDFORM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Outcome run_table(const Options& o) {
  const auto rows = load_table(o.fixture);
  Json opts = options_echo(o);
  opts["certify_width"] = !o.no_certify;
  Outcome out{{{"data", {{"fixture_rows", rows.size()}}}, {"options", opts}}, Json::object()};
  const auto results = reproduce_table(rows, screen_options(o), thread_count(o));
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& t : results) {
    Json row = {{"weights", to_json(t.row.weights)}, {"m_expected", to_json(t.row.m)}};
    bool pass = t.pass;
    if (t.report) {
      row["m"] = to_json(t.report->m);
      row["verdict"] = to_string(t.report->verdict);
      row["orientation"] = t.report->orientation;
      row["binomials"] = t.report->binomials.size();
      row["certified_width"] = t.report->certified_width ? to_json(*t.report->certified_width) : Json(nullptr);
      if (o.oracle) {
        row["oracle"] = screen_oracle(*t.report);
        if (!row["oracle"]["agree"].get<bool>()) pass = false;
      }
    } else {
      row["error"] = t.error;
    }
    row["pass"] = pass;
    if (pass) ++passed;
    list.push_back(row);
  }
  out.result = {{"rows", list},
                {"total", results.size()},
                {"passed", passed},
                {"summary", std::to_string(passed) + "/" + std::to_string(results.size()) + " pass"}};
  out.condition = passed == results.size();
  return out;
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat(x); });
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << key << ": " << scalar(v) << "\n";
      } else {
        os << pad << key << ":\n";
        render_text(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        os << pad << "- " << scalar(v) << "\n";
      } else {
        os << pad << "-\n";
        render_text(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

void emit(const Options& o, const std::string& command, const Outcome& out) {
  const Json doc = envelope(command, out.input, out.result);
  if (o.format == "text")
    render_text(std::cout, doc, 0);
  else
    std::cout << doc.dump(2) << "\n";
}

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fundamental forms, lattice widths and weighted projective space screening"};
  app.set_version_flag("--version", std::string(FUNDFORM_VERSION));
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("-i,--input", o.input_path, "input JSON file");
      sub->add_option("--json", o.inline_json, "inline input JSON");
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", o.budget, "enumeration budget")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", o.strict, "exit 1 when the computed condition fails");
    sub->add_flag("--oracle", o.oracle, "cross-check against brute-force oracles");
  };

  auto* points = app.add_subcommand("points", "jets, speciality, fundamental form and base points of S");
  common(points, true);
  points->add_option("--m", o.m, "order m")->required()->check(CLI::PositiveNumber);
  points->add_option("--direction", o.direction, "point [v] of P^(k-1), comma separated");

  auto* polytope = app.add_subcommand("polytope", "lattice width, pseudonef bound and corollary check");
  common(polytope, true);
  polytope->add_option("--direction", o.direction, "direction for the corollary check, comma separated");
  polytope->add_option("--m", o.m, "order for the hyperplane-stack witness")->check(CLI::PositiveNumber);

  auto* cls = app.add_subcommand("classify", "classify a polygon whose points lie on a conic");
  common(cls, true);

  auto* scr = app.add_subcommand("screen", "screen one weighted projective space");
  common(scr, true);
  scr->add_option("--weights", o.weights, "weights a1,a2,a3,a4");
  scr->add_flag("--no-certify-width", o.no_certify, "skip the lattice width certificate");

  auto* table = app.add_subcommand("table", "reproduce the bundled table");
  common(table, false);
  table->add_option("--fixture", o.fixture, "table CSV a1,a2,a3,a4,m");
  table->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--no-certify-width", o.no_certify, "skip the lattice width certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome out;
    if (command == "points") out = run_points(o);
    else if (command == "polytope") out = run_polytope(o);
    else if (command == "classify") out = run_classify(o);
    else if (command == "screen") out = run_screen(o);
    else out = run_table(o);
    emit(o, command, out);
    return o.strict && !out.condition ? kExitCondition : kExitOk;
  } catch (const BudgetExceeded& e) {
    emit_error("budget", e.what());
    return kExitBudget;
  } catch (const JsonInputError& e) {
    emit_error("json", e.what());
    return kExitInput;
  } catch (const InvalidInput& e) {
    emit_error("input", e.what());
    return kExitInput;
  } catch (const HypothesisFailed& e) {
    emit_error("hypothesis", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 4;
  }
}
