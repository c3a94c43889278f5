#include "fundform/report_json.hpp"
#include "fundform/error.hpp"

#include <limits>

namespace fundform {

Json to_json(const Integer& a) {
  if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max())
    return a.convert_to<std::int64_t>();
  return to_string(a);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const IntegerMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const std::vector<LatticePoint>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(to_json(p));
  return j;
}

Json to_json(const LatticeWidth& lw) {
  return {{"width", to_json(lw.width)}, {"direction", to_json(lw.direction)}, {"certified", lw.certified}};
}

Json to_json(const PolygonClass& c) {
  return {{"type", to_string(c.type)},
          {"a", c.a},
          {"b", c.b},
          {"transform", {{"U", to_json(c.transform_u)}, {"t", to_json(c.transform_t)}}}};
}

Json to_json(const FundamentalForm& ff) {
  Json forms = Json::array();
  for (const auto& f : ff.forms()) forms.push_back(f.to_string("w", true));
  return {{"degree", ff.m}, {"dimension", ff.dimension()}, {"basis", forms}};
}

Json to_json(const BaseLocusK2& bl) {
  return {{"empty", bl.empty()}, {"rational_points", to_json(bl.rational_points)},
          {"irrational_degree", bl.irrational_degree}};
}

Json to_json(const WitnessHypersurface& w) {
  return {{"degree", w.m}, {"direction", to_json(w.direction)}, {"polynomial", w.polynomial().to_string("x", true)}};
}

Json to_json(const BinomialGenerator& b) {
  return {{"binomial", b.to_string()}, {"degree", to_json(b.degree)}, {"u", to_json(b.u)}};
}

Json to_json(const CorollaryReport& r) {
  Json j = {{"direction", to_json(r.direction)},
            {"min", to_json(r.min_value)},
            {"max", to_json(r.max_value)},
            {"lw", to_json(r.lw)},
            {"p_min", to_json(r.p_min)},
            {"p_max", to_json(r.p_max)},
            {"slice", to_json(r.slice.points)},
            {"slice_dimension", r.slice_dimension},
            {"slice_empty", r.slice_empty},
            {"cond1", r.cond1},
            {"cond2", r.cond2},
            {"cond3", r.cond3},
            {"verified", r.verified},
            {"passed", r.passed()}};
  if (r.witness) {
    j["witness"] = {{"h", r.witness->h.to_string("x")},
                    {"f", r.witness->f.to_string("x")},
                    {"g", r.witness->g.to_string("x")},
                    {"paraboloid", r.witness->paraboloid.to_string("x", true)},
                    {"hyperplane_count", to_json(r.witness->hyperplane_count)},
                    {"polynomial", r.witness->to_string()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const NefReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) degrees.push_back(to_json(d));
  return {{"degrees", degrees},
          {"bound", to_json(r.bound)},
          {"degrees_ok", r.degrees_ok},
          {"saturation_ok", r.saturation_ok},
          {"nef", r.nef}};
}

Json to_json(const ScreenReport& r) {
  Json bins = Json::array();
  for (const auto& b : r.binomials) bins.push_back(to_json(b));
  Json alts = Json::array();
  for (const auto& b : r.alternatives) alts.push_back(to_json(b));
  Json values = Json::array();
  for (const auto& v : r.vertex_values) values.push_back(to_json(v));
  return {{"weights", to_json(r.weights.weights)},
          {"well_formed", r.weights.well_formed},
          {"lcm", to_json(r.lcm)},
          {"binomials", bins},
          {"alternatives", alts},
          {"extension_reason", r.extension_reason},
          {"v_tilde", to_json(r.v_tilde)},
          {"vertex_values", values},
          {"m", to_json(r.m)},
          {"width_certified", r.certified_width.has_value()},
          {"certified_width", r.certified_width ? to_json(*r.certified_width) : Json(nullptr)},
          {"projected_vertices", to_json(r.projected_vertices)},
          {"direction", to_json(r.direction)},
          {"orientation", r.orientation},
          {"corollary", to_json(r.corollary)},
          {"nef", to_json(r.nef)},
          {"verdict", to_string(r.verdict)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
  if (j.size() != expected_size)
    throw InvalidInput("expected " + std::to_string(expected_size) + " coordinates, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

namespace {

std::size_t dim_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (!j.contains("dim")) throw InvalidInput("missing field 'dim'");
  const auto& d = j["dim"];
  if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw InvalidInput("'dim' must be a positive integer");
  return d.get<std::size_t>();
}

std::vector<LatticePoint> list_from_json(const Json& j, const char* field, std::size_t dim) {
  if (!j.contains(field)) throw InvalidInput(std::string("missing field '") + field + "'");
  const auto& a = j[field];
  if (!a.is_array() || a.empty()) throw InvalidInput(std::string("'") + field + "' must be a nonempty array");
  std::vector<LatticePoint> pts;
  for (const auto& p : a) pts.push_back(vector_from_json(p, dim));
  return pts;
}

}  // namespace

PointConfig points_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  return PointConfig::make(dim, list_from_json(j, "points", dim));
}

LatticePolytope polytope_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  return LatticePolytope(dim, list_from_json(j, "vertices", dim));
}

Json envelope(const std::string& command, const Json& input, const Json& result) {
  return {{"tool", "fundform"}, {"version", FUNDFORM_VERSION}, {"command", command}, {"input", input},
          {"result", result}};
}

}  // namespace fundform
