#pragma once

#include "fundform/base_locus.hpp"
#include "fundform/jets.hpp"
#include "fundform/polytope.hpp"
#include "fundform/screen.hpp"
#include "fundform/surface2.hpp"
#include "fundform/wps.hpp"

#include "json.hpp"

#include <string>

namespace fundform {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& a);
/// "n" or "n/d".
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const std::vector<LatticePoint>& pts);

Json to_json(const LatticeWidth& lw);
Json to_json(const PolygonClass& c);
Json to_json(const FundamentalForm& ff);
Json to_json(const BaseLocusK2& bl);
Json to_json(const WitnessHypersurface& w);
Json to_json(const BinomialGenerator& b);
Json to_json(const CorollaryReport& r);
Json to_json(const NefReport& r);
Json to_json(const ScreenReport& r);

/// Reads an integer given as a JSON number or a decimal string.
Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j, std::size_t expected_size);

/// {"dim": k, "points": [[...], ...]}; throws InvalidInput on schema errors.
PointConfig points_from_json(const Json& j);
/// {"dim": k, "vertices": [[...], ...]}.
LatticePolytope polytope_from_json(const Json& j);

/// Wraps a result with the tool name, version, command and input echo.
Json envelope(const std::string& command, const Json& input, const Json& result);

}  // namespace fundform
