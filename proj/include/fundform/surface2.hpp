#pragma once

#include "fundform/matrix.hpp"
#include "fundform/polytope.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fundform {

enum class PolygonType { I, II, III, IV, NotSpecial };

std::string to_string(PolygonType t);

/// Classification of a lattice polygon whose points lie on a conic. The map
/// x -> transform_u * x + transform_t carries the input onto the normal form.
struct PolygonClass {
  PolygonType type = PolygonType::NotSpecial;
  int a = 0;
  int b = 0;
  IntegerMatrix transform_u = IntegerMatrix::identity(2);
  LatticePoint transform_t{Integer(0), Integer(0)};
};

/// Vertices of the normal forms:
///   I   (0,0), (0,1), (a,1), (b,0)
///   II  (0,0), (0,1), (a,0)
///   III (a,0), (0,1), (-b,0), (0,-1)
///   IV  (a,0), (0,1), (-b,0), (-1,-1)
std::vector<LatticePoint> normal_form_vertices(PolygonType t, int a, int b);

/// Parameter ranges as listed in the classification table.
bool in_table_range(PolygonType t, int a, int b);

/// Every (a, b) whose normal form has at least six lattice points. This is
/// slightly larger than the table for types II and III (a = 4 and a + b = 3).
bool in_classified_range(PolygonType t, int a, int b);

/// A collinear triple among the points, if any (first in index order).
std::optional<std::array<LatticePoint, 3>> three_collinear(const PointConfig& s);

/// Requires a full-dimensional polygon with at least six lattice points.
PolygonClass classify(const LatticePolytope& p);

struct TeoDim2Report {
  Integer lattice_width;
  bool width_one = false;
  bool base_point = false;          ///< second fundamental form has a base point
  bool base_curve_implied = false;  ///< follows from width one, not computed
  bool consistent = false;          ///< width_one == base_point
};

TeoDim2Report teo_dim2_suite(const LatticePolytope& p);

}  // namespace fundform
