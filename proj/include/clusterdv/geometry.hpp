#pragma once

#include <array>

#include "clusterdv/cartan.hpp"

namespace clusterdv {

/// Polygon model for the classical types: an (n+3)-gon for A, a centrally
/// symmetric (2n+2)-gon for B and C.
struct PolygonModel {
  CartanFamily family;
  int rank = 0;
  int vertices = 0;
};

PolygonModel polygon_model(CartanFamily family, int rank);

/// One diagonal object: a plain diagonal for type A, and for B/C either a
/// centrally symmetric pair {rep, mirror} or a long diagonal (diameter,
/// where mirror == rep).
struct DiagObj {
  std::array<int, 2> rep;
  std::array<int, 2> mirror;
  bool is_long = false;
};

/// All diagonal objects in canonical order; their count is N + n.
std::vector<DiagObj> polygon_objects(const PolygonModel& model);

/// Strict interleaving of endpoints on the cycle; shared endpoints never cross.
bool segments_cross(int vertices, const std::array<int, 2>& a, const std::array<int, 2>& b);

/// Crossing number of delta with respect to theta; -1 when the objects are
/// equal. Long diagonals count doubled in type B and single in type C.
Int crossing_number(const PolygonModel& model, const DiagObj& theta, const DiagObj& delta);

/// Maximal sets of pairwise non-crossing objects; all have size rank.
std::vector<std::vector<int>> enumerate_geometric_clusters(const PolygonModel& model,
                                                           const std::vector<DiagObj>& objects);

/// Componentwise crossing numbers of delta against the cluster's objects.
IntVec crossing_vector(const PolygonModel& model, const std::vector<DiagObj>& objects,
                       const std::vector<int>& cluster, int delta);

}  // namespace clusterdv
