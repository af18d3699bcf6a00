#ifndef MV_GEOMETRY_HPP
#define MV_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mv/rat.hpp"

namespace mv {

// Closed halfspace { x : normal . x <= offset }.  (normal, offset) is kept
// jointly primitive so equal halfspaces have identical representations.
struct Halfspace {
  VecZ normal;
  Int offset;
  bool operator==(const Halfspace& h) const { return normal == h.normal && offset == h.offset; }
};

// Exact convex polytope in ambient dimension 1..3, possibly of lower affine
// dimension.  vertices is the minimal V-representation, sorted
// lexicographically; facets are valid within the affine hull, which is cut
// out by hull_eqs (normal . x == offset).  rings carry the facet boundary
// cycles (2D: one ring, the hull cycle; 3D: one ring per facet, CCW as seen
// from outside) and are derived data, not part of polytope identity.
struct Polytope {
  int dim_ambient = 0;
  int dim_affine = -1;
  std::vector<VecQ> vertices;
  std::vector<Halfspace> facets;
  std::vector<Halfspace> hull_eqs;
  std::vector<std::vector<int>> rings;

  bool operator==(const Polytope& p) const {
    return dim_ambient == p.dim_ambient && vertices == p.vertices;
  }
  bool operator!=(const Polytope& p) const { return !(*this == p); }
  bool is_point() const { return dim_affine == 0; }
};

Polytope convex_hull(const std::vector<VecQ>& points);
Polytope point_polytope(const VecQ& p);
Polytope segment(const VecQ& a, const VecQ& b);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const VecQ& v);

bool contains_point(const Polytope& p, const VecQ& x);
bool contains(const Polytope& outer, const Polytope& inner);

// P cut by h; nullopt when the intersection is empty (distinct from a point).
std::optional<Polytope> clip(const Polytope& p, const Halfspace& h);

// Intersection by successive clipping; nullopt when empty.
std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

// Lebesgue volume in the ambient coordinate chart; 0 when dim_affine <
// dim_ambient.
Rat volume(const Polytope& p);

// All 1-faces as vertex index pairs (i < j).
std::vector<std::pair<int, int>> edges(const Polytope& p);

// Unique maximizer of direction . x over the vertices; throws when the
// maximum is attained twice, naming the tied vertices.
VecQ extreme_vertex(const Polytope& p, const VecQ& direction);

// max of normal . x over the polytope (support function).
Rat support_value(const Polytope& p, const VecQ& normal);

Halfspace make_halfspace(const VecQ& normal, const Rat& offset);

std::string vec_to_string(const VecQ& v);

}  // namespace mv

#endif
