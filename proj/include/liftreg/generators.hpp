#pragma once

// Constructors for the example families: dilated standard simplices, the
// delta-parameterized 2-partitionable family, the cone-over-a-blown-up
// triangle bodies, and an exhaustive search for small maximal lattice-free
// triangles with classification tags.

#include "liftreg/polytope.hpp"

namespace liftreg {

/// conv{0, m e^1, ..., m e^n}. For m = n the result is verified maximal
/// lattice-free with one relative-interior lattice point per facet.
SimplicialPolytope standard_simplex(std::size_t n, const Int& m);

/// Simplex in R^{n+1} cut out by -x_i + delta_i x_{n+1} <= 0 (i <= n),
/// sum x_i + delta_{n+1} x_{n+1} <= n, and x_{n+1} >= -1. Validated
/// maximal lattice-free and 2-partitionable; never silently repaired.
SimplicialPolytope delta_family(std::size_t n, const RatVec& delta);

struct Type3Cone {
  SimplicialPolytope body;     // simplex in R^3
  std::size_t apex_index = 0;  // vertex off the big base facet
  std::vector<std::size_t> base_indices;  // base vertex per triangle vertex
  std::size_t base_facet = 0;
};

/// Cone over a one-point-per-side triangle with non-integral vertices
/// placed at height 1, truncated at height 0 where the cross-section is the
/// blowup-fold homothetic copy. The base facet is the only facet with more
/// than one relative-interior lattice point.
Type3Cone type3_cylinder_cone(const SimplicialPolytope& triangle, const Rat& blowup);

enum class TriangleType { kType1, kType2, kType3, kOther };

const char* triangle_type_name(TriangleType t);

struct TaggedSimplex {
  SimplicialPolytope body;
  std::vector<std::size_t> per_facet_relint;
  std::size_t integral_vertices = 0;
  TriangleType type = TriangleType::kOther;
};

/// Exhaustive scan over vertex triples with coordinates in (1/q) Z inside
/// [box_lo, box_hi]^2; keeps the maximal lattice-free triangles in
/// deterministic order. Desk scale only: q <= 4, box side <= 6.
std::vector<TaggedSimplex> search_simplices(long q, long box_lo, long box_hi);

}  // namespace liftreg
