#pragma once

// Structural classification of maximal lattice-free simplices: unimodular
// equivalence with the dilated standard simplex, the symmetric-body volume
// relation, 2-partitions of the boundary lattice points, and the
// lattice-preserving hyperplane slice.

#include "liftreg/lifting.hpp"

namespace liftreg {

struct UnimodEquiv {
  IntMat u;                             // |det u| = 1
  IntVec b;                             // x -> u x + b
  std::vector<std::size_t> vertex_map;  // image vertex index per standard vertex
};

/// Witness that s is the image of conv{0, m e^1, ..., m e^n} under an
/// affine unimodular map, or nullopt.
std::optional<UnimodEquiv> equiv_standard_simplex(const SimplicialPolytope& s, const Int& m);

/// Every facet has exactly one lattice point in its relative interior.
/// Requires a maximal lattice-free simplex.
bool one_point_per_facet(const SimplicialPolytope& p);

struct StructuralVerdict {
  BodyClass predicted;
  std::optional<UnimodEquiv> witness;
  bool cross_check = false;  // structural prediction matches the volume verdict
};

/// Structure-based unique/multiple prediction for a one-point-per-facet
/// maximal lattice-free simplex, cross-checked against the exact volume.
StructuralVerdict simplex_lifting_verdict(LiftingAnalyzer& analyzer);

struct SymmetricBodyReport {
  Rat vol_s;
  Rat vol_r0;
  bool relation_holds = false;          // vol_s = 2^n vol_r0 exactly
  bool lattice_free_interior = false;   // int(S) and Z^n meet only at 0
  bool minkowski_bound = false;         // vol_s <= 2^n
};

/// Builds the 0-symmetric parallelotope S of the base-vertex region and
/// verifies vol(S) = 2^n vol(R_0), int(S) cap Z^n = {0}, vol(S) <= 2^n.
SymmetricBodyReport symmetric_body_check(const SimplicialPolytope& s,
                                         std::size_t base_vertex);

struct TwoPartition {
  IntVec normal;  // primitive c; H1 = {c.x = d} supports the facet below
  Int offset;     // d; the body lies in {c.x >= d}
  std::size_t facet_on_h1;
  // true when every boundary lattice point lies on H1 or H2 = {c.x = d+1};
  // candidate hyperplanes are still returned when extra boundary points
  // exist off the two levels, since the slice criterion is cross-checked
  // against the exact volume verdict anyway.
  bool two_level = false;
};

/// First facet whose hyperplane is a lattice hyperplane, carries at least
/// two relative-interior lattice points, and whose adjacent-level slice is
/// a maximal lattice-free simplex section.
std::optional<TwoPartition> find_2partition(const SimplicialPolytope& p);

struct SliceResult {
  SimplicialPolytope slice;  // n-dimensional body with the induced lattice
  IntMat map;                // unimodular ambient map used (last row = normal)
  IntVec map_offset;
};

/// Slice of a body in R^{n+1} along the second partition hyperplane,
/// re-coordinatized so the induced lattice is exactly Z^n.
SliceResult slice_simplex(const SimplicialPolytope& body, const TwoPartition& part);

struct SlicedVerdict {
  BodyClass predicted;
  SimplicialPolytope slice;
  bool cross_check = false;
};

/// Unique/multiple prediction for a 2-partitionable simplex whose only
/// multi-point facet lies on H1, via the slice along H2.
SlicedVerdict partition_lifting_verdict(LiftingAnalyzer& analyzer);

}  // namespace liftreg
