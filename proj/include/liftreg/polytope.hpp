#pragma once

// Simplicial-polytope data model: validated vertex/facet description with
// primitive integer facet inequalities, lattice-freeness and maximality
// checks, and the gauge function of the body around an interior point f.

#include <optional>

#include "liftreg/enumerate.hpp"
#include "liftreg/linalg.hpp"

namespace liftreg {

struct Facet {
  std::vector<std::size_t> incidence;  // exactly n vertex indices, sorted
  IntVec normal;                       // primitive outer normal c
  Rat offset;                          // d, facet lies on c.x = d
};

class SimplicialPolytope {
 public:
  SimplicialPolytope() = default;  // empty; fill via simplex()/from_data()

  std::size_t dim() const { return n_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool is_simplex() const { return vertices_.size() == n_ + 1; }

  /// Slack d - c.x of facet i at x; zero on the facet, positive inside.
  Rat slack(std::size_t i, const RatVec& x) const;

  bool contains(const RatVec& x) const;
  bool strictly_contains(const RatVec& x) const;

  /// Integer bounding box of the vertex set.
  IntBox bounding_box() const;

  /// Simplex from n+1 affinely independent points.
  static SimplicialPolytope simplex(const std::vector<RatVec>& points);

  /// General simplicial polytope from vertices plus facet incidences
  /// (each listing exactly n vertex indices). Fully validated.
  static SimplicialPolytope from_data(const std::vector<RatVec>& vertices,
                                      const std::vector<std::vector<std::size_t>>& incidences);

  /// Translates the whole body by an integer vector.
  SimplicialPolytope translated(const IntVec& t) const;

 private:
  std::size_t n_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
};

struct FacetPoints {
  std::vector<IntVec> all;                // integer points on the closed facet
  std::vector<IntVec> relative_interior;  // strict against every other facet
};

struct MaximalityReport {
  bool lattice_free = false;
  std::optional<IntVec> interior_witness;  // set when not lattice-free
  std::vector<FacetPoints> per_facet;
  bool maximal = false;  // lattice_free and every facet has a relint point
};

MaximalityReport maximality_report(const SimplicialPolytope& p);

/// Eq-normalized facet normals a^i = c^i / (d^i - c^i.f), so that the body
/// is {x : a^i.(x - f) <= 1}. Requires f strictly interior.
std::vector<RatVec> normalized_normals(const SimplicialPolytope& p, const RatVec& f);

/// Gauge of the body around f: psi(r) = max_i a^i.r. Zero at r = 0 and
/// exactly 1 on the boundary shifted by -f.
Rat gauge_psi(const SimplicialPolytope& p, const RatVec& f, const RatVec& r);

}  // namespace liftreg
