#pragma once

// Lifting regions of maximal lattice-free simplicial polytopes.
//
// For each facet i with vertices v^{i1}..v^{in} and integer points y^{ik}
// on the closed facet, the region R(f) is the union of the parallelotopes
//
//   R_ik = { f + sum_j mu_j (v^{ij} - f) : 0 <= mu_j <= lambda^{ik}_j },
//
// where lambda^{ik} are the barycentric multipliers of y^{ik} in the facet.
// The torus volume of R(f) modulo Z^n decides whether the minimal valid
// function derived from the body has a unique minimal lifting (volume
// exactly 1) or multiple liftings (volume < 1).

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "liftreg/lattice.hpp"
#include "liftreg/polytope.hpp"

namespace liftreg {

enum class TermOrder { kLex, kRevLex };

/// t > 0 under the chosen additive total order on Z^n.
bool order_positive(const IntVec& t, TermOrder order);

struct RegionBox {
  IntVec point;    // y, an integer point on the closed facet
  RatVec lambda;   // barycentric multipliers, lambda >= 0, sum = 1
  bool positive;   // all components strictly positive (full-dimensional box)
};

struct FacetRegion {
  std::size_t facet = 0;
  std::vector<std::size_t> vertex_order;  // column order of `basis`
  RatMat basis;                           // columns v^{ij} - f
  Rat absdet;                             // |det basis|; 0 when f lies on the facet
  std::optional<RatMat> basis_inv;        // present iff absdet != 0
  std::vector<RegionBox> boxes;
  IntLattice lattice;  // intersection lattice {t in Z^n : c_i . t = 0}

  bool degenerate() const { return !basis_inv.has_value(); }

  /// mu-coordinates of a lattice vector; for t in the intersection lattice
  /// these sum to zero and do not depend on f.
  RatVec mu_of_lattice(const IntVec& t) const;
};

struct LiftingRegion {
  SimplicialPolytope body;
  MaximalityReport report;
  RatVec f;
  bool boundary_f = false;
  std::vector<FacetRegion> regions;
};

/// Barycentric multipliers of an integer point on the closed facet.
RatVec barycentric_on_facet(const SimplicialPolytope& p, std::size_t facet,
                            const IntVec& y);

/// Builds R(f) for f anywhere in the body (interior or boundary). Facets
/// containing f are kept as degenerate zero-volume regions.
LiftingRegion build_region(const SimplicialPolytope& p, const RatVec& f,
                           const MaximalityReport* precomputed_report = nullptr);

/// Exact membership x in R(f), including degenerate regions.
bool membership(const LiftingRegion& region, const RatVec& x);

struct Verdict {
  Rat torus_volume;
  bool unique_lifting = false;  // torus_volume == 1 exactly
  std::vector<Rat> per_facet;
  std::optional<RatVec> witness;  // an exactly-verified uncovered torus point
};

/// Per-facet mu-space measures are independent of f; this cache keys them
/// by their exact defining data so repeated evaluations of one body at
/// different f reuse the heavy union-minus-translates computation.
class FacetMeasureCache {
 public:
  std::optional<Rat> lookup(const std::string& key) const;
  void store(const std::string& key, const Rat& value);

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Rat> entries_;
};

/// Exact torus volume of R(f) modulo Z^n. Requires a lattice-free body.
Verdict torus_volume_exact(const LiftingRegion& region,
                           TermOrder order = TermOrder::kLex,
                           FacetMeasureCache* cache = nullptr);

struct OracleReport {
  Rat covered_fraction;
  std::vector<RatVec> uncovered;  // up to 10 uncovered torus grid samples
};

/// Brute-force covering check on the shifted N^n torus grid; every grid
/// point is tested with exact arithmetic, so a reported uncovered point is
/// a certificate.
OracleReport torus_cover_oracle(const LiftingRegion& region, unsigned resolution);

/// Searches shifted grids of increasing resolution for an exactly-verified
/// uncovered torus point. Empty when the region covers the torus.
std::optional<RatVec> uncovered_witness(const LiftingRegion& region,
                                        unsigned max_resolution = 256);

struct AffineVolume {
  RatVec coefficients;  // volume(f) = coefficients . f + constant on the body
  Rat constant;
  bool verified = false;
  std::vector<Rat> vertex_volumes;
  std::vector<Rat> probe_residuals;  // all exactly zero when verified

  Rat value(const RatVec& f) const { return dot(coefficients, f) + constant; }
};

enum class BodyClass { kUniqueForAllF, kMultipleForAllF };

const char* body_class_name(BodyClass c);

/// Deterministic pseudo-random strictly interior rational points.
std::vector<RatVec> random_interior_points(const SimplicialPolytope& p,
                                           std::size_t count, std::uint64_t seed);

/// One analyzer per body: owns the maximality report and the f-independent
/// facet-measure cache, so sweeps over many f stay cheap.
class LiftingAnalyzer {
 public:
  explicit LiftingAnalyzer(SimplicialPolytope body);

  const SimplicialPolytope& body() const { return body_; }
  const MaximalityReport& report() const { return report_; }

  LiftingRegion region_at(const RatVec& f) const;
  Verdict volume_at(const RatVec& f, TermOrder order = TermOrder::kLex);

  /// Decides the body-level dichotomy by checking volume = 1 at every
  /// vertex (the volume is affine in f, so vertices decide).
  BodyClass classify();

  /// Fits volume(f) as an affine function from the vertex volumes and
  /// verifies it exactly at interior probe points.
  AffineVolume affine_volume(std::size_t probes = 5, std::uint64_t seed = 20110901);

  /// Trivial fill-in lifting value pi(r) for a body with a unique lifting.
  Rat lift_value(const RatVec& f, const RatVec& r);

 private:
  SimplicialPolytope body_;
  MaximalityReport report_;
  FacetMeasureCache cache_;
  std::mutex class_mutex_;
  std::optional<BodyClass> class_;
};

}  // namespace liftreg
