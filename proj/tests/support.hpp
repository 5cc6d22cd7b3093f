#pragma once

// Shared test helpers: deterministic random rationals, an independent
// signed inclusion-exclusion evaluator for tiny regions, and exact
// parallelotope interior-disjointness checks.

#include <random>

#include "liftreg/fourier_motzkin.hpp"
#include "liftreg/lifting.hpp"

namespace liftreg::testsupport {

inline Rat random_rat(std::mt19937_64& rng, long max_abs_num = 8, long max_den = 6) {
  long num = static_cast<long>(rng() % (2 * max_abs_num + 1)) - max_abs_num;
  long den = 1 + static_cast<long>(rng() % max_den);
  return Rat(Int(num), Int(den));
}

inline RatVec random_rat_vec(std::mt19937_64& rng, std::size_t n, long max_abs_num = 8,
                             long max_den = 6) {
  RatVec v(n);
  for (auto& x : v) x = random_rat(rng, max_abs_num, max_den);
  return v;
}

// ---------------------------------------------------------------------
// Independent oracle for the per-facet mu-space measure: the literal
// signed inclusion-exclusion over the overlap translates, expanded over
// box choices. Exponential; only for tiny instances.
// ---------------------------------------------------------------------

// volume of the intersection of axis boxes given as (lo, hi) pairs
inline Rat boxes_intersection_volume(const std::vector<std::pair<RatVec, RatVec>>& boxes) {
  if (boxes.empty()) return Rat(0);
  std::size_t n = boxes[0].first.size();
  Rat vol(1);
  for (std::size_t j = 0; j < n; ++j) {
    Rat lo = boxes[0].first[j], hi = boxes[0].second[j];
    for (const auto& b : boxes) {
      lo = std::max(lo, b.first[j]);
      hi = std::min(hi, b.second[j]);
    }
    if (hi <= lo) return Rat(0);
    vol *= hi - lo;
  }
  return vol;
}

// volume of the union of axis boxes by inclusion-exclusion over subsets
inline Rat boxes_union_volume(const std::vector<std::pair<RatVec, RatVec>>& boxes) {
  Rat vol(0);
  std::size_t m = boxes.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::pair<RatVec, RatVec>> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) chosen.push_back(boxes[i]);
    Rat term = boxes_intersection_volume(chosen);
    if (__builtin_popcountll(mask) % 2 == 1) vol += term;
    else vol -= term;
  }
  return vol;
}

// vol(U \ X) by the literal signed inclusion-exclusion expansion, with U
// the positive boxes of one facet region and X its overlap translates.
// Exponential in the box count; tiny instances only.
Rat signed_formula_facet_measure(const FacetRegion& reg, TermOrder order);

// vol(U \ X) by full coordinate-grid midpoint classification; independent
// of the engine's slab sweep.
Rat grid_facet_measure(const FacetRegion& reg, TermOrder order);

// interiors of two parallelotopes (anchor + basis*[0,lambda]) intersect?
bool parallelotope_interiors_intersect(const RatVec& anchor1, const RatMat& basis1,
                                       const RatVec& lambda1, const RatVec& anchor2,
                                       const RatMat& basis2, const RatVec& lambda2);

}  // namespace liftreg::testsupport
