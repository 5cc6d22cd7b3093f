#pragma once

// Tiny exact Fourier-Motzkin feasibility check. Only used on systems with
// very few variables (degenerate-region membership, interior-disjointness
// checks), where the doubly exponential blowup is irrelevant.

#include "liftreg/rational.hpp"

namespace liftreg {

struct FmConstraint {
  RatVec coeff;  // coeff.s <= rhs, or < rhs when strict
  Rat rhs;
  bool strict = false;
};

/// Whether {s : all constraints hold} is nonempty.
bool fm_feasible(std::vector<FmConstraint> system, std::size_t nvars);

}  // namespace liftreg
