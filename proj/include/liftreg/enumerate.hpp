#pragma once

// Bounded lattice-point enumeration in rational polytopes, with a hard
// candidate cap so that arbitrarily blown-up bodies fail loudly instead
// of spinning.

#include <cstdint>

#include "liftreg/rational.hpp"

namespace liftreg {

/// Global enumeration cap (candidate count). Default 10^7.
std::uint64_t enum_cap();
void set_enum_cap(std::uint64_t cap);  // 0 restores the default

struct LinearIneq {
  IntVec coeff;  // c
  Rat rhs;       // d, meaning c.x <= d
};

struct IntBox {
  IntVec lo, hi;  // inclusive bounds per axis
};

/// All integer points of box satisfying every inequality, in lexicographic
/// order. Throws BOX_TOO_LARGE if the box holds more than the cap.
std::vector<IntVec> enumerate_lattice_points(const std::vector<LinearIneq>& ineqs,
                                             const IntBox& box);

}  // namespace liftreg
