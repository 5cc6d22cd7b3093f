#pragma once

// Deterministic SVG rendering of planar bodies: body outline, lattice
// points, the region parallelograms (degenerate ones as segments), and f.

#include "liftreg/lifting.hpp"

namespace liftreg {

/// SVG figure of a 2-dimensional lifting region. Byte-identical output for
/// identical input. Throws DIMENSION_UNSUPPORTED unless dim == 2.
std::string render_svg(const LiftingRegion& region);

}  // namespace liftreg
