#pragma once

#include "hg/surface.hpp"

#include <ostream>

namespace hg {

// Text mesh over the surface domain: "v x y z" lines (17 significant
// digits) in row-major grid order, then "f i j k" with 1-based indices.
// Each grid quad (i, j) becomes (v00, v10, v11) and (v00, v11, v01).
void write_mesh(std::ostream& out, const HarmonicSurface& s, int nx, int ny);

}  // namespace hg
