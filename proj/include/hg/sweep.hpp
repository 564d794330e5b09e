#pragma once

#include "hg/io.hpp"
#include "hg/surface.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace hg {

// One grid node of a field sweep. Quantities that are undefined at the node
// (branch point, Gauss-degenerate, surface not normalized) are empty.
struct SweepRow {
  Point2 point;
  bool regular = false;
  std::optional<bool> gauss_regular;
  std::optional<Rational> dist_sq_surface;
  std::optional<Rational> dist_sq_gauss;
  std::optional<Rational> m_value;
  std::optional<Rational> curvature_sign;
};

// Nodes in row-major order (y outer) over the surface's domain.
// gauss_regular is n_x x n_y != 0 from the quotient-rule path, which agrees
// with M != 0 on normalized surfaces. Branch nodes report gauss_regular
// false since the normal is undefined there.
std::vector<SweepRow> sweep(const HarmonicSurface& s, int nx, int ny);

// Columns: x, y, regular, gauss_regular, dist_sq_surface, dist_sq_gauss,
// m_value, curvature_sign. Exact cells are "num/den"; with floating set
// they are 17 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool floating);
json sweep_to_json(const std::vector<SweepRow>& rows, bool floating);

}  // namespace hg
