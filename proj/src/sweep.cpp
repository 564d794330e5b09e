#include "hg/sweep.hpp"

#include "hg/gauss_map.hpp"
#include "hg/parallel.hpp"
#include "hg/verify.hpp"

#include <cstdio>

namespace hg {

std::vector<SweepRow> sweep(const HarmonicSurface& s, int nx, int ny) {
  const std::vector<Point2> nodes = rational_grid(s.domain(), nx, ny);
  std::vector<SweepRow> rows(nodes.size());
  const bool normalized = s.is_graph_normalized();
  parallel_for(nodes.size(), [&](std::size_t k) {
    SweepRow& row = rows[k];
    const Point2& p = nodes[k];
    row.point = p;
    const TangentData t = tangents(s, p);
    row.regular = sgn(t.g_sq) != 0;
    if (normalized) row.m_value = mn_quantities(jet(s, p)).m;
    if (!row.regular) {
      row.gauss_regular = false;
      return;
    }
    row.dist_sq_surface = t.energy * t.energy / (4 * t.g_sq);
    row.curvature_sign = curvature_sign(s, p);
    const GaussDerivatives d = gauss_derivatives(s, p);
    row.gauss_regular = sgn(d.cross_sq) != 0;
    if (*row.gauss_regular) {
      const Rational e = d.p_sq + d.q_sq;
      row.dist_sq_gauss = e * e / (4 * d.cross_sq);
    }
  });
  return rows;
}

namespace {

std::string render(const Rational& r, bool floating) {
  if (!floating) return to_string(r);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.get_d());
  return buf;
}

std::string render(const std::optional<Rational>& r, bool floating) { return r ? render(*r, floating) : ""; }

std::string render(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

json cell(const std::optional<Rational>& r, bool floating) {
  if (!r) return nullptr;
  if (floating) return r->get_d();
  return to_string(*r);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool floating) {
  out << "x,y,regular,gauss_regular,dist_sq_surface,dist_sq_gauss,m_value,curvature_sign\n";
  for (const auto& r : rows) {
    out << render(r.point.x, floating) << ',' << render(r.point.y, floating) << ',' << (r.regular ? "true" : "false")
        << ',' << render(r.gauss_regular) << ',' << render(r.dist_sq_surface, floating) << ','
        << render(r.dist_sq_gauss, floating) << ',' << render(r.m_value, floating) << ','
        << render(r.curvature_sign, floating) << '\n';
  }
}

json sweep_to_json(const std::vector<SweepRow>& rows, bool floating) {
  json out;
  out["columns"] = {"x", "y", "regular", "gauss_regular", "dist_sq_surface", "dist_sq_gauss", "m_value", "curvature_sign"};
  json list = json::array();
  for (const auto& r : rows) {
    json row;
    row["x"] = cell(r.point.x, floating);
    row["y"] = cell(r.point.y, floating);
    row["regular"] = r.regular;
    row["gauss_regular"] = r.gauss_regular ? json(*r.gauss_regular) : json(nullptr);
    row["dist_sq_surface"] = cell(r.dist_sq_surface, floating);
    row["dist_sq_gauss"] = cell(r.dist_sq_gauss, floating);
    row["m_value"] = cell(r.m_value, floating);
    row["curvature_sign"] = cell(r.curvature_sign, floating);
    list.push_back(std::move(row));
  }
  out["rows"] = std::move(list);
  return out;
}

}  // namespace hg
