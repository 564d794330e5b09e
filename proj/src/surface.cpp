#include "hg/surface.hpp"

#include "hg/error.hpp"

#include <cmath>

namespace hg {

Domain::Domain(Rational xlo, Rational xhi, Rational ylo, Rational yhi)
    : x_lo(std::move(xlo)), x_hi(std::move(xhi)), y_lo(std::move(ylo)), y_hi(std::move(yhi)) {
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
    throw Error(ErrorKind::invalid_argument, "domain must have positive side lengths");
  }
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

HarmonicSurface::HarmonicSurface(HarmonicFunction a, HarmonicFunction b, HarmonicFunction c, Domain domain)
    : coords_{std::move(a), std::move(b), std::move(c)}, domain_(std::move(domain)) {
  for (std::size_t k = 0; k < 3; ++k) {
    first_[k] = coords_[k].analytic().derivative();
    second_[k] = first_[k].derivative();
  }
}

bool HarmonicSurface::is_graph_normalized() const { return a().analytic() == AnalyticPolynomial::identity(); }

void HarmonicSurface::require_in_domain(const Point2& p) const {
  if (!domain_.contains(p)) throw Error(ErrorKind::out_of_domain, "point " + to_string(p));
}

std::array<CoordinateJet, 3> HarmonicSurface::jets(const Point2& p) const {
  require_in_domain(p);
  const ComplexRational z{p.x, p.y};
  std::array<CoordinateJet, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    const ComplexRational d1 = first_[k].evaluate(z);
    const ComplexRational d2 = second_[k].evaluate(z);
    out[k] = {d1.re, -d1.im, d2.re, -d2.im, -d2.re};
  }
  return out;
}

Vec3<Rational> HarmonicSurface::position(const Point2& p) const {
  return {eval(a(), p), eval(b(), p), eval(c(), p)};
}

TangentData tangents(const HarmonicSurface& s, const Point2& p) {
  const auto j = s.jets(p);
  TangentData t;
  t.y_x = {j[0].x, j[1].x, j[2].x};
  t.y_y = {j[0].y, j[1].y, j[2].y};
  t.v = cross(t.y_x, t.y_y);
  t.g_sq = norm_sq(t.v);
  t.energy = norm_sq(t.y_x) + norm_sq(t.y_y);
  return t;
}

bool is_branch_point(const HarmonicSurface& s, const Point2& p) { return sgn(tangents(s, p).g_sq) == 0; }

Rational distortion_sq(const HarmonicSurface& s, const Point2& p) {
  const TangentData t = tangents(s, p);
  if (sgn(t.g_sq) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
  return t.energy * t.energy / (4 * t.g_sq);
}

Rational distortion_general(const HarmonicSurface& s, const Point2& p) {
  s.require_in_domain(p);
  const Rational ax = eval(partial_x(s.a()), p), ay = eval(partial_y(s.a()), p);
  const Rational bx = eval(partial_x(s.b()), p), by = eval(partial_y(s.b()), p);
  const Rational cx = eval(partial_x(s.c()), p), cy = eval(partial_y(s.c()), p);
  const Rational grad_sum = ax * ax + ay * ay + bx * bx + by * by + cx * cx + cy * cy;
  const Rational m_ab = by * ax - ay * bx;
  const Rational m_ac = -cy * ax + ay * cx;
  const Rational m_bc = cy * bx - by * cx;
  const Rational minors = m_ab * m_ab + m_ac * m_ac + m_bc * m_bc;
  if (sgn(minors) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
  return grad_sum * grad_sum / (4 * minors);
}

bool is_isothermal(const HarmonicSurface& s, const Point2& p) {
  const TangentData t = tangents(s, p);
  return norm_sq(t.y_x) == norm_sq(t.y_y) && sgn(dot(t.y_x, t.y_y)) == 0;
}

bool is_K_quasiconformal(const HarmonicSurface& s, std::span<const Point2> points, const Rational& k_bound) {
  if (k_bound < 1) throw Error(ErrorKind::invalid_argument, "K must be >= 1");
  const Rational factor = k_bound + 1 / k_bound;
  const Rational factor_sq = factor * factor;
  bool ok = true;
  for (const auto& p : points) {
    const TangentData t = tangents(s, p);
    if (sgn(t.g_sq) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
    if (t.energy * t.energy > factor_sq * t.g_sq) ok = false;
  }
  return ok;
}

double dilatation_from_distortion(const Rational& d_sq) {
  if (d_sq < 1) throw Error(ErrorKind::invalid_distortion, "squared distortion " + to_string(d_sq) + " < 1");
  // d = sqrt((D - 1)/(D + 1)) = sqrt(D^2 - 1)/(D + 1); D^2 - 1 is taken
  // exactly so d stays accurate near the conformal case.
  const long double excess = to_long_double(Rational(d_sq - 1));
  const long double D = std::sqrt(to_long_double(d_sq));
  return static_cast<double>(std::sqrt(excess) / (D + 1.0L));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::complex<long double>> to_floating(const AnalyticPolynomial& p) {
  std::vector<std::complex<long double>> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.to_complex());
  return out;
}

std::complex<long double> horner(const std::vector<std::complex<long double>>& coeffs, std::complex<long double> z) {
  std::complex<long double> acc{0.0L, 0.0L};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

FloatingSurface::FloatingSurface(const HarmonicSurface& s) {
  for (std::size_t k = 0; k < 3; ++k) {
    values_[k] = to_floating(s.coordinates()[k].analytic());
    first_[k] = to_floating(s.coordinates()[k].analytic().derivative());
  }
}

Vec3<long double> FloatingSurface::position(long double x, long double y) const {
  const std::complex<long double> z{x, y};
  return {horner(values_[0], z).real(), horner(values_[1], z).real(), horner(values_[2], z).real()};
}

Vec3<long double> FloatingSurface::cross_tangent(long double x, long double y) const {
  const std::complex<long double> z{x, y};
  Vec3<long double> tx, ty;
  std::array<long double*, 3> px{&tx.x, &tx.y, &tx.z}, py{&ty.x, &ty.y, &ty.z};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto d = horner(first_[k], z);
    *px[k] = d.real();
    *py[k] = -d.imag();
  }
  return cross(tx, ty);
}

Vec3<long double> FloatingSurface::normal(long double x, long double y) const {
  const auto v = cross_tangent(x, y);
  const long double len = std::sqrt(norm_sq(v));
  return {v.x / len, v.y / len, v.z / len};
}

std::complex<long double> FloatingSurface::complex_gauss(long double x, long double y) const {
  const auto v = cross_tangent(x, y);
  const long double len = std::sqrt(norm_sq(v));
  // n/(1 - n3) written to avoid cancellation on the upper hemisphere.
  if (v.z <= 0) return std::complex<long double>{v.x, v.y} / (len - v.z);
  return std::complex<long double>{v.x, v.y} * ((len + v.z) / (v.x * v.x + v.y * v.y));
}

}  // namespace hg
