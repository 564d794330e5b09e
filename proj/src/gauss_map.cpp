#include "hg/gauss_map.hpp"

#include "hg/error.hpp"

#include <cmath>

namespace hg {

namespace {

struct SecondOrder {
  TangentData t;
  Vec3<Rational> y_xx, y_xy, y_yy;
};

SecondOrder second_order(const HarmonicSurface& s, const Point2& p) {
  const auto j = s.jets(p);
  SecondOrder out;
  out.t.y_x = {j[0].x, j[1].x, j[2].x};
  out.t.y_y = {j[0].y, j[1].y, j[2].y};
  out.t.v = cross(out.t.y_x, out.t.y_y);
  out.t.g_sq = norm_sq(out.t.v);
  out.t.energy = norm_sq(out.t.y_x) + norm_sq(out.t.y_y);
  out.y_xx = {j[0].xx, j[1].xx, j[2].xx};
  out.y_xy = {j[0].xy, j[1].xy, j[2].xy};
  out.y_yy = {j[0].yy, j[1].yy, j[2].yy};
  return out;
}

void require_normalized(const HarmonicSurface& s) {
  if (!s.is_graph_normalized()) throw Error(ErrorKind::not_normalized, "first coordinate is not x");
}

UnitVector3 unit(const Vec3<Rational>& v, const Rational& g_sq) {
  const double len = std::sqrt(g_sq.get_d());
  return {v.x.get_d() / len, v.y.get_d() / len, v.z.get_d() / len};
}

// Flip so the last nonzero component is positive.
Vec3<Rational> canonical_sign(Vec3<Rational> v) {
  const Rational& last = sgn(v.z) != 0 ? v.z : (sgn(v.y) != 0 ? v.y : v.x);
  if (sgn(last) < 0) v = Rational(-1) * v;
  return v;
}

}  // namespace

UnitVector3 normal(const HarmonicSurface& s, const Point2& p) {
  const TangentData t = tangents(s, p);
  if (sgn(t.g_sq) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
  return unit(t.v, t.g_sq);
}

std::complex<double> stereographic(const UnitVector3& n) {
  const double denom = 1.0 - n.z;
  if (std::abs(denom) <= 1e-12) throw Error(ErrorKind::north_pole, "normal at (0, 0, 1)");
  return {n.x / denom, n.y / denom};
}

std::complex<double> complex_gauss(const HarmonicSurface& s, const Point2& p) {
  const TangentData t = tangents(s, p);
  if (sgn(t.g_sq) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
  if (sgn(t.v.x) == 0 && sgn(t.v.y) == 0 && sgn(t.v.z) > 0) {
    throw Error(ErrorKind::north_pole, "normal at (0, 0, 1) at " + to_string(p));
  }
  const long double vx = to_long_double(t.v.x);
  const long double vy = to_long_double(t.v.y);
  const long double vz = to_long_double(t.v.z);
  const long double len = std::sqrt(to_long_double(t.g_sq));
  std::complex<long double> g;
  if (vz <= 0) {
    g = std::complex<long double>{vx, vy} / (len - vz);
  } else {
    g = std::complex<long double>{vx, vy} * ((len + vz) / to_long_double(Rational(t.v.x * t.v.x + t.v.y * t.v.y)));
  }
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

GaussJet jet(const HarmonicSurface& s, const Point2& p) {
  require_normalized(s);
  const auto j = s.jets(p);
  const CoordinateJet& b = j[1];
  const CoordinateJet& c = j[2];
  return {b.x, b.y, c.x, c.y, b.xx, b.xy, b.yy, c.xx, c.xy, c.yy};
}

SymbolicJet symbolic_jet(const HarmonicSurface& s) {
  require_normalized(s);
  const HarmonicFunction bx = partial_x(s.b()), by = partial_y(s.b());
  const HarmonicFunction cx = partial_x(s.c()), cy = partial_y(s.c());
  return {to_bivariate(bx),
          to_bivariate(by),
          to_bivariate(cx),
          to_bivariate(cy),
          to_bivariate(partial_x(bx)),
          to_bivariate(partial_y(bx)),
          to_bivariate(partial_y(by)),
          to_bivariate(partial_x(cx)),
          to_bivariate(partial_y(cx)),
          to_bivariate(partial_y(cy))};
}

Rational n_explicit_value(const GaussJet& j) { return n_explicit(j); }

GaussDerivatives gauss_derivatives(const HarmonicSurface& s, const Point2& p) {
  const SecondOrder so = second_order(s, p);
  const Vec3<Rational>& v = so.t.v;
  const Rational& r2 = so.t.g_sq;
  if (sgn(r2) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));

  const Vec3<Rational> v_x = cross(so.y_xx, so.t.y_y) + cross(so.t.y_x, so.y_xy);
  const Vec3<Rational> v_y = cross(so.y_xy, so.t.y_y) + cross(so.t.y_x, so.y_yy);
  const Rational a = dot(v, v_x);
  const Rational b = dot(v, v_y);
  const Rational r4 = r2 * r2;

  GaussDerivatives d;
  d.g_sq = r2;
  d.p_sq = (norm_sq(v_x) * r2 - a * a) / r4;
  d.q_sq = (norm_sq(v_y) * r2 - b * b) / r4;
  d.w = r4 * cross(v_x, v_y) - Rational(b * r2) * cross(v_x, v) - Rational(a * r2) * cross(v, v_y);
  const Rational r12 = r4 * r4 * r4;
  d.cross_sq = norm_sq(d.w) / r12;
  return d;
}

bool gauss_regular(const HarmonicSurface& s, const Point2& p) {
  // M vanishes at every branch point of a normalized surface (b_y = c_y = 0
  // there), so no separate branch-point test is needed.
  return sgn(mn_quantities(jet(s, p)).m) != 0;
}

Rational gauss_distortion_sq(const HarmonicSurface& s, const Point2& p) {
  const GaussDerivatives d = gauss_derivatives(s, p);
  if (sgn(d.cross_sq) == 0) throw Error(ErrorKind::gauss_degenerate, "n_x x n_y = 0 at " + to_string(p));
  const Rational energy = d.p_sq + d.q_sq;
  return energy * energy / (4 * d.cross_sq);
}

Rational curvature_sign(const HarmonicSurface& s, const Point2& p) {
  const SecondOrder so = second_order(s, p);
  if (sgn(so.t.g_sq) == 0) throw Error(ErrorKind::branch_point, "at " + to_string(p));
  const Rational l = dot(so.y_xx, so.t.v);
  const Rational m = dot(so.y_xy, so.t.v);
  const Rational n = dot(so.y_yy, so.t.v);
  return l * n - m * m;
}

Vec3<BivariatePolynomial> symbolic_cross_tangent(const HarmonicSurface& s) {
  Vec3<BivariatePolynomial> tx, ty;
  tx = {to_bivariate(partial_x(s.a())), to_bivariate(partial_x(s.b())), to_bivariate(partial_x(s.c()))};
  ty = {to_bivariate(partial_y(s.a())), to_bivariate(partial_y(s.b())), to_bivariate(partial_y(s.c()))};
  return cross(tx, ty);
}

std::vector<Point2> probe_points(const Domain& domain, int degree) {
  const int n = std::max(degree, 0) + 1;
  std::vector<Rational> xs, ys;
  for (int k = 0; k < n; ++k) {
    const Rational t = make_rational(k + 1, n + 1);
    xs.push_back(domain.x_lo + (domain.x_hi - domain.x_lo) * t);
    ys.push_back(domain.y_lo + (domain.y_hi - domain.y_lo) * t);
  }
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (const auto& y : ys) {
    for (const auto& x : xs) out.push_back({x, y});
  }
  return out;
}

PlanarityResult planarity_classify(const HarmonicSurface& s) {
  const Vec3<BivariatePolynomial> v = symbolic_cross_tangent(s);
  if (v.x.is_zero() && v.y.is_zero() && v.z.is_zero()) {
    throw Error(ErrorKind::degenerate_surface, "tangent vectors are dependent everywhere");
  }
  const int degree = std::max({v.x.degree(), v.y.degree(), v.z.degree()});
  auto value_at = [&](const Point2& p) -> Vec3<Rational> {
    return {v.x.evaluate(p.x, p.y), v.y.evaluate(p.x, p.y), v.z.evaluate(p.x, p.y)};
  };

  PlanarityResult result;
  bool found = false;
  for (const auto& p : probe_points(s.domain(), degree)) {
    const Vec3<Rational> v0 = value_at(p);
    if (sgn(norm_sq(v0)) != 0) {
      result.reference = p;
      result.direction = canonical_sign(v0);
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::degenerate_surface, "no regular probe point");

  const Vec3<BivariatePolynomial> ref{BivariatePolynomial(result.direction.x), BivariatePolynomial(result.direction.y),
                                      BivariatePolynomial(result.direction.z)};
  const Vec3<BivariatePolynomial> deviation = cross(v, ref);
  result.planar = deviation.x.is_zero() && deviation.y.is_zero() && deviation.z.is_zero();
  result.normal = unit(result.direction, norm_sq(result.direction));
  if (!result.planar) {
    const int dev_degree = std::max({deviation.x.degree(), deviation.y.degree(), deviation.z.degree()});
    for (const auto& p : probe_points(s.domain(), dev_degree)) {
      const Vec3<Rational> d{deviation.x.evaluate(p.x, p.y), deviation.y.evaluate(p.x, p.y),
                             deviation.z.evaluate(p.x, p.y)};
      if (sgn(norm_sq(d)) != 0) {
        result.witness = p;
        break;
      }
    }
  }
  return result;
}

}  // namespace hg
