#pragma once

#include "hg/polynomial.hpp"
#include "hg/surface.hpp"

#include <complex>
#include <optional>

namespace hg {

// First and second partials of b and c for a graph-normalized surface
// (a = x). R is Rational for point values or BivariatePolynomial for the
// symbolic jet over the whole plane.
template <class R>
struct BasicJet {
  R b_x, b_y, c_x, c_y;
  R b_xx, b_xy, b_yy;
  R c_xx, c_xy, c_yy;
};

using GaussJet = BasicJet<Rational>;
using SymbolicJet = BasicJet<BivariatePolynomial>;

template <class R>
bool is_harmonic(const BasicJet<R>& j) {
  return R(j.b_xx + j.b_yy) == R(0) && R(j.c_xx + j.c_yy) == R(0);
}

// A, B, C, delta, gamma, M and G^2 from the normalized-coordinates proof of
// the distortion identity.
template <class R>
struct BasicMN {
  R a_q, b_q, c_q;
  R delta, gamma;
  R m;
  R g_sq;
};

using MNQuantities = BasicMN<Rational>;

template <class R>
BasicMN<R> mn_quantities(const BasicJet<R>& j) {
  const R one(1);
  const R two(2);
  BasicMN<R> q;
  q.a_q = j.b_xy * j.b_xy - j.b_yy * j.b_xx;
  q.b_q = j.b_xy * j.c_xy + j.b_xx * j.c_xx;
  q.c_q = j.c_xy * j.c_xy - j.c_yy * j.c_xx;
  q.delta = one + j.b_x * j.b_x + j.c_x * j.c_x;
  q.gamma = one + j.b_x * j.b_x + j.b_y * j.b_y + j.c_x * j.c_x + j.c_y * j.c_y;
  // M as printed, before the harmonic reduction of its middle term.
  q.m = j.c_y * j.c_y * (j.b_xy * j.b_xy - j.b_yy * j.b_xx) +
        j.b_y * j.c_y * (R(-two * j.b_xy * j.c_xy) + j.c_yy * j.b_xx + j.b_yy * j.c_xx) +
        j.b_y * j.b_y * (j.c_xy * j.c_xy - j.c_yy * j.c_xx);
  const R minor = j.c_y * j.b_x - j.b_y * j.c_x;
  q.g_sq = j.b_y * j.b_y + j.c_y * j.c_y + minor * minor;
  return q;
}

// c_y^2 A - 2 b_y c_y B + b_y^2 C; equals the printed M on harmonic jets.
template <class R>
R m_reduced(const BasicJet<R>& j, const BasicMN<R>& q) {
  const R two(2);
  return j.c_y * j.c_y * q.a_q - two * j.b_y * j.c_y * q.b_q + j.b_y * j.b_y * q.c_q;
}

// N, transcribed term for term from the unreduced long display, so that
// N = gamma * M is checked rather than assumed.
template <class R>
R n_explicit(const BasicJet<R>& j) {
  const R one(1);
  const R two(2);
  const R& bx = j.b_x;
  const R& by = j.b_y;
  const R& cx = j.c_x;
  const R& cy = j.c_y;
  const R& bxx = j.b_xx;
  const R& bxy = j.b_xy;
  const R& byy = j.b_yy;
  const R& cxx = j.c_xx;
  const R& cxy = j.c_xy;
  const R& cyy = j.c_yy;
  const R d1 = one + bx * bx + cx * cx;
  const R cy2 = cy * cy;
  const R by2 = by * by;

  R n = cy2 * cy2 * (bxy * bxy + bxx * bxx);
  n += by2 * (cyy * cyy * d1 - two * by * cyy * bx * cxy + (one + by2 + bx * bx + cx * cx) * cxy * cxy -
              two * by * bx * cxy * cxx + by2 * cxx * cxx);
  n -= two * cy2 * cy * (byy * cx * bxy + cx * bxy * bxx + by * (bxy * cxy + bxx * cxx));
  n -= two * by * cy *
       (d1 * bxy * cxy + byy * (cyy * d1 - by * bx * cxy) + by2 * (bxy * cxy + bxx * cxx) -
        by * (cyy * (bx * bxy - cx * cxy) - cx * cxy * cxx + bx * (cxy * bxx + bxy * cxx)));
  n += cy2 * (byy * byy * d1 + d1 * bxy * bxy + two * by * byy * (R(-(bx * bxy)) + cx * cxy) +
              by2 * (bxy * bxy + cxy * cxy + bxx * bxx + cxx * cxx) +
              two * by * (cyy * cx * bxy - bx * bxy * bxx + cx * (cxy * bxx + bxy * cxx)));
  return n;
}

struct UnitVector3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

// V/|V| with |V| = sqrt(g_sq) rounded once. Throws Error(branch_point).
UnitVector3 normal(const HarmonicSurface& s, const Point2& p);

// (x1, x2)/(1 - x3). Throws Error(north_pole) when x3 is within 1e-12 of 1.
std::complex<double> stereographic(const UnitVector3& n);

// Exact check for the pole (V parallel to +z), then a floating projection
// of V. Throws Error(branch_point) or Error(north_pole).
std::complex<double> complex_gauss(const HarmonicSurface& s, const Point2& p);

// Throws Error(not_normalized), Error(out_of_domain).
GaussJet jet(const HarmonicSurface& s, const Point2& p);
// The jet as polynomials in (x, y). Throws Error(not_normalized).
SymbolicJet symbolic_jet(const HarmonicSurface& s);

Rational n_explicit_value(const GaussJet& j);

// Exact derivative data of n = V/|V| from the quotient rule, with P = n_x
// and Q = n_y:
//   |P|^2 = (|V_x|^2 |V|^2 - <V, V_x>^2) / |V|^4
//   P x Q = W / |V|^6,
//   W = (V_x x V_y)|V|^4 - (V_x x V) <V, V_y> |V|^2 - (V x V_y) <V, V_x> |V|^2
struct GaussDerivatives {
  Rational g_sq;
  Rational p_sq;
  Rational q_sq;
  Vec3<Rational> w;
  Rational cross_sq;  // |P x Q|^2 = |W|^2 / |V|^12
};

// Valid for any harmonic surface. Throws Error(branch_point).
GaussDerivatives gauss_derivatives(const HarmonicSurface& s, const Point2& p);

// M != 0. False at branch points, where M = 0 as well.
// Throws Error(not_normalized), Error(out_of_domain).
bool gauss_regular(const HarmonicSurface& s, const Point2& p);

// (|P|^2 + |Q|^2)^2 / (4 |P x Q|^2), independent of the surface distortion.
// Throws Error(branch_point), Error(gauss_degenerate).
Rational gauss_distortion_sq(const HarmonicSurface& s, const Point2& p);

// <Y_xx, V><Y_yy, V> - <Y_xy, V>^2, a positive multiple of the Gauss
// curvature at regular points. Throws Error(branch_point).
Rational curvature_sign(const HarmonicSurface& s, const Point2& p);

// Y_x x Y_y as polynomials in (x, y).
Vec3<BivariatePolynomial> symbolic_cross_tangent(const HarmonicSurface& s);

struct PlanarityResult {
  bool planar = false;
  Point2 reference;              // regular point the direction was taken at
  Vec3<Rational> direction;      // V at the reference point, last nonzero component made positive
  UnitVector3 normal;            // direction normalized
  std::optional<Point2> witness; // non-planar: a point where V is not parallel to direction
};

// Decides whether V(x, y) x V(x0, y0) vanishes identically as a polynomial.
// Throws Error(degenerate_surface) when V is the zero polynomial.
PlanarityResult planarity_classify(const HarmonicSurface& s);

// Interior grid of (degree + 1)^2 points. A nonzero polynomial of total
// degree <= degree cannot vanish on all of them.
std::vector<Point2> probe_points(const Domain& domain, int degree);

}  // namespace hg
