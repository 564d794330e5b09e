#pragma once

#include "hg/harmonic.hpp"
#include "hg/vec3.hpp"

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hg {

// Closed rectangle [x_lo, x_hi] x [y_lo, y_hi] with positive side lengths.
struct Domain {
  Rational x_lo{-1};
  Rational x_hi{1};
  Rational y_lo{-1};
  Rational y_hi{1};

  Domain() = default;
  Domain(Rational xlo, Rational xhi, Rational ylo, Rational yhi);

  bool contains(const Point2& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  friend bool operator==(const Domain&, const Domain&) = default;
};

std::string to_string(const Point2& p);

// Value and first/second partials of one harmonic coordinate at a point.
// Harmonicity gives yy = -xx.
struct CoordinateJet {
  Rational x, y, xx, xy, yy;
};

class HarmonicSurface {
 public:
  HarmonicSurface(HarmonicFunction a, HarmonicFunction b, HarmonicFunction c, Domain domain = {});

  const HarmonicFunction& a() const { return coords_[0]; }
  const HarmonicFunction& b() const { return coords_[1]; }
  const HarmonicFunction& c() const { return coords_[2]; }
  const std::array<HarmonicFunction, 3>& coordinates() const { return coords_; }
  const Domain& domain() const { return domain_; }

  // a(x, y) = x identically.
  bool is_graph_normalized() const;

  // Partials from F' and F'' directly: with F'(z) = u + iv, h_x = u and
  // h_y = -v; with F''(z) = s + it, h_xx = s, h_xy = -t, h_yy = -s.
  // Throws Error(out_of_domain).
  std::array<CoordinateJet, 3> jets(const Point2& p) const;

  Vec3<Rational> position(const Point2& p) const;

  void require_in_domain(const Point2& p) const;

 private:
  std::array<HarmonicFunction, 3> coords_;
  std::array<AnalyticPolynomial, 3> first_;
  std::array<AnalyticPolynomial, 3> second_;
  Domain domain_;
};

struct TangentData {
  Vec3<Rational> y_x;
  Vec3<Rational> y_y;
  Vec3<Rational> v;   // y_x cross y_y
  Rational g_sq;      // |v|^2
  Rational energy;    // |y_x|^2 + |y_y|^2
};

TangentData tangents(const HarmonicSurface& s, const Point2& p);

bool is_branch_point(const HarmonicSurface& s, const Point2& p);

// Distortion is (|Y_x|^2 + |Y_y|^2) / (2 |Y_x x Y_y|). The factor 2 is used
// for both the surface and its Gauss map; the identity between the two does
// not depend on it. Returned squared so the value stays rational:
// energy^2 / (4 g_sq). Throws Error(branch_point).
Rational distortion_sq(const HarmonicSurface& s, const Point2& p);

// Same quantity from gradients and all three 2x2 minors of the Jacobian,
// evaluated through partial_x / partial_y rather than the cached jets.
Rational distortion_general(const HarmonicSurface& s, const Point2& p);

bool is_isothermal(const HarmonicSurface& s, const Point2& p);

// energy^2 <= (K + 1/K)^2 g_sq at every point. Throws Error(branch_point)
// naming the first offending point, Error(invalid_argument) for K < 1.
bool is_K_quasiconformal(const HarmonicSurface& s, std::span<const Point2> points, const Rational& k_bound);

// Beltrami modulus d = (K - 1)/(K + 1) for distortion D with D = (K + 1/K)/2.
// Throws Error(invalid_distortion) for d_sq < 1.
double dilatation_from_distortion(const Rational& d_sq);

// Floating copy of a surface for finite-difference work.
class FloatingSurface {
 public:
  explicit FloatingSurface(const HarmonicSurface& s);

  Vec3<long double> position(long double x, long double y) const;
  Vec3<long double> cross_tangent(long double x, long double y) const;
  Vec3<long double> normal(long double x, long double y) const;
  // Stereographic image of the normal from the north pole.
  std::complex<long double> complex_gauss(long double x, long double y) const;

 private:
  using Coeffs = std::vector<std::complex<long double>>;
  std::array<Coeffs, 3> values_;
  std::array<Coeffs, 3> first_;
};

}  // namespace hg
