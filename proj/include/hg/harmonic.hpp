#pragma once

#include "hg/polynomial.hpp"
#include "hg/rational.hpp"

namespace hg {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// h(x, y) = Re F(x + iy) for an analytic polynomial F. The imaginary part
// of F's constant term is always zero; it does not affect h and fixing it
// pins down the harmonic conjugate.
class HarmonicFunction {
 public:
  HarmonicFunction() = default;
  explicit HarmonicFunction(AnalyticPolynomial analytic);

  const AnalyticPolynomial& analytic() const { return analytic_; }
  bool is_zero() const { return analytic_.is_zero(); }

  friend bool operator==(const HarmonicFunction&, const HarmonicFunction&) = default;

 private:
  AnalyticPolynomial analytic_;
};

Rational eval(const HarmonicFunction& h, const Point2& point);
long double eval(const HarmonicFunction& h, long double x, long double y);

// h_x = Re F'
HarmonicFunction partial_x(const HarmonicFunction& h);
// h_y = Re(i F')
HarmonicFunction partial_y(const HarmonicFunction& h);

// h~ with h + i h~ analytic, i.e. Re(-i F).
HarmonicFunction conjugate(const HarmonicFunction& h);

// p_xx + p_yy; zero exactly when p is harmonic.
BivariatePolynomial harmonic_residual(const BivariatePolynomial& p);

// Throws Error(not_harmonic) carrying the residual when p is not harmonic.
HarmonicFunction to_analytic(const BivariatePolynomial& p);

// Expands Re F(x + iy) into monomials x^i y^j.
BivariatePolynomial to_bivariate(const HarmonicFunction& h);

}  // namespace hg
