#include "hg/harmonic.hpp"

#include "hg/error.hpp"

#include <vector>

namespace hg {

namespace {

AnalyticPolynomial normalized(AnalyticPolynomial p) {
  if (p.is_zero() || sgn(p.coefficients()[0].im) == 0) return p;
  auto coeffs = p.coefficients();
  coeffs[0].im = 0;
  return AnalyticPolynomial(std::move(coeffs));
}

}  // namespace

HarmonicFunction::HarmonicFunction(AnalyticPolynomial analytic) : analytic_(normalized(std::move(analytic))) {}

Rational eval(const HarmonicFunction& h, const Point2& point) {
  return h.analytic().evaluate(ComplexRational{point.x, point.y}).re;
}

long double eval(const HarmonicFunction& h, long double x, long double y) {
  return h.analytic().evaluate(std::complex<long double>{x, y}).real();
}

HarmonicFunction partial_x(const HarmonicFunction& h) { return HarmonicFunction(h.analytic().derivative()); }

HarmonicFunction partial_y(const HarmonicFunction& h) {
  return HarmonicFunction(kImaginaryUnit * h.analytic().derivative());
}

HarmonicFunction conjugate(const HarmonicFunction& h) {
  return HarmonicFunction(ComplexRational{0, -1} * h.analytic());
}

BivariatePolynomial harmonic_residual(const BivariatePolynomial& p) {
  return p.derivative_x().derivative_x() + p.derivative_y().derivative_y();
}

HarmonicFunction to_analytic(const BivariatePolynomial& p) {
  const BivariatePolynomial residual = harmonic_residual(p);
  if (!residual.is_zero()) {
    throw Error(ErrorKind::not_harmonic, "Laplacian is " + to_string(residual));
  }
  // F(z) = 2 p(z/2, -iz/2) - p(0, 0). Each monomial x^i y^j maps to
  // (1/2)^i (-i/2)^j z^(i+j).
  std::vector<ComplexRational> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [e, c] : p.terms()) {
    const auto [i, j] = e;
    Rational scale = c;
    mpz_class two_pow = 1;
    mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), static_cast<mp_bitcnt_t>(i + j));
    scale /= Rational(two_pow);
    // (-i)^j
    ComplexRational term;
    switch (j % 4) {
      case 0: term = {scale, 0}; break;
      case 1: term = {0, -scale}; break;
      case 2: term = {-scale, 0}; break;
      default: term = {0, scale}; break;
    }
    coeffs[static_cast<std::size_t>(i + j)] += term;
  }
  for (auto& c : coeffs) c = {c.re * 2, c.im * 2};
  if (!coeffs.empty()) coeffs[0].re -= p.coefficient(0, 0);
  return HarmonicFunction(AnalyticPolynomial(std::move(coeffs)));
}

BivariatePolynomial to_bivariate(const HarmonicFunction& h) {
  // Re(c (x + iy)^n) = sum_k C(n, k) x^(n-k) y^k Re(c i^k)
  BivariatePolynomial out;
  const auto& coeffs = h.analytic().coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const auto& c = coeffs[n];
    if (c.is_zero()) continue;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
      Rational re_part;
      switch (k % 4) {
        case 0: re_part = c.re; break;
        case 1: re_part = -c.im; break;
        case 2: re_part = -c.re; break;
        default: re_part = c.im; break;
      }
      out += BivariatePolynomial::monomial(Rational(binom) * re_part, static_cast<int>(n - k), static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace hg
