#pragma once

#include "hg/harmonic.hpp"
#include "hg/rational.hpp"
#include "hg/surface.hpp"

#include <random>

namespace hg::test {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline HarmonicFunction z_power(int n, ComplexRational c = 1) {
  return HarmonicFunction(AnalyticPolynomial::monomial(c, n));
}

// Re(c z^n) + ... written as an analytic coefficient list.
inline HarmonicFunction analytic(std::vector<ComplexRational> coeffs) {
  return HarmonicFunction(AnalyticPolynomial(std::move(coeffs)));
}

inline HarmonicFunction coord_x() { return z_power(1); }
// y = Re(-i z)
inline HarmonicFunction coord_y() { return z_power(1, ComplexRational{0, -1}); }
// xy = Re(-i z^2 / 2)
inline HarmonicFunction coord_xy() { return z_power(2, ComplexRational{0, q(-1, 2)}); }

inline HarmonicSurface plane() { return HarmonicSurface(coord_x(), coord_y(), HarmonicFunction()); }
inline HarmonicSurface saddle(Domain d = {}) { return HarmonicSurface(coord_x(), coord_y(), coord_xy(), d); }

// Test-side generator, independent of verify::random_surface.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long height = 9) { return make_rational(integer(-height, height), integer(1, height)); }
  HarmonicFunction harmonic(int degree) {
    std::vector<ComplexRational> c;
    for (int n = 0; n <= degree; ++n) c.emplace_back(rational(), rational());
    return HarmonicFunction(AnalyticPolynomial(std::move(c)));
  }
  Point2 point() { return {make_rational(integer(-50, 50), 50), make_rational(integer(-50, 50), 50)}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hg::test
