#pragma once

#include "hg/polynomial.hpp"
#include "hg/report.hpp"
#include "hg/surface.hpp"

#include <span>

namespace hg {

// Polynomial Weierstrass data. q is restricted to polynomials, so there is
// no pole-cancellation condition on p. Throws Error(invalid_argument) if p
// is zero.
struct WeierstrassData {
  AnalyticPolynomial p;
  AnalyticPolynomial q;

  WeierstrassData(AnalyticPolynomial p_, AnalyticPolynomial q_);
};

struct PhiTriple {
  AnalyticPolynomial phi1;
  AnalyticPolynomial phi2;
  AnalyticPolynomial phi3;
};

// (p(1 - q^2), i p(1 + q^2), 2pq)
PhiTriple phi_from_pq(const WeierstrassData& d);

// phi1^2 + phi2^2 + phi3^2 is the zero polynomial.
bool null_check(const PhiTriple& t);

// x_k = Re of the antiderivative of phi_k vanishing at 0.
// Throws Error(null_violation).
HarmonicSurface integrate(const PhiTriple& t, const Domain& domain = {});

inline HarmonicSurface weierstrass_surface(const WeierstrassData& d, const Domain& domain = {}) {
  return integrate(phi_from_pq(d), domain);
}

// Enneper data p = 1, q = z.
WeierstrassData enneper_data();

// Per point: exact isothermality and unit distortion; branch points are
// skipped. The sign of the normal's z component is recorded as well.
VerificationReport verify_minimal(const HarmonicSurface& s, std::span<const Point2> points);

// Compares the complex Gauss map against q(z) and -i/q'(z). Informational
// only: neither candidate is asserted.
VerificationReport gauss_vs_q(const WeierstrassData& d, std::span<const Point2> points, const Domain& domain = {});

}  // namespace hg
