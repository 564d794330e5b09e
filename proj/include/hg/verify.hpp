#pragma once

#include "hg/report.hpp"
#include "hg/surface.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hg {

struct RandomSurfaceSpec {
  int degree = 4;
  int height = 10;
  std::uint64_t seed = 0;
  bool normalized = true;  // a = x
};

// Coordinates are Re of polynomials whose z^0..z^degree coefficients have
// numerators in [-height, height] and denominators in [1, height]. The
// domain is [-1, 1]^2. Deterministic in the seed.
HarmonicSurface random_surface(const RandomSurfaceSpec& spec);

// Seed of the index-th case derived from a suite seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [lo, hi] from the raw engine output, identical on
// every standard library.
long draw(std::mt19937_64& rng, long lo, long hi);

// lo + (hi - lo) t on each axis, t in [0, 1] with denominator at most 1000.
Point2 random_point(std::mt19937_64& rng, const Domain& domain);

// nx x ny nodes including the corners, row-major (y outer).
std::vector<Point2> rational_grid(const Domain& domain, int nx, int ny);

// Per random point: gauss_distortion_sq == distortion_sq; on normalized
// surfaces also N == gamma M, printed M == reduced M,
// (|P|^2 + |Q|^2) G^4 == N and |P x Q|^2 G^6 == M^2. Branch points and
// Gauss-degenerate points are skipped.
VerificationReport theorem1_exact_suite(int count, const RandomSurfaceSpec& spec, int points_per_surface);

// Random normalized jets: N == gamma M and printed M == reduced M.
VerificationReport n_identity_suite(int count, const RandomSurfaceSpec& spec);

// curvature_sign <= 0 at random regular points.
VerificationReport curvature_sign_suite(int count, const RandomSurfaceSpec& spec, int points_per_surface);

// Central differences of the floating normal against the exact values.
// Metrics: max_rel_dev_bridge (|P|^2+|Q|^2 and |P x Q|), max_rel_dev_distortion.
VerificationReport theorem1_numeric_suite(const HarmonicSurface& s, std::span<const Point2> grid, double fd_step,
                                          double tol);

// |g_zbar / g_z| by central differences against dilatation_from_distortion.
VerificationReport dilatation_bridge_check(const HarmonicSurface& s, std::span<const Point2> points, double fd_step,
                                           double tol);

// (x, -x^3/3 + x(1/2 + y)^2, 1 - x^2 + y + y^2) on [-2, 2]^2.
HarmonicSurface remark14_surface();
VerificationReport remark14_counterexample();

struct FamilyParams {
  Rational lambda0;
  Rational nu0;
  Rational nu1;
};

// (x, lambda0 c + nu0 + nu1 x, c) for every parameter triple and c.
HarmonicSurface planar_family_surface(const FamilyParams& params, const HarmonicFunction& c);

std::vector<FamilyParams> default_family_params();
std::vector<HarmonicFunction> default_family_c();

VerificationReport theorem3_family_suite(std::span<const FamilyParams> params, std::span<const HarmonicFunction> c_choices,
                                         int count_nonplanar, const RandomSurfaceSpec& spec);

}  // namespace hg
