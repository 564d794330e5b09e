#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hg/error.hpp"
#include "hg/gauss_map.hpp"
#include "hg/verify.hpp"
#include "hg/weierstrass.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace hg;
using hg::test::q;

namespace {

AnalyticPolynomial poly(std::vector<ComplexRational> c) { return AnalyticPolynomial(std::move(c)); }

double numeric(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r.numeric)
    if (k == key) return v;
  FAIL("missing numeric field " << key);
  return 0;
}

std::string exact(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r.exact)
    if (k == key) return v;
  return {};
}

}  // namespace

TEST_CASE("phi from p, q") {
  const PhiTriple t = phi_from_pq(enneper_data());
  CHECK(t.phi1 == poly({1, 0, -1}));
  CHECK(t.phi2 == poly({kImaginaryUnit, 0, kImaginaryUnit}));
  CHECK(t.phi3 == poly({0, 2}));
  CHECK(null_check(t));

  const WeierstrassData d(poly({1, 2}), poly({0, 0, ComplexRational{q(1, 2), 3}}));
  CHECK(null_check(phi_from_pq(d)));
  CHECK_THROWS_AS(WeierstrassData(AnalyticPolynomial(), poly({0, 1})), Error);
}

TEST_CASE("null check and integration") {
  const PhiTriple bad{poly({1}), poly({}), poly({})};
  CHECK_FALSE(null_check(bad));
  try {
    integrate(bad);
    FAIL("expected null violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::null_violation);
  }

  const HarmonicSurface e = weierstrass_surface(enneper_data());
  CHECK(e.a().analytic() == poly({0, 1, 0, q(-1, 3)}));
  CHECK(e.b().analytic() == poly({0, kImaginaryUnit, 0, ComplexRational{0, q(1, 3)}}));
  CHECK(e.c().analytic() == poly({0, 0, 1}));
  // (x - x^3/3 + x y^2, -y - x^2 y + y^3/3, x^2 - y^2) at (1, 1).
  CHECK(e.position({1, 1}) == Vec3<Rational>{q(5, 3), q(-5, 3), 0});
  CHECK_FALSE(is_branch_point(e, {0, 0}));

  const Domain big(-3, 3, -3, 3);
  CHECK(weierstrass_surface(enneper_data(), big).domain() == big);
}

TEST_CASE("verify minimal") {
  const HarmonicSurface e = weierstrass_surface(enneper_data());
  const auto grid = rational_grid(Domain{}, 5, 5);
  const VerificationReport r = verify_minimal(e, grid);
  CHECK(r.ok());
  CHECK(r.summary().passed == 25);
  CHECK(exact(r.records()[12], "normal_z_sign") == "-1");
  CHECK(exact(r.records()[12], "distortion_sq") == "1/1");
  REQUIRE(r.notes().size() == 1);
  CHECK(r.notes()[0].find("-z") != std::string::npos);

  // p = z vanishes at the origin: a branch point, skipped.
  const HarmonicSurface branched = weierstrass_surface(WeierstrassData(poly({0, 1}), poly({0, 1})));
  CHECK(is_branch_point(branched, {0, 0}));
  const std::vector<Point2> pts{{0, 0}, {q(1, 2), q(1, 3)}};
  const VerificationReport rb = verify_minimal(branched, pts);
  CHECK(rb.records()[0].outcome == Outcome::skip);
  CHECK(rb.records()[1].outcome == Outcome::pass);

  // A non-minimal harmonic surface fails.
  const std::vector<Point2> one{{1, 0}};
  const VerificationReport rs = verify_minimal(test::saddle(), one);
  CHECK_FALSE(rs.ok());
  CHECK(rs.records()[0].reason == "not isothermal");
}

TEST_CASE("Gauss map against q") {
  const std::vector<Point2> pts{{q(1, 2), 0}, {q(1, 2), q(1, 3)}};
  const VerificationReport r = gauss_vs_q(enneper_data(), pts);
  CHECK(r.ok());
  CHECK(r.summary().info == 2);
  for (const Record& rec : r.records()) {
    CHECK(numeric(rec, "deviation_q") < 1e-12);
    CHECK(numeric(rec, "minus_i_over_dq_im") == doctest::Approx(-1.0));
  }
  CHECK(numeric(r.records()[0], "gauss_re") == doctest::Approx(0.5).epsilon(1e-14));

  const WeierstrassData d(poly({1}), poly({0, 0, 1}));
  const std::vector<Point2> p2{{q(1, 3), 0}, {0, 0}};
  const VerificationReport r2 = gauss_vs_q(d, p2);
  const Record& a = r2.records()[0];
  CHECK(numeric(a, "q_re") == doctest::Approx(1.0 / 9.0));
  CHECK(numeric(a, "minus_i_over_dq_re") == doctest::Approx(0.0));
  CHECK(numeric(a, "minus_i_over_dq_im") == doctest::Approx(-1.5));
  CHECK(numeric(a, "deviation_q") < 1e-12);
  CHECK(numeric(a, "deviation_minus_i_over_dq") > 1.0);
  CHECK(exact(r2.records()[1], "minus_i_over_dq") == "undefined");
}

TEST_CASE("Gauss map of polynomial data equals q") {
  test::Gen gen(3);
  for (int k = 0; k < 10; ++k) {
    const WeierstrassData d(poly({ComplexRational(gen.rational(), gen.rational()) + 10}),
                            poly({ComplexRational(gen.rational(), gen.rational()), ComplexRational(gen.rational(), 0)}));
    const HarmonicSurface s = weierstrass_surface(d);
    const Point2 p = gen.point();
    const std::complex<long double> expected = d.q.evaluate(ComplexRational{p.x, p.y}).to_complex();
    try {
      const auto g = complex_gauss(s, p);
      CHECK(std::abs(std::complex<long double>(g.real(), g.imag()) - expected) <= 1e-12L * (1 + std::abs(expected)));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::north_pole);
    }
    CHECK(distortion_sq(s, p) == 1);
  }
}
