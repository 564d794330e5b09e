#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hg/gauss_map.hpp"
#include "hg/verify.hpp"
#include "test_support.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

using namespace hg;
using hg::test::q;

namespace {

std::size_t count_case(const VerificationReport& r, const std::string& prefix, Outcome o) {
  std::size_t n = 0;
  for (const Record& rec : r.records())
    if (rec.case_id.starts_with(prefix) && rec.outcome == o) ++n;
  return n;
}

}  // namespace

TEST_CASE("draw") {
  std::mt19937_64 a(9);
  std::mt19937_64 b(9);
  std::array<int, 5> hist{};
  for (int k = 0; k < 5000; ++k) {
    const long v = draw(a, -2, 2);
    CHECK(v == draw(b, -2, 2));
    REQUIRE(v >= -2);
    REQUIRE(v <= 2);
    ++hist[v + 2];
  }
  for (int h : hist) CHECK(std::abs(h - 1000) < 150);
  std::mt19937_64 c(1);
  CHECK(draw(c, 7, 7) == 7);
}

TEST_CASE("case seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 200; ++i) seen.insert(case_seed(1, i));
  CHECK(seen.size() == 200);
  CHECK(case_seed(1, 5) == case_seed(1, 5));
  CHECK(case_seed(1, 5) != case_seed(2, 5));
}

TEST_CASE("random surfaces") {
  const RandomSurfaceSpec spec{4, 10, 17, true};
  const HarmonicSurface s = random_surface(spec);
  CHECK(s.is_graph_normalized());
  CHECK(s.domain() == Domain{});
  CHECK(random_surface(spec).coordinates() == s.coordinates());
  CHECK_FALSE(random_surface({4, 10, 18, true}).coordinates() == s.coordinates());
  for (std::size_t k = 1; k < 3; ++k) {
    const AnalyticPolynomial& f = s.coordinates()[k].analytic();
    CHECK(f.degree() <= 4);
    for (const ComplexRational& c : f.coefficients()) {
      CHECK(abs(c.re.get_num()) <= 10);
      CHECK(c.re.get_den() <= 10);
      CHECK(abs(c.im.get_num()) <= 10);
      CHECK(c.im.get_den() <= 10);
    }
  }
  const HarmonicSurface g = random_surface({3, 5, 2, false});
  CHECK(g.a().analytic().degree() <= 3);
  CHECK(g.a().analytic() != AnalyticPolynomial::identity());
}

TEST_CASE("random points and grids") {
  std::mt19937_64 rng(4);
  const Domain d(q(-1, 2), 2, 0, q(1, 3));
  for (int k = 0; k < 100; ++k) {
    const Point2 p = random_point(rng, d);
    CHECK(d.contains(p));
    const Point2 u = random_point(rng, Domain{});
    CHECK(u.x.get_den() <= 1000);
    CHECK(u.y.get_den() <= 1000);
  }
  const auto grid = rational_grid(Domain(0, 1, 0, 1), 3, 2);
  REQUIRE(grid.size() == 6);
  CHECK(grid[0] == Point2{0, 0});
  CHECK(grid[1] == Point2{q(1, 2), 0});
  CHECK(grid[2] == Point2{1, 0});
  CHECK(grid[3] == Point2{0, 1});
  CHECK(grid[5] == Point2{1, 1});
}

TEST_CASE("exact suites") {
  const VerificationReport r = theorem1_exact_suite(10, {4, 10, 1, true}, 5);
  CHECK(r.ok());
  CHECK(r.summary().total() == 50);
  CHECK(r.summary().passed > 40);
  CHECK(theorem1_exact_suite(5, {3, 10, 2, false}, 4).ok());
  CHECK(n_identity_suite(20, {6, 10, 3, true}).summary().passed == 20);
  const VerificationReport c = curvature_sign_suite(4, {4, 10, 4, true}, 5);
  CHECK(c.ok());
  CHECK(c.summary().total() == 20);
}

TEST_CASE("suites are reproducible and independent of the thread count") {
  const RandomSurfaceSpec spec{4, 10, 99, true};
  const std::string first = theorem1_exact_suite(8, spec, 3).to_json().dump();
  CHECK(theorem1_exact_suite(8, spec, 3).to_json().dump() == first);
  ::setenv("HG_THREADS", "1", 1);
  CHECK(theorem1_exact_suite(8, spec, 3).to_json().dump() == first);
  ::unsetenv("HG_THREADS");
}

TEST_CASE("numeric suite converges at second order") {
  const HarmonicSurface s = test::saddle();
  const auto grid = rational_grid(s.domain(), 9, 9);
  const VerificationReport coarse = theorem1_numeric_suite(s, grid, 1e-5, 1e-6);
  const VerificationReport fine = theorem1_numeric_suite(s, grid, 5e-6, 1e-6);
  CHECK(coarse.ok());
  CHECK(coarse.summary().passed == 81);
  const double dc = *coarse.metric("max_rel_dev_bridge");
  const double df = *fine.metric("max_rel_dev_bridge");
  CHECK(dc <= 1e-6);
  CHECK(dc / df >= 3.0);
  CHECK(dc / df <= 5.0);
  CHECK(*coarse.metric("max_rel_dev_distortion") <= 1e-6);

  CHECK_FALSE(theorem1_numeric_suite(s, grid, 1e-2, 1e-12).ok());
}

TEST_CASE("dilatation bridge") {
  const std::vector<Point2> pts{{1, 0}, {0, 0}};
  const VerificationReport r = dilatation_bridge_check(test::saddle(), pts, 1e-5, 1e-6);
  CHECK(r.ok());
  CHECK(r.records()[1].outcome == Outcome::skip);
  // D^2 = 9/8 at (1, 0): |mu| = (K - 1)/(K + 1) with K = sqrt 2, i.e. 3 - 2 sqrt 2.
  const Record& rec = r.records()[0];
  double mu = 0;
  for (const auto& [k, v] : rec.numeric)
    if (k == "beltrami_fd") mu = v;
  CHECK(std::abs(mu - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-6);
}

TEST_CASE("parabolic line example") {
  const HarmonicSurface s = remark14_surface();
  CHECK(s.domain() == Domain(-2, 2, -2, 2));
  // b = -x^3/3 + x (1/2 + y)^2, c = 1 - x^2 + y + y^2.
  CHECK(eval(s.b(), {1, q(1, 2)}) == q(2, 3));
  CHECK(eval(s.c(), {1, q(1, 2)}) == q(3, 4));

  const VerificationReport r = remark14_counterexample();
  CHECK(count_case(r, "harmonic-", Outcome::pass) == 3);
  CHECK(count_case(r, "symbolic-m", Outcome::pass) == 1);
  CHECK(count_case(r, "symbolic-n", Outcome::pass) == 1);
  CHECK(count_case(r, "off-line", Outcome::pass) == 10);
  // Every point of y = -1/2 is a branch point of the surface itself, so
  // the line cannot supply regular points with M = 0.
  CHECK(count_case(r, "on-line", Outcome::fail) == 10);
  for (int k = -4; k <= 5; ++k) {
    const Point2 p{q(k, 3), q(-1, 2)};
    CHECK(tangents(s, p).g_sq == 0);
    CHECK(mn_quantities(jet(s, p)).m == 0);
  }
  CHECK_FALSE(r.ok());
}

TEST_CASE("planar family and random dichotomy") {
  const auto params = default_family_params();
  const auto cs = default_family_c();
  CHECK(params.size() * cs.size() == 25);
  const VerificationReport r = theorem3_family_suite(params, cs, 10, {4, 10, 5, true});
  CHECK(r.ok());
  CHECK(count_case(r, "family-", Outcome::pass) == 25);
  CHECK(*r.metric("nonplanar_count") == 10.0);

  const HarmonicSurface s = planar_family_surface({2, -1, 3}, test::z_power(2));
  CHECK(eval(s.b(), {1, 1}) == 2 * eval(s.c(), {1, 1}) - 1 + 3);
}
