// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hg/error.hpp"
#include "hg/gauss_map.hpp"
#include "hg/verify.hpp"
#include "hg/weierstrass.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace hg;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::size_t count(const VerificationReport& r, const std::string& prefix, Outcome o) {
  std::size_t n = 0;
  for (const Record& rec : r.records())
    if (rec.case_id.starts_with(prefix) && rec.outcome == o) ++n;
  return n;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

HarmonicSurface saddle() {
  return HarmonicSurface(HarmonicFunction(AnalyticPolynomial::identity()),
                         HarmonicFunction(AnalyticPolynomial::monomial(ComplexRational{0, -1}, 1)),
                         HarmonicFunction(AnalyticPolynomial::monomial(ComplexRational{0, make_rational(-1, 2)}, 2)));
}

Verdict exact_identity() {
  const VerificationReport n = theorem1_exact_suite(100, {4, 10, 1, true}, 5);
  const VerificationReport g = theorem1_exact_suite(100, {4, 10, 1, false}, 5);
  const Summary& a = n.summary();
  const Summary& b = g.summary();
  return {a.failed == 0 && b.failed == 0 && a.passed > 0 && b.passed > 0,
          fmt("normalized %zu pass / %zu fail / %zu skip; general %zu pass / %zu fail / %zu skip", a.passed, a.failed,
              a.skipped, b.passed, b.failed, b.skipped)};
}

Verdict n_identity() {
  const VerificationReport r = n_identity_suite(100, {6, 10, 1, true});
  return {r.summary().failed == 0 && r.summary().passed == 100,
          fmt("%zu of 100 jets satisfy N = gamma M with printed M = reduced M", r.summary().passed)};
}

Verdict numeric_bridge() {
  const HarmonicSurface s = saddle();
  const auto grid = rational_grid(s.domain(), 9, 9);
  const VerificationReport coarse = theorem1_numeric_suite(s, grid, 1e-5, 1e-6);
  const VerificationReport fine = theorem1_numeric_suite(s, grid, 5e-6, 1e-6);
  const double dc = coarse.metric("max_rel_dev_bridge").value_or(INFINITY);
  const double df = fine.metric("max_rel_dev_bridge").value_or(INFINITY);
  const double ratio = dc / df;
  return {coarse.summary().failed == 0 && dc <= 1e-6 && ratio >= 3.0 && ratio <= 5.0,
          fmt("max rel dev %.3g at h=1e-5, %.3g at h=5e-6, ratio %.3f", dc, df, ratio)};
}

Verdict parabolic_line() {
  const VerificationReport r = remark14_counterexample();
  const bool symbolic = count(r, "symbolic-m", Outcome::pass) == 1;
  const std::size_t on_line = count(r, "on-line", Outcome::pass);
  const std::size_t off_line = count(r, "off-line", Outcome::pass);
  std::size_t line_g_zero = 0;
  const HarmonicSurface s = remark14_surface();
  for (const Record& rec : r.records())
    if (rec.case_id == "on-line" && sgn(tangents(s, *rec.point).g_sq) == 0) ++line_g_zero;
  return {symbolic && on_line == 10 && off_line == 10,
          fmt("symbolic M = 16(y+1/2)^4: %s; line points with M = 0 and g_sq > 0: %zu/10 (g_sq = 0 at %zu); "
              "off-line M > 0: %zu/10",
              symbolic ? "yes" : "no", on_line, line_g_zero, off_line)};
}

Verdict planar_families() {
  const auto params = default_family_params();
  const auto cs = default_family_c();
  const VerificationReport r = theorem3_family_suite(params, cs, 50, {4, 10, 1, true});
  const std::size_t fam = count(r, "family-", Outcome::pass);
  const double nonplanar = r.metric("nonplanar_count").value_or(0);
  return {r.ok() && fam == 25 && nonplanar == 50.0,
          fmt("families planar with normal ~ (nu1, -1, lambda0): %zu/25; random nonplanar with witness: %.0f/50", fam,
              nonplanar)};
}

Verdict enneper() {
  const PhiTriple phi = phi_from_pq(enneper_data());
  const bool null_ok = null_check(phi);
  const HarmonicSurface s = integrate(phi);
  const auto grid = rational_grid(s.domain(), 5, 5);
  const VerificationReport m = verify_minimal(s, grid);
  std::size_t regular = 0;
  std::size_t unit = 0;
  for (const Point2& p : grid) {
    if (sgn(gauss_derivatives(s, p).cross_sq) == 0) continue;
    ++regular;
    if (gauss_distortion_sq(s, p) == 1) ++unit;
  }
  return {null_ok && m.summary().passed == 25 && regular == unit && regular > 0,
          fmt("null check %s; isothermal with unit distortion %zu/25; Gauss distortion 1 at %zu/%zu regular points",
              null_ok ? "ok" : "violated", m.summary().passed, unit, regular)};
}

Verdict dilatation() {
  const std::vector<Point2> pts{{1, 0}};
  const VerificationReport r = dilatation_bridge_check(saddle(), pts, 1e-5, 1e-6);
  double mu = NAN;
  for (const auto& [k, v] : r.records().front().numeric)
    if (k == "beltrami_fd") mu = v;
  const double expected = (std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) + 1.0);
  const double dev = std::abs(mu - expected);
  return {r.ok() && dev <= 1e-6, fmt("|g_zbar/g_z| = %.10f, expected %.10f, deviation %.2g", mu, expected, dev)};
}

Verdict curvature() {
  const VerificationReport r = curvature_sign_suite(20, {4, 10, 1, false}, 25);
  return {r.summary().failed == 0 && r.summary().total() == 500,
          fmt("%zu pass, %zu fail, %zu skipped of %zu points", r.summary().passed, r.summary().failed,
              r.summary().skipped, r.summary().total())};
}

Verdict determinism() {
  const HarmonicSurface s = saddle();
  const auto grid = rational_grid(s.domain(), 9, 9);
  const auto params = default_family_params();
  const auto cs = default_family_c();
  const std::vector<std::function<VerificationReport()>> suites{
      [] { return theorem1_exact_suite(100, {4, 10, 1, true}, 5); },
      [] { return n_identity_suite(100, {6, 10, 1, true}); },
      [&] { return theorem1_numeric_suite(s, grid, 1e-5, 1e-6); },
      [&] { return dilatation_bridge_check(s, grid, 1e-5, 1e-6); },
      [] { return remark14_counterexample(); },
      [&] { return theorem3_family_suite(params, cs, 50, {4, 10, 1, true}); },
      [] { return curvature_sign_suite(20, {4, 10, 1, false}, 25); },
  };
  std::size_t identical = 0;
  for (const auto& run : suites) {
    const std::string first = run().to_json().dump(2);
    const std::string second = run().to_json().dump(2);
    ::setenv("HG_THREADS", "1", 1);
    const std::string serial = run().to_json().dump(2);
    ::unsetenv("HG_THREADS");
    if (first == second && first == serial) ++identical;
  }
  return {identical == suites.size(),
          fmt("%zu/%zu suites byte-identical across repeats and thread counts", identical, suites.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exact distortion identity", exact_identity},
      {"N identity", n_identity},
      {"numeric bridge", numeric_bridge},
      {"parabolic-line example", parabolic_line},
      {"planar families", planar_families},
      {"Enneper surface", enneper},
      {"dilatation bridge", dilatation},
      {"curvature sign", curvature},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu [%s] %s: %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
