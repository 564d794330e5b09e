#include "hg/verify.hpp"

#include "hg/error.hpp"
#include "hg/gauss_map.hpp"
#include "hg/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rational random_rational(std::mt19937_64& rng, int height) {
  return make_rational(draw(rng, -height, height), draw(rng, 1, height));
}

HarmonicFunction random_harmonic(std::mt19937_64& rng, int degree, int height) {
  std::vector<ComplexRational> coeffs;
  for (int n = 0; n <= degree; ++n) coeffs.emplace_back(random_rational(rng, height), random_rational(rng, height));
  return HarmonicFunction(AnalyticPolynomial(std::move(coeffs)));
}

std::string spec_string(const RandomSurfaceSpec& spec) {
  return "degree=" + std::to_string(spec.degree) + " height=" + std::to_string(spec.height) +
         " seed=" + std::to_string(spec.seed) + " normalized=" + (spec.normalized ? "true" : "false");
}

void describe(VerificationReport& report, const RandomSurfaceSpec& spec) {
  report.set_parameter("degree", std::to_string(spec.degree));
  report.set_parameter("height", std::to_string(spec.height));
  report.set_parameter("seed", std::to_string(spec.seed));
  report.set_parameter("normalized", spec.normalized ? "true" : "false");
}

RandomSurfaceSpec case_spec(const RandomSurfaceSpec& spec, std::size_t index) {
  RandomSurfaceSpec out = spec;
  out.seed = case_seed(spec.seed, index);
  return out;
}

// Runs per_case(i, records) for every case in parallel and appends the
// records in case order.
template <class Fn>
void run_cases(VerificationReport& report, std::size_t count, Fn&& per_case) {
  std::vector<std::vector<Record>> results(count);
  parallel_for(count, [&](std::size_t i) { per_case(i, results[i]); });
  for (auto& rs : results) {
    for (auto& r : rs) report.add(std::move(r));
  }
}

long double rel_dev(long double approx, long double exact) {
  const long double scale = std::max(std::abs(exact), std::numeric_limits<long double>::min());
  return std::abs(approx - exact) / scale;
}

Vec3<long double> central(const Vec3<long double>& plus, const Vec3<long double>& minus, long double h) {
  const long double inv = 1.0L / (2.0L * h);
  return {(plus.x - minus.x) * inv, (plus.y - minus.y) * inv, (plus.z - minus.z) * inv};
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x5851F42D4C957F2DULL));
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<long>(v % range);
}

Point2 random_point(std::mt19937_64& rng, const Domain& domain) {
  const long den = draw(rng, 1, 1000);
  const Rational tx = make_rational(draw(rng, 0, den), den);
  const Rational ty = make_rational(draw(rng, 0, den), den);
  return {domain.x_lo + (domain.x_hi - domain.x_lo) * tx, domain.y_lo + (domain.y_hi - domain.y_lo) * ty};
}

HarmonicSurface random_surface(const RandomSurfaceSpec& spec) {
  if (spec.degree < 1 || spec.height < 1) throw Error(ErrorKind::invalid_argument, "degree and height must be >= 1");
  std::mt19937_64 rng(spec.seed);
  HarmonicFunction a(AnalyticPolynomial::identity());
  if (!spec.normalized) a = random_harmonic(rng, spec.degree, spec.height);
  HarmonicFunction b = random_harmonic(rng, spec.degree, spec.height);
  HarmonicFunction c = random_harmonic(rng, spec.degree, spec.height);
  return HarmonicSurface(std::move(a), std::move(b), std::move(c));
}

std::vector<Point2> rational_grid(const Domain& domain, int nx, int ny) {
  if (nx < 2 || ny < 2) throw Error(ErrorKind::invalid_argument, "grid needs at least 2 nodes per axis");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (int j = 0; j < ny; ++j) {
    const Rational y = domain.y_lo + (domain.y_hi - domain.y_lo) * make_rational(j, ny - 1);
    for (int i = 0; i < nx; ++i) {
      out.push_back({domain.x_lo + (domain.x_hi - domain.x_lo) * make_rational(i, nx - 1), y});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport theorem1_exact_suite(int count, const RandomSurfaceSpec& spec, int points_per_surface) {
  VerificationReport report("thm1-exact");
  describe(report, spec);
  report.set_parameter("count", std::to_string(count));
  report.set_parameter("points_per_surface", std::to_string(points_per_surface));

  run_cases(report, static_cast<std::size_t>(std::max(count, 0)), [&](std::size_t i, std::vector<Record>& out) {
    const RandomSurfaceSpec cs = case_spec(spec, i);
    const HarmonicSurface s = random_surface(cs);
    std::mt19937_64 rng(case_seed(cs.seed, 1));
    for (int k = 0; k < points_per_surface; ++k) {
      Record rec;
      rec.case_id = "surface-" + std::to_string(i);
      rec.point = random_point(rng, s.domain());
      const Point2& p = *rec.point;
      const TangentData t = tangents(s, p);
      if (sgn(t.g_sq) == 0) {
        rec.outcome = Outcome::skip;
        rec.reason = "branch point";
        out.push_back(std::move(rec));
        continue;
      }
      const GaussDerivatives d = gauss_derivatives(s, p);
      if (sgn(d.cross_sq) == 0) {
        rec.outcome = Outcome::skip;
        rec.reason = "Gauss-degenerate";
        out.push_back(std::move(rec));
        continue;
      }
      const Rational surface = t.energy * t.energy / (4 * t.g_sq);
      const Rational gauss_energy = d.p_sq + d.q_sq;
      const Rational gauss = gauss_energy * gauss_energy / (4 * d.cross_sq);
      rec.exact = {{"dist_sq_surface", to_string(surface)}, {"dist_sq_gauss", to_string(gauss)}};
      std::vector<std::string> failures;
      if (surface != gauss) failures.emplace_back("distortion mismatch");

      if (s.is_graph_normalized()) {
        const GaussJet j = jet(s, p);
        const MNQuantities q = mn_quantities(j);
        const Rational n = n_explicit(j);
        rec.exact.emplace_back("m", to_string(q.m));
        rec.exact.emplace_back("n", to_string(n));
        rec.exact.emplace_back("gamma", to_string(q.gamma));
        if (n != q.gamma * q.m) failures.emplace_back("N != gamma M");
        if (q.m != m_reduced(j, q)) failures.emplace_back("printed M != reduced M");
        if (q.g_sq != d.g_sq) failures.emplace_back("G^2 != |V|^2");
        const Rational g4 = q.g_sq * q.g_sq;
        if (gauss_energy * g4 != n) failures.emplace_back("(|P|^2+|Q|^2) G^4 != N");
        if (d.cross_sq * g4 * q.g_sq != q.m * q.m) failures.emplace_back("|PxQ|^2 G^6 != M^2");
      }
      rec.outcome = failures.empty() ? Outcome::pass : Outcome::fail;
      for (const auto& f : failures) rec.reason += (rec.reason.empty() ? "" : "; ") + f;
      out.push_back(std::move(rec));
    }
  });
  return report;
}

VerificationReport n_identity_suite(int count, const RandomSurfaceSpec& spec) {
  VerificationReport report("n-identity");
  RandomSurfaceSpec base = spec;
  base.normalized = true;
  describe(report, base);
  report.set_parameter("count", std::to_string(count));
  run_cases(report, static_cast<std::size_t>(std::max(count, 0)), [&](std::size_t i, std::vector<Record>& out) {
    const RandomSurfaceSpec cs = case_spec(base, i);
    const HarmonicSurface s = random_surface(cs);
    std::mt19937_64 rng(case_seed(cs.seed, 1));
    Record rec;
    rec.case_id = "jet-" + std::to_string(i);
    rec.point = random_point(rng, s.domain());
    const GaussJet j = jet(s, *rec.point);
    const MNQuantities q = mn_quantities(j);
    const Rational n = n_explicit(j);
    rec.exact = {{"n", to_string(n)}, {"gamma", to_string(q.gamma)}, {"m", to_string(q.m)}};
    const bool harmonic = is_harmonic(j);
    const bool identity = n == q.gamma * q.m;
    const bool reduced = q.m == m_reduced(j, q);
    rec.outcome = harmonic && identity && reduced ? Outcome::pass : Outcome::fail;
    if (!harmonic) rec.reason = "jet not harmonic";
    if (!identity) rec.reason = "N != gamma M";
    if (!reduced) rec.reason = "printed M != reduced M";
    out.push_back(std::move(rec));
  });
  return report;
}

VerificationReport curvature_sign_suite(int count, const RandomSurfaceSpec& spec, int points_per_surface) {
  VerificationReport report("curvature");
  describe(report, spec);
  report.set_parameter("count", std::to_string(count));
  report.set_parameter("points_per_surface", std::to_string(points_per_surface));
  run_cases(report, static_cast<std::size_t>(std::max(count, 0)), [&](std::size_t i, std::vector<Record>& out) {
    const RandomSurfaceSpec cs = case_spec(spec, i);
    const HarmonicSurface s = random_surface(cs);
    std::mt19937_64 rng(case_seed(cs.seed, 1));
    for (int k = 0; k < points_per_surface; ++k) {
      Record rec;
      rec.case_id = "surface-" + std::to_string(i);
      rec.point = random_point(rng, s.domain());
      if (is_branch_point(s, *rec.point)) {
        rec.outcome = Outcome::skip;
        rec.reason = "branch point";
        out.push_back(std::move(rec));
        continue;
      }
      const Rational value = curvature_sign(s, *rec.point);
      rec.exact = {{"curvature_sign", to_string(value)}};
      rec.outcome = sgn(value) <= 0 ? Outcome::pass : Outcome::fail;
      out.push_back(std::move(rec));
    }
  });
  return report;
}

// ---------------------------------------------------------------------------

VerificationReport theorem1_numeric_suite(const HarmonicSurface& s, std::span<const Point2> grid, double fd_step,
                                          double tol) {
  VerificationReport report("thm1-numeric");
  report.set_parameter("points", std::to_string(grid.size()));
  report.set_parameter("fd_step", nlohmann::json(fd_step).dump());
  report.set_parameter("tol", nlohmann::json(tol).dump());
  report.set_parameter("normalized", s.is_graph_normalized() ? "true" : "false");
  const FloatingSurface fs(s);
  const long double h = fd_step;
  long double max_bridge = 0;
  long double max_distortion = 0;

  for (const auto& p : grid) {
    Record rec;
    rec.case_id = "grid";
    rec.point = p;
    const TangentData t = tangents(s, p);
    if (sgn(t.g_sq) == 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "branch point";
      report.add(std::move(rec));
      continue;
    }
    const GaussDerivatives d = gauss_derivatives(s, p);
    if (sgn(d.cross_sq) == 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "Gauss-degenerate";
      report.add(std::move(rec));
      continue;
    }
    // Exact targets. Normalized surfaces use N/G^4 and |M|/G^3.
    long double exact_sum;
    long double exact_cross;
    const long double g = std::sqrt(to_long_double(t.g_sq));
    if (s.is_graph_normalized()) {
      const GaussJet j = jet(s, p);
      const MNQuantities q = mn_quantities(j);
      const long double g_sq = to_long_double(q.g_sq);
      exact_sum = to_long_double(n_explicit(j)) / (g_sq * g_sq);
      exact_cross = std::abs(to_long_double(q.m)) / (g_sq * g);
    } else {
      exact_sum = to_long_double(Rational(d.p_sq + d.q_sq));
      exact_cross = std::sqrt(to_long_double(d.cross_sq));
    }
    const long double exact_distortion = std::sqrt(to_long_double(Rational(t.energy * t.energy / (4 * t.g_sq))));

    const long double x = to_long_double(p.x);
    const long double y = to_long_double(p.y);
    const Vec3<long double> fd_p = central(fs.normal(x + h, y), fs.normal(x - h, y), h);
    const Vec3<long double> fd_q = central(fs.normal(x, y + h), fs.normal(x, y - h), h);
    const long double fd_sum = norm_sq(fd_p) + norm_sq(fd_q);
    const long double fd_cross = std::sqrt(norm_sq(cross(fd_p, fd_q)));
    const long double fd_distortion = fd_sum / (2.0L * fd_cross);

    const long double dev_sum = rel_dev(fd_sum, exact_sum);
    const long double dev_cross = rel_dev(fd_cross, exact_cross);
    const long double dev_distortion = rel_dev(fd_distortion, exact_distortion);
    max_bridge = std::max({max_bridge, dev_sum, dev_cross});
    max_distortion = std::max(max_distortion, dev_distortion);

    rec.numeric = {{"fd_sum", static_cast<double>(fd_sum)},
                   {"exact_sum", static_cast<double>(exact_sum)},
                   {"rel_dev_sum", static_cast<double>(dev_sum)},
                   {"fd_cross", static_cast<double>(fd_cross)},
                   {"exact_cross", static_cast<double>(exact_cross)},
                   {"rel_dev_cross", static_cast<double>(dev_cross)},
                   {"fd_distortion", static_cast<double>(fd_distortion)},
                   {"exact_distortion", static_cast<double>(exact_distortion)},
                   {"rel_dev_distortion", static_cast<double>(dev_distortion)}};
    const bool ok = dev_sum <= tol && dev_cross <= tol && dev_distortion <= tol;
    rec.outcome = ok ? Outcome::pass : Outcome::fail;
    if (!ok) rec.reason = "relative deviation above tolerance";
    report.add(std::move(rec));
  }
  report.set_metric("max_rel_dev_bridge", static_cast<double>(max_bridge));
  report.set_metric("max_rel_dev_distortion", static_cast<double>(max_distortion));
  return report;
}

VerificationReport dilatation_bridge_check(const HarmonicSurface& s, std::span<const Point2> points, double fd_step,
                                           double tol) {
  VerificationReport report("dilatation");
  report.set_parameter("points", std::to_string(points.size()));
  report.set_parameter("fd_step", nlohmann::json(fd_step).dump());
  report.set_parameter("tol", nlohmann::json(tol).dump());
  const FloatingSurface fs(s);
  const long double h = fd_step;
  long double max_dev = 0;

  for (const auto& p : points) {
    Record rec;
    rec.case_id = "point";
    rec.point = p;
    const TangentData t = tangents(s, p);
    if (sgn(t.g_sq) == 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "branch point";
      report.add(std::move(rec));
      continue;
    }
    if (sgn(t.v.x) == 0 && sgn(t.v.y) == 0 && sgn(t.v.z) > 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "north pole";
      report.add(std::move(rec));
      continue;
    }
    if (sgn(gauss_derivatives(s, p).cross_sq) == 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "Gauss-degenerate";
      report.add(std::move(rec));
      continue;
    }
    const long double x = to_long_double(p.x);
    const long double y = to_long_double(p.y);
    const std::complex<long double> g_x = (fs.complex_gauss(x + h, y) - fs.complex_gauss(x - h, y)) / (2.0L * h);
    const std::complex<long double> g_y = (fs.complex_gauss(x, y + h) - fs.complex_gauss(x, y - h)) / (2.0L * h);
    const std::complex<long double> i{0.0L, 1.0L};
    const std::complex<long double> g_z = (g_x - i * g_y) / 2.0L;
    const std::complex<long double> g_zbar = (g_x + i * g_y) / 2.0L;
    const long double mu = std::abs(g_zbar) / std::abs(g_z);
    const Rational d_sq = t.energy * t.energy / (4 * t.g_sq);
    const double expected = dilatation_from_distortion(d_sq);
    const long double dev = std::abs(mu - static_cast<long double>(expected));
    max_dev = std::max(max_dev, dev);
    rec.exact = {{"dist_sq_surface", to_string(d_sq)}};
    rec.numeric = {{"beltrami_fd", static_cast<double>(mu)},
                   {"dilatation_expected", expected},
                   {"abs_dev", static_cast<double>(dev)}};
    rec.outcome = dev <= tol ? Outcome::pass : Outcome::fail;
    if (rec.outcome == Outcome::fail) rec.reason = "deviation above tolerance";
    report.add(std::move(rec));
  }
  report.set_metric("max_abs_dev", static_cast<double>(max_dev));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

BivariatePolynomial remark14_b() {
  const auto x = BivariatePolynomial::x();
  const auto y = BivariatePolynomial::y();
  const BivariatePolynomial shifted = BivariatePolynomial(make_rational(1, 2)) + y;
  return BivariatePolynomial(make_rational(-1, 3)) * x.pow(3) + x * shifted * shifted;
}

BivariatePolynomial remark14_c() {
  const auto x = BivariatePolynomial::x();
  const auto y = BivariatePolynomial::y();
  return BivariatePolynomial(Rational(1)) - x * x + y + y * y;
}

}  // namespace

HarmonicSurface remark14_surface() {
  return HarmonicSurface(to_analytic(BivariatePolynomial::x()), to_analytic(remark14_b()), to_analytic(remark14_c()),
                         Domain(-2, 2, -2, 2));
}

VerificationReport remark14_counterexample() {
  VerificationReport report("remark14");
  const std::array<std::pair<std::string, BivariatePolynomial>, 3> inputs{
      {{"a", BivariatePolynomial::x()}, {"b", remark14_b()}, {"c", remark14_c()}}};
  for (const auto& [name, poly] : inputs) {
    Record rec;
    rec.case_id = "harmonic-" + name;
    const BivariatePolynomial residual = harmonic_residual(poly);
    rec.exact = {{"polynomial", to_string(poly)}, {"laplacian", to_string(residual)}};
    rec.outcome = residual.is_zero() ? Outcome::pass : Outcome::fail;
    report.add(std::move(rec));
  }

  const HarmonicSurface s = remark14_surface();
  const SymbolicJet sj = symbolic_jet(s);
  const BasicMN<BivariatePolynomial> sq = mn_quantities(sj);
  const BivariatePolynomial expected =
      BivariatePolynomial(Rational(16)) *
      (BivariatePolynomial::y() + BivariatePolynomial(make_rational(1, 2))).pow(4);
  {
    Record rec;
    rec.case_id = "symbolic-m";
    rec.exact = {{"m_expanded", to_string(sq.m)}, {"m_expected", "16*(y + 1/2)^4"}};
    rec.outcome = sq.m == expected && m_reduced(sj, sq) == sq.m ? Outcome::pass : Outcome::fail;
    report.add(std::move(rec));
  }
  {
    Record rec;
    rec.case_id = "symbolic-n";
    const BivariatePolynomial n = n_explicit(sj);
    rec.exact = {{"n_expanded", to_string(n)}};
    rec.outcome = n == sq.gamma * sq.m ? Outcome::pass : Outcome::fail;
    report.add(std::move(rec));
  }
  if (sq.m == expected) report.add_note("M = 16*(y + 1/2)^4");

  const Rational line_y = make_rational(-1, 2);
  std::size_t line_branch_points = 0;
  for (int k = -4; k <= 5; ++k) {
    Record rec;
    rec.case_id = "on-line";
    rec.point = Point2{make_rational(k, 3), line_y};
    const Point2& p = *rec.point;
    const TangentData t = tangents(s, p);
    const MNQuantities q = mn_quantities(jet(s, p));
    rec.exact = {{"m", to_string(q.m)}, {"g_sq", to_string(t.g_sq)}};
    if (sgn(t.g_sq) == 0) {
      ++line_branch_points;
      rec.outcome = Outcome::fail;
      rec.reason = "surface branch point (g_sq = 0): Y_y vanishes";
    } else {
      const Rational cross_sq = gauss_derivatives(s, p).cross_sq;
      rec.exact.emplace_back("cross_sq", to_string(cross_sq));
      rec.outcome = sgn(q.m) == 0 && sgn(cross_sq) == 0 ? Outcome::pass : Outcome::fail;
    }
    report.add(std::move(rec));
  }
  if (line_branch_points > 0) {
    report.add_note("b_y = 2x(y + 1/2) and c_y = 2(y + 1/2) vanish on y = -1/2, so every point of that line is a "
                    "branch point of the surface itself (g_sq = 0): " +
                    std::to_string(line_branch_points) + " of 10 sampled line points");
  }

  std::vector<Point2> off_line{{make_rational(1, 3), Rational(0)}};
  for (int k = 1; k <= 9; ++k) off_line.push_back({make_rational(k - 5, 4), make_rational(k - 4, 7)});
  for (const auto& p : off_line) {
    Record rec;
    rec.case_id = "off-line";
    rec.point = p;
    const MNQuantities q = mn_quantities(jet(s, p));
    rec.exact = {{"m", to_string(q.m)}, {"m_expected", to_string(Rational(expected.evaluate(p.x, p.y)))}};
    rec.outcome = sgn(q.m) > 0 && q.m == expected.evaluate(p.x, p.y) ? Outcome::pass : Outcome::fail;
    report.add(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------------------

HarmonicSurface planar_family_surface(const FamilyParams& params, const HarmonicFunction& c) {
  const AnalyticPolynomial b = ComplexRational(params.lambda0) * c.analytic() +
                               AnalyticPolynomial::constant(ComplexRational(params.nu0)) +
                               ComplexRational(params.nu1) * AnalyticPolynomial::identity();
  return HarmonicSurface(HarmonicFunction(AnalyticPolynomial::identity()), HarmonicFunction(b), c);
}

std::vector<FamilyParams> default_family_params() {
  return {{Rational(1), Rational(0), Rational(1)},
          {Rational(0), Rational(5), Rational(0)},
          {Rational(2), Rational(-1), Rational(3)},
          {make_rational(-1, 2), make_rational(7, 3), Rational(-2)},
          {Rational(3), Rational(0), make_rational(1, 5)}};
}

std::vector<HarmonicFunction> default_family_c() {
  const auto z = [](int n, ComplexRational c) { return AnalyticPolynomial::monomial(c, n); };
  return {HarmonicFunction(z(2, 1)),                                              // x^2 - y^2
          HarmonicFunction(z(3, 1)),                                              // Re z^3
          HarmonicFunction(z(2, ComplexRational{0, -1})),                         // 2xy
          HarmonicFunction(z(1, ComplexRational{0, 1}) + z(2, ComplexRational{make_rational(1, 2), 3})),
          HarmonicFunction(z(4, ComplexRational{1, 1}) - z(3, 2) + z(0, 7))};
}

VerificationReport theorem3_family_suite(std::span<const FamilyParams> params, std::span<const HarmonicFunction> c_choices,
                                         int count_nonplanar, const RandomSurfaceSpec& spec) {
  VerificationReport report("thm3");
  RandomSurfaceSpec base = spec;
  base.normalized = true;
  describe(report, base);
  report.set_parameter("family_params", std::to_string(params.size()));
  report.set_parameter("family_c", std::to_string(c_choices.size()));
  report.set_parameter("count_nonplanar", std::to_string(count_nonplanar));

  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    const FamilyParams& fp = params[pi];
    for (std::size_t ci = 0; ci < c_choices.size(); ++ci) {
      Record rec;
      rec.case_id = "family-" + std::to_string(pi) + "-" + std::to_string(ci);
      const HarmonicSurface s = planar_family_surface(fp, c_choices[ci]);
      rec.exact = {{"lambda0", to_string(fp.lambda0)}, {"nu0", to_string(fp.nu0)}, {"nu1", to_string(fp.nu1)},
                   {"c", to_string(c_choices[ci].analytic())}};
      try {
        const PlanarityResult r = planarity_classify(s);
        const Vec3<Rational> family_dir{fp.nu1, Rational(-1), fp.lambda0};
        const bool parallel = norm_sq(cross(r.direction, family_dir)) == 0;
        const BivariatePolynomial m = mn_quantities(symbolic_jet(s)).m;
        rec.point = r.reference;
        rec.exact.emplace_back("classification", r.planar ? "planar" : "nonplanar");
        rec.exact.emplace_back("direction", "(" + to_string(r.direction.x) + ", " + to_string(r.direction.y) + ", " +
                                                to_string(r.direction.z) + ")");
        rec.exact.emplace_back("m_symbolic", to_string(m));
        rec.numeric = {{"normal_x", r.normal.x}, {"normal_y", r.normal.y}, {"normal_z", r.normal.z}};
        rec.outcome = r.planar && parallel && m.is_zero() ? Outcome::pass : Outcome::fail;
        if (!r.planar) rec.reason = "classified nonplanar";
        else if (!parallel) rec.reason = "normal not parallel to (nu1, -1, lambda0)";
        else if (!m.is_zero()) rec.reason = "M not identically zero";
      } catch (const Error& e) {
        rec.outcome = Outcome::fail;
        rec.reason = e.what();
      }
      report.add(std::move(rec));
    }
  }

  std::vector<std::vector<Record>> results(static_cast<std::size_t>(std::max(count_nonplanar, 0)));
  std::vector<int> nonplanar(results.size(), 0);
  parallel_for(results.size(), [&](std::size_t i) {
    Record rec;
    rec.case_id = "random-" + std::to_string(i);
    const RandomSurfaceSpec cs = case_spec(base, i);
    const HarmonicSurface s = random_surface(cs);
    rec.exact = {{"spec", spec_string(cs)}};
    try {
      const PlanarityResult r = planarity_classify(s);
      const BivariatePolynomial m = mn_quantities(symbolic_jet(s)).m;
      rec.exact.emplace_back("classification", r.planar ? "planar" : "nonplanar");
      if (r.planar) {
        // Dichotomy still has to hold: planar means M vanishes identically.
        rec.outcome = m.is_zero() ? Outcome::pass : Outcome::fail;
        if (!m.is_zero()) rec.reason = "planar but M not identically zero";
      } else if (m.is_zero()) {
        rec.outcome = Outcome::fail;
        rec.reason = "nonplanar but M identically zero";
      } else {
        nonplanar[i] = 1;
        // Witness: regular point with M != 0, checked on the pointwise jet.
        const int degree = m.degree() + 2 * std::max(0, s.b().analytic().degree() + s.c().analytic().degree());
        for (const auto& p : probe_points(s.domain(), degree)) {
          if (is_branch_point(s, p)) continue;
          const Rational m_point = mn_quantities(jet(s, p)).m;
          if (sgn(m_point) != 0) {
            rec.point = p;
            rec.exact.emplace_back("m_witness", to_string(m_point));
            break;
          }
        }
        rec.outcome = rec.point ? Outcome::pass : Outcome::fail;
        if (!rec.point) rec.reason = "no witness found";
      }
    } catch (const Error& e) {
      rec.outcome = Outcome::fail;
      rec.reason = e.what();
    }
    results[i].push_back(std::move(rec));
  });
  for (auto& rs : results) {
    for (auto& r : rs) report.add(std::move(r));
  }
  int total_nonplanar = 0;
  for (int v : nonplanar) total_nonplanar += v;
  report.set_metric("nonplanar_count", total_nonplanar);
  return report;
}

}  // namespace hg
