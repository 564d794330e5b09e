#include "hg/weierstrass.hpp"

#include "hg/error.hpp"
#include "hg/gauss_map.hpp"

#include <cmath>

namespace hg {

WeierstrassData::WeierstrassData(AnalyticPolynomial p_, AnalyticPolynomial q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "Weierstrass p must not be zero");
}

WeierstrassData enneper_data() {
  return {AnalyticPolynomial::constant(1), AnalyticPolynomial::identity()};
}

PhiTriple phi_from_pq(const WeierstrassData& d) {
  const AnalyticPolynomial one = AnalyticPolynomial::constant(1);
  const AnalyticPolynomial q_sq = d.q * d.q;
  return {d.p * (one - q_sq), kImaginaryUnit * (d.p * (one + q_sq)), ComplexRational(2) * (d.p * d.q)};
}

bool null_check(const PhiTriple& t) {
  return (t.phi1 * t.phi1 + t.phi2 * t.phi2 + t.phi3 * t.phi3).is_zero();
}

HarmonicSurface integrate(const PhiTriple& t, const Domain& domain) {
  if (!null_check(t)) throw Error(ErrorKind::null_violation, "phi1^2 + phi2^2 + phi3^2 is not zero");
  return HarmonicSurface(HarmonicFunction(t.phi1.antiderivative()), HarmonicFunction(t.phi2.antiderivative()),
                         HarmonicFunction(t.phi3.antiderivative()), domain);
}

VerificationReport verify_minimal(const HarmonicSurface& s, std::span<const Point2> points) {
  VerificationReport report("verify-minimal");
  report.set_parameter("points", std::to_string(points.size()));
  std::size_t downward = 0;
  for (const auto& p : points) {
    Record rec;
    rec.case_id = "minimal";
    rec.point = p;
    const TangentData t = tangents(s, p);
    if (sgn(t.g_sq) == 0) {
      rec.outcome = Outcome::skip;
      rec.reason = "branch point";
      report.add(std::move(rec));
      continue;
    }
    const bool iso = norm_sq(t.y_x) == norm_sq(t.y_y) && sgn(dot(t.y_x, t.y_y)) == 0;
    const Rational d_sq = t.energy * t.energy / (4 * t.g_sq);
    const int orientation = sgn(t.v.z);
    if (orientation < 0) ++downward;
    rec.exact = {{"isothermal", iso ? "true" : "false"},
                 {"distortion_sq", to_string(d_sq)},
                 {"normal_z_sign", std::to_string(orientation)}};
    rec.outcome = (iso && d_sq == 1) ? Outcome::pass : Outcome::fail;
    if (!iso) rec.reason = "not isothermal";
    report.add(std::move(rec));
  }
  if (downward > 0) {
    report.add_note("normal points to -z at " + std::to_string(downward) + " of " + std::to_string(points.size()) +
                    " points");
  }
  return report;
}

VerificationReport gauss_vs_q(const WeierstrassData& d, std::span<const Point2> points, const Domain& domain) {
  VerificationReport report("gauss-vs-q");
  report.set_parameter("p", to_string(d.p));
  report.set_parameter("q", to_string(d.q));
  const HarmonicSurface s = weierstrass_surface(d, domain);
  const AnalyticPolynomial dq = d.q.derivative();
  for (const auto& p : points) {
    Record rec;
    rec.case_id = "gauss-vs-q";
    rec.point = p;
    const ComplexRational zeta{p.x, p.y};
    const std::complex<long double> q_val = d.q.evaluate(zeta).to_complex();
    rec.numeric = {{"q_re", static_cast<double>(q_val.real())}, {"q_im", static_cast<double>(q_val.imag())}};
    std::complex<double> g;
    try {
      g = complex_gauss(s, p);
    } catch (const Error& e) {
      rec.outcome = Outcome::skip;
      rec.reason = e.what();
      report.add(std::move(rec));
      continue;
    }
    rec.outcome = Outcome::info;
    rec.numeric.emplace_back("gauss_re", g.real());
    rec.numeric.emplace_back("gauss_im", g.imag());
    const std::complex<long double> gl{g.real(), g.imag()};
    rec.numeric.emplace_back("deviation_q", static_cast<double>(std::abs(gl - q_val)));
    const ComplexRational dq_val = dq.evaluate(zeta);
    if (dq_val.is_zero()) {
      rec.exact.emplace_back("minus_i_over_dq", "undefined");
    } else {
      const std::complex<long double> cand = std::complex<long double>{0.0L, -1.0L} / dq_val.to_complex();
      rec.numeric.emplace_back("minus_i_over_dq_re", static_cast<double>(cand.real()));
      rec.numeric.emplace_back("minus_i_over_dq_im", static_cast<double>(cand.imag()));
      rec.numeric.emplace_back("deviation_minus_i_over_dq", static_cast<double>(std::abs(gl - cand)));
    }
    report.add(std::move(rec));
  }
  return report;
}

}  // namespace hg
