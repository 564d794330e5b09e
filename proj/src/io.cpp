#include "hg/io.hpp"

#include "hg/error.hpp"
#include "hg/harmonic.hpp"

#include <fstream>

namespace hg {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

int integer_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::parse, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool is_bivariate_term(const json& t) { return t.is_object() && t.contains("i") && t.contains("j") && t.contains("c"); }

CoordinateInput coordinate_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "polynomial must be a list");
  if (!j.empty() && is_bivariate_term(j.front())) return bivariate_from_json(j);
  return analytic_from_json(j);
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw Error(ErrorKind::parse, "rational must be a \"num/den\" string");
}

json bivariate_to_json(const BivariatePolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"i", e.first}, {"j", e.second}, {"c", rational_to_json(c)}});
  return out;
}

BivariatePolynomial bivariate_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "bivariate polynomial must be a list");
  BivariatePolynomial out;
  for (const auto& t : j) {
    const int i = integer_field(t, "i");
    const int k = integer_field(t, "j");
    if (i < 0 || k < 0) throw Error(ErrorKind::parse, "negative exponent");
    out += BivariatePolynomial::monomial(rational_from_json(field(t, "c")), i, k);
  }
  return out;
}

json analytic_to_json(const AnalyticPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back({{"re", rational_to_json(c.re)}, {"im", rational_to_json(c.im)}});
  return out;
}

AnalyticPolynomial analytic_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "analytic polynomial must be a list");
  std::vector<ComplexRational> coeffs;
  for (const auto& t : j) {
    if (!t.is_object()) throw Error(ErrorKind::parse, "analytic coefficient must be an object");
    Rational re = t.contains("re") ? rational_from_json(t.at("re")) : Rational(0);
    Rational im = t.contains("im") ? rational_from_json(t.at("im")) : Rational(0);
    if (!t.contains("re") && !t.contains("im")) throw Error(ErrorKind::parse, "coefficient needs 're' or 'im'");
    coeffs.emplace_back(std::move(re), std::move(im));
  }
  return AnalyticPolynomial(std::move(coeffs));
}

json domain_to_json(const Domain& d) {
  return {{"x", {rational_to_json(d.x_lo), rational_to_json(d.x_hi)}},
          {"y", {rational_to_json(d.y_lo), rational_to_json(d.y_hi)}}};
}

Domain domain_from_json(const json& j) {
  const json& x = field(j, "x");
  const json& y = field(j, "y");
  if (!x.is_array() || x.size() != 2 || !y.is_array() || y.size() != 2) {
    throw Error(ErrorKind::parse, "domain bounds must be [lo, hi] pairs");
  }
  try {
    return Domain(rational_from_json(x[0]), rational_from_json(x[1]), rational_from_json(y[0]), rational_from_json(y[1]));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, e.what());
  }
}

SurfaceDocument surface_document_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "surface must be a JSON object");
  SurfaceDocument doc{{coordinate_from_json(field(j, "a")), coordinate_from_json(field(j, "b")),
                       coordinate_from_json(field(j, "c"))},
                      j.contains("domain") ? domain_from_json(j.at("domain")) : Domain{}};
  return doc;
}

std::array<BivariatePolynomial, 3> residuals(const SurfaceDocument& doc) {
  std::array<BivariatePolynomial, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (const auto* p = std::get_if<BivariatePolynomial>(&doc.coordinates[k])) out[k] = harmonic_residual(*p);
  }
  return out;
}

HarmonicSurface to_surface(const SurfaceDocument& doc) {
  std::array<HarmonicFunction, 3> coords;
  for (std::size_t k = 0; k < 3; ++k) {
    coords[k] = std::visit(
        [](const auto& p) -> HarmonicFunction {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BivariatePolynomial>) {
            return to_analytic(p);
          } else {
            return HarmonicFunction(p);
          }
        },
        doc.coordinates[k]);
  }
  return HarmonicSurface(coords[0], coords[1], coords[2], doc.domain);
}

json surface_to_json(const HarmonicSurface& s) {
  return {{"a", analytic_to_json(s.a().analytic())},
          {"b", analytic_to_json(s.b().analytic())},
          {"c", analytic_to_json(s.c().analytic())},
          {"domain", domain_to_json(s.domain())}};
}

WeierstrassInput weierstrass_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "Weierstrass input must be a JSON object");
  if (j.contains("phi1")) {
    return {PhiTriple{analytic_from_json(field(j, "phi1")), analytic_from_json(field(j, "phi2")),
                      analytic_from_json(field(j, "phi3"))}};
  }
  AnalyticPolynomial p = analytic_from_json(field(j, "p"));
  AnalyticPolynomial q = analytic_from_json(field(j, "q"));
  if (p.is_zero()) throw Error(ErrorKind::parse, "p must not be zero");
  return {WeierstrassData(std::move(p), std::move(q))};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, "'" + path + "': " + e.what());
  }
}

}  // namespace hg
