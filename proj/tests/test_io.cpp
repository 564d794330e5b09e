#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hg/error.hpp"
#include "hg/io.hpp"
#include "hg/mesh.hpp"
#include "hg/sweep.hpp"
#include "test_support.hpp"

#include <sstream>

using namespace hg;
using hg::test::q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an hg::Error");
  return ErrorKind::invalid_argument;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("rational codec") {
  CHECK(rational_to_json(q(-6, 4)) == json("-3/2"));
  CHECK(rational_to_json(Rational(0)) == json("0/1"));
  CHECK(rational_from_json(json("4/6")) == q(2, 3));
  CHECK(rational_from_json(json(7)) == 7);
  CHECK(kind_of([] { rational_from_json(json(0.5)); }) == ErrorKind::parse);
  CHECK(kind_of([] { rational_from_json(json("1/0")); }) == ErrorKind::parse);
}

TEST_CASE("polynomial codecs") {
  const json biv = json::parse(R"([{"i": 2, "j": 0, "c": "1/1"}, {"i": 0, "j": 2, "c": "-1"}])");
  const BivariatePolynomial p = bivariate_from_json(biv);
  CHECK(p.evaluate(2, 1) == 3);
  CHECK(bivariate_from_json(bivariate_to_json(p)) == p);
  CHECK(kind_of([] { bivariate_from_json(json::parse(R"([{"i": -1, "j": 0, "c": "1"}])")); }) == ErrorKind::parse);
  CHECK(kind_of([] { bivariate_from_json(json::parse(R"([{"i": 1, "c": "1"}])")); }) == ErrorKind::parse);

  const json an = json::parse(R"([{"re": "0", "im": "0"}, {"re": "1/2", "im": "-3"}, {"im": 1}])");
  const AnalyticPolynomial a = analytic_from_json(an);
  CHECK(a.coefficient(1) == ComplexRational{q(1, 2), -3});
  CHECK(a.coefficient(2) == kImaginaryUnit);
  CHECK(analytic_from_json(analytic_to_json(a)) == a);
  CHECK(kind_of([] { analytic_from_json(json::parse(R"([{}])")); }) == ErrorKind::parse);
}

TEST_CASE("surface documents") {
  const json doc = json::parse(R"({
    "a": [{"i": 1, "j": 0, "c": "1"}],
    "b": [{"i": 0, "j": 1, "c": "1"}],
    "c": [{"re": "0"}, {"re": "0"}, {"im": "-1/2"}],
    "domain": {"x": ["0", "2"], "y": [-1, "1/2"]}
  })");
  const SurfaceDocument d = surface_document_from_json(doc);
  CHECK(d.domain == Domain(0, 2, -1, q(1, 2)));
  for (const auto& r : residuals(d)) CHECK(r == BivariatePolynomial());
  const HarmonicSurface s = to_surface(d);
  CHECK(s.coordinates() == test::saddle().coordinates());
  CHECK(eval(s.c(), {2, q(1, 2)}) == 1);

  json bad = doc;
  bad["c"] = json::parse(R"([{"i": 2, "j": 0, "c": "1"}, {"i": 0, "j": 2, "c": "1"}])");
  const SurfaceDocument bd = surface_document_from_json(bad);
  CHECK(residuals(bd)[2] == BivariatePolynomial(4));
  CHECK(kind_of([&] { to_surface(bd); }) == ErrorKind::not_harmonic);

  CHECK(kind_of([] { surface_document_from_json(json::parse(R"({"a": []})")); }) == ErrorKind::parse);
  json empty_domain = doc;
  empty_domain["domain"]["x"] = json::array({"1", "1"});
  CHECK(kind_of([&] { surface_document_from_json(empty_domain); }) == ErrorKind::parse);
  CHECK(kind_of([] { read_json_file("/nonexistent/surface.json"); }) == ErrorKind::parse);
}

TEST_CASE("surface round trip") {
  test::Gen gen(8);
  for (int k = 0; k < 20; ++k) {
    const Domain dom(gen.rational() - 20, gen.rational() + 20, -1, q(k + 1, 3));
    const HarmonicSurface s(gen.harmonic(3), gen.harmonic(4), gen.harmonic(5), dom);
    const json j = surface_to_json(s);
    const HarmonicSurface back = to_surface(surface_document_from_json(json::parse(j.dump())));
    CHECK(back.coordinates() == s.coordinates());
    CHECK(back.domain() == s.domain());
    CHECK(surface_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("Weierstrass input") {
  const auto pq = weierstrass_from_json(json::parse(R"({"p": [{"re": "1"}], "q": [{"re": "0"}, {"re": "1"}]})"));
  REQUIRE(std::holds_alternative<WeierstrassData>(pq.data));
  CHECK(std::get<WeierstrassData>(pq.data).q == AnalyticPolynomial::identity());

  const auto phi = weierstrass_from_json(json::parse(R"({"phi1": [{"re": "1"}], "phi2": [], "phi3": []})"));
  REQUIRE(std::holds_alternative<PhiTriple>(phi.data));
  CHECK_FALSE(null_check(std::get<PhiTriple>(phi.data)));

  CHECK(kind_of([] { weierstrass_from_json(json::parse(R"({"p": [], "q": []})")); }) == ErrorKind::parse);
  CHECK(kind_of([] { weierstrass_from_json(json::parse("[1]")); }) == ErrorKind::parse);
}

TEST_CASE("sweep") {
  const auto rows = sweep(test::saddle(), 3, 3);
  REQUIRE(rows.size() == 9);
  const SweepRow& r = rows[5];
  CHECK(r.point == Point2{1, 0});
  CHECK(r.regular);
  CHECK(*r.gauss_regular);
  CHECK(*r.dist_sq_surface == q(9, 8));
  CHECK(*r.dist_sq_gauss == q(9, 8));
  CHECK(*r.m_value == 1);
  CHECK(*r.curvature_sign == -1);

  const auto flat = sweep(test::plane(), 2, 2);
  CHECK_FALSE(*flat[0].gauss_regular);
  CHECK_FALSE(flat[0].dist_sq_gauss);
  CHECK(*flat[0].m_value == 0);

  const HarmonicSurface folded(test::coord_x(), test::coord_x(), HarmonicFunction());
  const auto branch = sweep(folded, 2, 2);
  CHECK_FALSE(branch[0].regular);
  CHECK_FALSE(branch[0].dist_sq_surface);

  // Non-normalized: no M column.
  const HarmonicSurface swapped(test::coord_y(), test::coord_x(), test::coord_xy());
  CHECK_FALSE(sweep(swapped, 2, 2)[0].m_value);
}

TEST_CASE("sweep CSV round trip") {
  const HarmonicSurface s = test::saddle(Domain(q(-1, 3), q(5, 7), -2, q(1, 9)));
  const auto rows = sweep(s, 4, 5);
  std::ostringstream out;
  write_sweep_csv(out, rows, false);
  const auto text = lines(out.str());
  REQUIRE(text.size() == rows.size() + 1);
  CHECK(text[0] == "x,y,regular,gauss_regular,dist_sq_surface,dist_sq_gauss,m_value,curvature_sign");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto cells = split(text[k + 1], ',');
    REQUIRE(cells.size() == 8);
    CHECK(parse_rational(cells[0]) == rows[k].point.x);
    CHECK(parse_rational(cells[1]) == rows[k].point.y);
    CHECK(parse_rational(cells[4]) == *rows[k].dist_sq_surface);
    CHECK(parse_rational(cells[6]) == *rows[k].m_value);
  }

  std::ostringstream fl;
  write_sweep_csv(fl, rows, true);
  const auto ftext = lines(fl.str());
  const auto fcells = split(ftext[1], ',');
  CHECK(std::stod(fcells[0]) == doctest::Approx(-1.0 / 3.0).epsilon(1e-16));

  const json j = sweep_to_json(rows, false);
  CHECK(j["columns"].size() == 8);
  CHECK(j["rows"].size() == rows.size());
  CHECK(j["rows"][0]["x"] == json("-1/3"));
}

TEST_CASE("mesh") {
  std::ostringstream out;
  write_mesh(out, test::plane(), 2, 2);
  const auto text = lines(out.str());
  REQUIRE(text.size() == 6);
  CHECK(text[0] == "v -1 -1 0");
  CHECK(text[3] == "v 1 1 0");
  CHECK(text[4] == "f 1 2 4");
  CHECK(text[5] == "f 1 4 3");

  std::ostringstream big;
  write_mesh(big, test::saddle(), 5, 4);
  int v = 0;
  int f = 0;
  for (const auto& l : lines(big.str())) {
    if (l.starts_with("v ")) ++v;
    if (l.starts_with("f ")) ++f;
  }
  CHECK(v == 20);
  CHECK(f == 2 * 4 * 3);
}
