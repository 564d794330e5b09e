#pragma once

#include "hg/polynomial.hpp"
#include "hg/surface.hpp"
#include "hg/weierstrass.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <variant>

namespace hg {

using json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; bare integers are accepted on input.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// [{"i": int, "j": int, "c": "num/den"}, ...]
json bivariate_to_json(const BivariatePolynomial& p);
BivariatePolynomial bivariate_from_json(const json& j);

// [{"re": "num/den", "im": "num/den"}, ...] in ascending degree.
json analytic_to_json(const AnalyticPolynomial& p);
AnalyticPolynomial analytic_from_json(const json& j);

// A surface coordinate as given in a file, before the harmonicity gate.
using CoordinateInput = std::variant<BivariatePolynomial, AnalyticPolynomial>;

struct SurfaceDocument {
  std::array<CoordinateInput, 3> coordinates;
  Domain domain;
};

// {"a": poly, "b": poly, "c": poly, "domain": {"x": [lo, hi], "y": [lo, hi]}}
// where each poly is in either encoding. Throws Error(parse).
SurfaceDocument surface_document_from_json(const json& j);

// Laplacian of each coordinate; analytic inputs are harmonic by construction.
std::array<BivariatePolynomial, 3> residuals(const SurfaceDocument& doc);

// Throws Error(not_harmonic).
HarmonicSurface to_surface(const SurfaceDocument& doc);

json domain_to_json(const Domain& d);
Domain domain_from_json(const json& j);

// Coordinates in the analytic encoding.
json surface_to_json(const HarmonicSurface& s);

// Either {"p", "q"} or an explicit {"phi1", "phi2", "phi3"} triple.
struct WeierstrassInput {
  std::variant<WeierstrassData, PhiTriple> data;
};
WeierstrassInput weierstrass_from_json(const json& j);

// Reads and parses a JSON file; Error(parse) on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace hg
