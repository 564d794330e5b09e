#include "hg/commands.hpp"

#include "hg/error.hpp"
#include "hg/gauss_map.hpp"
#include "hg/io.hpp"
#include "hg/mesh.hpp"
#include "hg/sweep.hpp"
#include "hg/verify.hpp"

#include <fstream>
#include <sstream>

namespace hg::cli {

namespace {

int exit_for(const Error& e) { return e.kind() == ErrorKind::parse ? kExitParse : kExitFailure; }

HarmonicSurface load_surface(const std::string& path) { return to_surface(surface_document_from_json(read_json_file(path))); }

HarmonicSurface with_domain(const HarmonicSurface& s, const std::optional<Domain>& domain) {
  if (!domain) return s;
  return HarmonicSurface(s.a(), s.b(), s.c(), *domain);
}

// (x, y, xy), the default surface of the numeric suites.
HarmonicSurface saddle_surface(const Domain& domain) {
  return HarmonicSurface(HarmonicFunction(AnalyticPolynomial::identity()),
                         HarmonicFunction(AnalyticPolynomial::monomial(ComplexRational{0, -1}, 1)),
                         HarmonicFunction(AnalyticPolynomial::monomial(ComplexRational{0, make_rational(-1, 2)}, 2)),
                         domain);
}

void emit_error_json(std::ostream& out, const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  out << j.dump(2) << '\n';
}

}  // namespace

GridSize parse_grid(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no separator");
    std::size_t used = 0;
    const int nx = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("trailing characters");
    const std::string rest = text.substr(x + 1);
    const int ny = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing characters");
    if (nx < 2 || ny < 2) throw Error(ErrorKind::parse, "grid needs at least 2 nodes per axis");
    return {nx, ny};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse, "grid must look like NXxNY, got '" + text + "'");
  }
}

Domain parse_domain(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
  if (values.size() != 4) throw Error(ErrorKind::parse, "domain must be xlo,xhi,ylo,yhi");
  try {
    return Domain(values[0], values[1], values[2], values[3]);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

int run_check(const std::string& surface_file, std::ostream& out, std::ostream& err) {
  SurfaceDocument doc;
  try {
    doc = surface_document_from_json(read_json_file(surface_file));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
  const auto res = residuals(doc);
  out << "harmonic: ";
  bool all_harmonic = true;
  for (std::size_t k = 0; k < 3; ++k) {
    out << (k ? "/" : "") << (res[k].is_zero() ? "yes" : "no");
    all_harmonic = all_harmonic && res[k].is_zero();
  }
  out << '\n';
  if (!all_harmonic) {
    const char* names[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!res[k].is_zero()) out << "residual " << names[k] << ": " << to_string(res[k]) << '\n';
    }
    return kExitFailure;
  }
  const HarmonicSurface s = to_surface(doc);
  out << "normalized: " << (s.is_graph_normalized() ? "yes" : "no") << '\n';
  try {
    const PlanarityResult r = planarity_classify(s);
    out << "planar: " << (r.planar ? "yes" : "no") << '\n';
    if (r.planar) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "normal: (%.17g, %.17g, %.17g)\n", r.normal.x, r.normal.y, r.normal.z);
      out << buf;
      out << "direction: (" << to_string(r.direction.x) << ", " << to_string(r.direction.y) << ", "
          << to_string(r.direction.z) << ")\n";
    } else if (r.witness) {
      out << "witness: " << to_string(*r.witness) << '\n';
    }
  } catch (const Error& e) {
    out << "planar: degenerate\n";
    err << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int run_sweep(const std::string& surface_file, const SweepOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format != "csv" && options.format != "json") {
      throw Error(ErrorKind::parse, "format must be csv or json");
    }
    const HarmonicSurface s = with_domain(load_surface(surface_file), options.domain);
    const auto rows = sweep(s, options.grid.nx, options.grid.ny);
    if (options.format == "json") {
      out << sweep_to_json(rows, options.floating).dump(2) << '\n';
    } else {
      write_sweep_csv(out, rows, options.floating);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  auto spec = [&](int default_degree) {
    return RandomSurfaceSpec{o.degree.value_or(default_degree), o.height, o.seed, !o.general};
  };
  try {
    std::optional<VerificationReport> report;
    const Domain domain = o.domain.value_or(Domain{});
    auto surface = [&] {
      return o.surface_file ? with_domain(load_surface(*o.surface_file), o.domain) : saddle_surface(domain);
    };
    if (o.suite == "thm1-exact") {
      report = theorem1_exact_suite(o.count.value_or(100), spec(4), o.points.value_or(5));
    } else if (o.suite == "n-identity") {
      report = n_identity_suite(o.count.value_or(100), spec(6));
    } else if (o.suite == "curvature") {
      report = curvature_sign_suite(o.count.value_or(20), spec(4), o.points.value_or(25));
    } else if (o.suite == "thm1-numeric") {
      const HarmonicSurface s = surface();
      const auto grid = rational_grid(s.domain(), o.grid.nx, o.grid.ny);
      report = theorem1_numeric_suite(s, grid, o.fd_step, o.tol);
    } else if (o.suite == "dilatation") {
      const HarmonicSurface s = surface();
      const auto grid = rational_grid(s.domain(), o.grid.nx, o.grid.ny);
      report = dilatation_bridge_check(s, grid, o.fd_step, o.tol);
    } else if (o.suite == "remark14") {
      report = remark14_counterexample();
    } else if (o.suite == "thm3") {
      const auto params = default_family_params();
      const auto cs = default_family_c();
      report = theorem3_family_suite(params, cs, o.count.value_or(50), spec(4));
    } else {
      emit_error_json(out, "UnknownSuite", "unknown suite '" + o.suite + "'");
      err << "unknown suite '" << o.suite
          << "' (expected thm1-exact, thm1-numeric, dilatation, remark14, thm3, n-identity, curvature)\n";
      return kExitUnknownSuite;
    }
    out << report->to_json().dump(2) << '\n';
    const Summary& sm = report->summary();
    err << report->suite() << ": passed " << sm.passed << ", failed " << sm.failed << ", skipped " << sm.skipped
        << '\n';
    for (const auto& note : report->notes()) err << note << '\n';
    return report->ok() ? kExitOk : kExitFailure;
  } catch (const Error& e) {
    emit_error_json(out, std::string(to_string(e.kind())), e.what());
    err << e.what() << '\n';
    return exit_for(e);
  }
}

int run_weierstrass(const std::string& input_file, const WeierstrassOptions& options, std::ostream& out,
                    std::ostream& err) {
  try {
    const WeierstrassInput input = weierstrass_from_json(read_json_file(input_file));
    const Domain domain = options.domain.value_or(Domain{});
    const PhiTriple phi = std::visit(
        [](const auto& d) -> PhiTriple {
          if constexpr (std::is_same_v<std::decay_t<decltype(d)>, WeierstrassData>) {
            return phi_from_pq(d);
          } else {
            return d;
          }
        },
        input.data);
    const HarmonicSurface s = integrate(phi, domain);
    out << surface_to_json(s).dump(2) << '\n';
    if (options.mesh_path) {
      std::ofstream mesh(*options.mesh_path);
      if (!mesh) throw Error(ErrorKind::parse, "cannot write '" + *options.mesh_path + "'");
      write_mesh(mesh, s, options.grid.nx, options.grid.ny);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
}

int run_mesh(const std::string& surface_file, const MeshOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const HarmonicSurface s = with_domain(load_surface(surface_file), options.domain);
    write_mesh(out, s, options.grid.nx, options.grid.ny);
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
}

}  // namespace hg::cli
