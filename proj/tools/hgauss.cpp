// hgauss: exact distortion and Gauss-map tooling for harmonic surfaces.

#include "hg/commands.hpp"
#include "hg/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Global {
  std::string out_path;
  std::string format = "csv";
  bool floating = false;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace hg::cli;
  CLI::App app{"Exact distortion, Gauss map and Weierstrass tooling for harmonic surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--out", global.out_path, "Write the command's main output to PATH")->type_name("PATH");
  app.add_option("--format", global.format, "Sweep output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--float", global.floating, "Render exact values as 17-digit decimals");

  std::string grid_text;
  std::string domain_text;

  auto* check = app.add_subcommand("check", "Harmonicity, normalization and planarity of a surface file");
  std::string check_file;
  check->add_option("surface", check_file)->required();

  auto* sweep = app.add_subcommand("sweep", "Grid sweep of exact distortion and Gauss-map quantities");
  std::string sweep_file;
  sweep->add_option("surface", sweep_file)->required();
  sweep->add_option("--grid", grid_text, "Grid resolution NXxNY (default 9x9)");
  sweep->add_option("--domain", domain_text, "xlo,xhi,ylo,yhi overriding the file domain");

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  VerifyOptions vo;
  int count = -1, degree = -1, pts = -1;
  std::string surface_file;
  verify->add_option("suite", vo.suite, "thm1-exact | thm1-numeric | dilatation | remark14 | thm3 | n-identity | curvature")
      ->required();
  verify->add_option("--count", count);
  verify->add_option("--degree", degree);
  verify->add_option("--height", vo.height);
  verify->add_option("--seed", vo.seed);
  verify->add_option("--pts", pts, "Points per surface");
  verify->add_option("--fd-step", vo.fd_step);
  verify->add_option("--tol", vo.tol);
  verify->add_option("--grid", grid_text, "Grid resolution NXxNY (default 9x9)");
  verify->add_option("--domain", domain_text, "xlo,xhi,ylo,yhi");
  verify->add_option("--surface", surface_file, "Surface file for thm1-numeric / dilatation (default (x, y, xy))");
  verify->add_flag("--general", vo.general, "Random first coordinate instead of a = x");

  auto* weier = app.add_subcommand("weierstrass", "Integrate Weierstrass data (p, q) into a surface file");
  std::string weier_file;
  WeierstrassOptions wo;
  std::string mesh_path;
  weier->add_option("input", weier_file)->required();
  weier->add_option("--domain", domain_text, "xlo,xhi,ylo,yhi (default -1,1,-1,1)");
  weier->add_option("--mesh", mesh_path, "Also write a mesh to PATH");
  weier->add_option("--grid", grid_text, "Mesh resolution NXxNY (default 33x33)");

  auto* mesh = app.add_subcommand("mesh", "Triangle mesh of a surface");
  std::string mesh_file;
  mesh->add_option("surface", mesh_file)->required();
  mesh->add_option("--grid", grid_text, "Grid resolution NXxNY (default 33x33)");
  mesh->add_option("--domain", domain_text, "xlo,xhi,ylo,yhi overriding the file domain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  std::ofstream file_out;
  if (!global.out_path.empty()) {
    file_out.open(global.out_path);
    if (!file_out) {
      std::cerr << "cannot write '" << global.out_path << "'\n";
      return kExitParse;
    }
  }
  std::ostream& out = global.out_path.empty() ? std::cout : file_out;

  try {
    std::optional<hg::Domain> domain;
    if (!domain_text.empty()) domain = parse_domain(domain_text);

    if (check->parsed()) return run_check(check_file, out, std::cerr);

    if (sweep->parsed()) {
      SweepOptions so;
      if (!grid_text.empty()) so.grid = parse_grid(grid_text);
      so.domain = domain;
      so.format = global.format;
      so.floating = global.floating;
      return run_sweep(sweep_file, so, out, std::cerr);
    }

    if (verify->parsed()) {
      if (count >= 0) vo.count = count;
      if (degree >= 0) vo.degree = degree;
      if (pts >= 0) vo.points = pts;
      if (!grid_text.empty()) vo.grid = parse_grid(grid_text);
      if (!surface_file.empty()) vo.surface_file = surface_file;
      vo.domain = domain;
      return run_verify(vo, out, std::cerr);
    }

    if (weier->parsed()) {
      if (!grid_text.empty()) wo.grid = parse_grid(grid_text);
      if (!mesh_path.empty()) wo.mesh_path = mesh_path;
      wo.domain = domain;
      return run_weierstrass(weier_file, wo, out, std::cerr);
    }

    if (mesh->parsed()) {
      MeshOptions mo;
      if (!grid_text.empty()) mo.grid = parse_grid(grid_text);
      mo.domain = domain;
      return run_mesh(mesh_file, mo, out, std::cerr);
    }
  } catch (const hg::Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == hg::ErrorKind::parse ? kExitParse : kExitFailure;
  }
  return kExitOk;
}
