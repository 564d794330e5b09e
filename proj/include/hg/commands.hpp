#pragma once

#include "hg/surface.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace hg::cli {

// Exit statuses shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // non-harmonic input, failed checks, null violation
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnknownSuite = 3;

struct GridSize {
  int nx = 0;
  int ny = 0;
};

// "NXxNY", e.g. "33x33". Throws Error(parse).
GridSize parse_grid(const std::string& text);
// "xlo,xhi,ylo,yhi" with rational entries. Throws Error(parse).
Domain parse_domain(const std::string& text);

int run_check(const std::string& surface_file, std::ostream& out, std::ostream& err);

struct SweepOptions {
  GridSize grid{9, 9};
  std::optional<Domain> domain;  // replaces the file's domain
  std::string format = "csv";
  bool floating = false;
};
int run_sweep(const std::string& surface_file, const SweepOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite;
  std::optional<int> count;
  std::optional<int> degree;
  int height = 10;
  std::uint64_t seed = 1;
  std::optional<int> points;
  double fd_step = 1e-5;
  double tol = 1e-6;
  GridSize grid{9, 9};
  std::optional<Domain> domain;
  std::optional<std::string> surface_file;
  bool general = false;  // random surfaces with a random first coordinate
};
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct WeierstrassOptions {
  std::optional<Domain> domain;
  std::optional<std::string> mesh_path;
  GridSize grid{33, 33};
};
int run_weierstrass(const std::string& input_file, const WeierstrassOptions& options, std::ostream& out,
                    std::ostream& err);

struct MeshOptions {
  GridSize grid{33, 33};
  std::optional<Domain> domain;
};
int run_mesh(const std::string& surface_file, const MeshOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hg::cli
