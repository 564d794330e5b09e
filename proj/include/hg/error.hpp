#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hg {

enum class ErrorKind {
  parse,
  not_harmonic,
  out_of_domain,
  branch_point,
  not_normalized,
  gauss_degenerate,
  north_pole,
  degenerate_surface,
  invalid_distortion,
  null_violation,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hg
