#include "hg/rational.hpp"

#include "hg/error.hpp"

#include <cctype>

namespace hg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::not_harmonic: return "NotHarmonic";
    case ErrorKind::out_of_domain: return "OutOfDomain";
    case ErrorKind::branch_point: return "BranchPoint";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::gauss_degenerate: return "GaussDegenerate";
    case ErrorKind::north_pole: return "NorthPole";
    case ErrorKind::degenerate_surface: return "DegenerateSurface";
    case ErrorKind::invalid_distortion: return "InvalidDistortion";
    case ErrorKind::null_violation: return "NullViolation";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long double to_long_double(const Rational& value) {
  if (mpz_sizeinbase(value.get_num_mpz_t(), 2) < 60 && mpz_sizeinbase(value.get_den_mpz_t(), 2) < 60) {
    return static_cast<long double>(value.get_num().get_si()) /
           static_cast<long double>(value.get_den().get_si());
  }
  return static_cast<long double>(value.get_d());
}

std::string to_string(const ComplexRational& value) {
  return "(" + to_string(value.re) + ") + (" + to_string(value.im) + ")i";
}

}  // namespace hg
