#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace hg {

// Arbitrary-precision rational. gmpxx keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws Error(invalid_argument) on den == 0.
Rational make_rational(long num, long den = 1);

// Accepts "num/den" or a bare integer "num". Throws Error(parse).
Rational parse_rational(std::string_view text);

// Always renders "num/den", integers included ("3/1", "0/1").
std::string to_string(const Rational& value);

long double to_long_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
  ComplexRational(long real) : re(real), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend bool operator==(const ComplexRational& l, const ComplexRational& r) {
    return l.re == r.re && l.im == r.im;
  }
  friend ComplexRational operator+(const ComplexRational& l, const ComplexRational& r) {
    return {l.re + r.re, l.im + r.im};
  }
  friend ComplexRational operator-(const ComplexRational& l, const ComplexRational& r) {
    return {l.re - r.re, l.im - r.im};
  }
  friend ComplexRational operator-(const ComplexRational& v) { return {-v.re, -v.im}; }
  friend ComplexRational operator*(const ComplexRational& l, const ComplexRational& r) {
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
  }
  ComplexRational& operator+=(const ComplexRational& r) {
    re += r.re;
    im += r.im;
    return *this;
  }

  std::complex<long double> to_complex() const { return {to_long_double(re), to_long_double(im)}; }
};

inline const ComplexRational kImaginaryUnit{0, 1};

std::string to_string(const ComplexRational& value);

}  // namespace hg
