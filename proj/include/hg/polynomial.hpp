#pragma once

#include "hg/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hg {

// Univariate polynomial in z with complex-rational coefficients; index n
// holds the z^n coefficient. Trailing zeros are trimmed, so the zero
// polynomial is the empty list.
class AnalyticPolynomial {
 public:
  AnalyticPolynomial() = default;
  explicit AnalyticPolynomial(std::vector<ComplexRational> coefficients);

  static AnalyticPolynomial constant(const ComplexRational& c);
  // c * z^n
  static AnalyticPolynomial monomial(const ComplexRational& c, int n);
  static AnalyticPolynomial identity() { return monomial(1, 1); }

  const std::vector<ComplexRational>& coefficients() const { return coeffs_; }
  // Coefficient of z^n, zero past the end.
  ComplexRational coefficient(std::size_t n) const;
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  ComplexRational evaluate(const ComplexRational& z) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  AnalyticPolynomial derivative() const;
  // Integration constant zero at z = 0.
  AnalyticPolynomial antiderivative() const;

  friend bool operator==(const AnalyticPolynomial&, const AnalyticPolynomial&) = default;
  friend AnalyticPolynomial operator+(const AnalyticPolynomial& l, const AnalyticPolynomial& r);
  friend AnalyticPolynomial operator-(const AnalyticPolynomial& l, const AnalyticPolynomial& r);
  friend AnalyticPolynomial operator-(const AnalyticPolynomial& p);
  friend AnalyticPolynomial operator*(const AnalyticPolynomial& l, const AnalyticPolynomial& r);
  friend AnalyticPolynomial operator*(const ComplexRational& s, const AnalyticPolynomial& p);

 private:
  void trim();
  std::vector<ComplexRational> coeffs_;
};

std::string to_string(const AnalyticPolynomial& p);

// Real polynomial sum of c_ij x^i y^j with no stored zero coefficients.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);
  explicit BivariatePolynomial(Terms terms);

  static BivariatePolynomial x() { return monomial(1, 1, 0); }
  static BivariatePolynomial y() { return monomial(1, 0, 1); }
  static BivariatePolynomial monomial(const Rational& c, int i, int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int i, int j) const;
  // Total degree, -1 for zero.
  int degree() const;
  // Largest exponent of x (resp. y) appearing in any term.
  int degree_x() const;
  int degree_y() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  long double evaluate(long double x, long double y) const;

  BivariatePolynomial derivative_x() const;
  BivariatePolynomial derivative_y() const;
  BivariatePolynomial pow(unsigned n) const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
  BivariatePolynomial& operator+=(const BivariatePolynomial& r);
  BivariatePolynomial& operator-=(const BivariatePolynomial& r);
  friend BivariatePolynomial operator+(BivariatePolynomial l, const BivariatePolynomial& r) { return l += r; }
  friend BivariatePolynomial operator-(BivariatePolynomial l, const BivariatePolynomial& r) { return l -= r; }
  friend BivariatePolynomial operator-(const BivariatePolynomial& p);
  friend BivariatePolynomial operator*(const BivariatePolynomial& l, const BivariatePolynomial& r);

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

// Human-readable form, highest total degree first, e.g. "16*y^4 + 32*y^3 - x".
std::string to_string(const BivariatePolynomial& p);

}  // namespace hg
