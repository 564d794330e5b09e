#include "hg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

AnalyticPolynomial::AnalyticPolynomial(std::vector<ComplexRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

AnalyticPolynomial AnalyticPolynomial::constant(const ComplexRational& c) {
  return AnalyticPolynomial(std::vector<ComplexRational>{c});
}

AnalyticPolynomial AnalyticPolynomial::monomial(const ComplexRational& c, int n) {
  std::vector<ComplexRational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.back() = c;
  return AnalyticPolynomial(std::move(coeffs));
}

void AnalyticPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ComplexRational AnalyticPolynomial::coefficient(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : ComplexRational{};
}

ComplexRational AnalyticPolynomial::evaluate(const ComplexRational& z) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<long double> AnalyticPolynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc{0.0L, 0.0L};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

AnalyticPolynomial AnalyticPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ComplexRational> out(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    const Rational k(static_cast<long>(n));
    out[n - 1] = {coeffs_[n].re * k, coeffs_[n].im * k};
  }
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial AnalyticPolynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<ComplexRational> out(coeffs_.size() + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Rational k(static_cast<long>(n + 1));
    out[n + 1] = {coeffs_[n].re / k, coeffs_[n].im / k};
  }
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial operator+(const AnalyticPolynomial& l, const AnalyticPolynomial& r) {
  std::vector<ComplexRational> out(std::max(l.coeffs_.size(), r.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = l.coefficient(n) + r.coefficient(n);
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial operator-(const AnalyticPolynomial& p) {
  std::vector<ComplexRational> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(-c);
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial operator-(const AnalyticPolynomial& l, const AnalyticPolynomial& r) { return l + (-r); }

AnalyticPolynomial operator*(const AnalyticPolynomial& l, const AnalyticPolynomial& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<ComplexRational> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    if (l.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  }
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial operator*(const ComplexRational& s, const AnalyticPolynomial& p) {
  return AnalyticPolynomial::constant(s) * p;
}

std::string to_string(const AnalyticPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
    const auto& c = p.coefficients()[n];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str() << (sgn(c.im) < 0 ? "-" : "+") << Rational(abs(c.im)).get_str() << "i)";
    if (n > 0) os << "*z";
    if (n > 1) os << "^" << n;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  add_term({0, 0}, constant);
}

BivariatePolynomial::BivariatePolynomial(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, int i, int j) {
  BivariatePolynomial p;
  p.add_term({i, j}, c);
  return p;
}

void BivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BivariatePolynomial::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePolynomial::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

namespace {

template <class T>
std::vector<T> powers(const T& base, int max_exp) {
  std::vector<T> out(static_cast<std::size_t>(std::max(max_exp, 0)) + 1);
  out[0] = T(1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = out[k - 1] * base;
  return out;
}

}  // namespace

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  const auto xs = powers(x, degree_x());
  const auto ys = powers(y, degree_y());
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * xs[e.first] * ys[e.second];
  return acc;
}

long double BivariatePolynomial::evaluate(long double x, long double y) const {
  const auto xs = powers(x, degree_x());
  const auto ys = powers(y, degree_y());
  long double acc = 0;
  for (const auto& [e, c] : terms_) acc += to_long_double(c) * xs[e.first] * ys[e.second];
  return acc;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term({e.first, e.second - 1}, c * e.second);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned n) const {
  BivariatePolynomial result(Rational(1));
  BivariatePolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial operator-(const BivariatePolynomial& p) {
  BivariatePolynomial out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& l, const BivariatePolynomial& r) {
  BivariatePolynomial out;
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      out.add_term({el.first + er.first, el.second + er.second}, cl * cr);
    }
  }
  return out;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BivariatePolynomial::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_vars = e.first > 0 || e.second > 0;
    bool need_star = false;
    if (!has_vars || mag != 1) {
      os << mag.get_str();
      need_star = has_vars;
    }
    auto emit = [&](const char* name, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << name;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    emit("x", e.first);
    emit("y", e.second);
  }
  return os.str();
}

}  // namespace hg
