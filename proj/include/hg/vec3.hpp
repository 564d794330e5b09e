#pragma once

#include <array>

namespace hg {

// Small 3-vector over any commutative ring (Rational, BivariatePolynomial,
// long double).
template <class T>
struct Vec3 {
  T x{};
  T y{};
  T z{};

  friend bool operator==(const Vec3&, const Vec3&) = default;

  friend Vec3 operator+(const Vec3& l, const Vec3& r) { return {T(l.x + r.x), T(l.y + r.y), T(l.z + r.z)}; }
  friend Vec3 operator-(const Vec3& l, const Vec3& r) { return {T(l.x - r.x), T(l.y - r.y), T(l.z - r.z)}; }
  friend Vec3 operator*(const T& s, const Vec3& v) { return {T(s * v.x), T(s * v.y), T(s * v.z)}; }
};

template <class T>
T dot(const Vec3<T>& l, const Vec3<T>& r) {
  return T(l.x * r.x + l.y * r.y + l.z * r.z);
}

template <class T>
Vec3<T> cross(const Vec3<T>& l, const Vec3<T>& r) {
  return {T(l.y * r.z - l.z * r.y), T(l.z * r.x - l.x * r.z), T(l.x * r.y - l.y * r.x)};
}

template <class T>
T norm_sq(const Vec3<T>& v) {
  return dot(v, v);
}

}  // namespace hg
