#pragma once

#include <cmath>
#include <concepts>

#include "rulekit/jet.hpp"

namespace rulekit {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

using Vec3d = Vec3<double>;
using Vec3j = Vec3<Jet>;

template <class T>
Vec3<T> operator+(Vec3<T> a, const Vec3<T>& b) {
  return a += b;
}
template <class T>
Vec3<T> operator-(Vec3<T> a, const Vec3<T>& b) {
  return a -= b;
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a) {
  return {-a.x, -a.y, -a.z};
}
template <class T>
Vec3<T> operator*(const T& k, const Vec3<T>& a) {
  return {k * a.x, k * a.y, k * a.z};
}
template <class T>
  requires(!std::same_as<T, double>)
Vec3<T> operator*(double k, const Vec3<T>& a) {
  return {k * a.x, k * a.y, k * a.z};
}
template <class T>
Vec3<T> operator*(const Vec3<T>& a, const T& k) {
  return k * a;
}
template <class T>
Vec3<T> operator/(const Vec3<T>& a, const T& k) {
  return {a.x / k, a.y / k, a.z / k};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T norm(const Vec3<T>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

inline double max_abs(const Vec3d& a) { return std::fmax(std::fabs(a.x), std::fmax(std::fabs(a.y), std::fabs(a.z))); }

/// k-th derivative slice of a jet-valued vector.
inline Vec3d slice(const Vec3j& a, int k) { return {a.x[k], a.y[k], a.z[k]}; }
inline Vec3j derivative(const Vec3j& a) { return {a.x.derivative(), a.y.derivative(), a.z.derivative()}; }
inline Vec3j lift(const Vec3d& a) { return {Jet(a.x), Jet(a.y), Jet(a.z)}; }

}  // namespace rulekit
