#pragma once

#include <cmath>

#include "rulekit/errors.hpp"
#include "rulekit/jet.hpp"
#include "rulekit/vec3.hpp"

namespace rulekit {

inline constexpr double kPureDualThreshold = 1e-12;

/// a + eps a*, eps^2 = 0. T is double for plain values or Jet for values
/// carried with their s-derivatives.
template <class T>
struct BasicDual {
  T real{};
  T dual{};
};

template <class T>
struct BasicDualVec3 {
  Vec3<T> real{};
  Vec3<T> dual{};
};

using DualScalar = BasicDual<double>;
using DualVec3 = BasicDualVec3<double>;
using DualJet = BasicDual<Jet>;
using DualVecJet = BasicDualVec3<Jet>;

template <class T>
BasicDual<T> dual_add(const BasicDual<T>& a, const BasicDual<T>& b) {
  return {a.real + b.real, a.dual + b.dual};
}

template <class T>
BasicDual<T> dual_sub(const BasicDual<T>& a, const BasicDual<T>& b) {
  return {a.real - b.real, a.dual - b.dual};
}

// The dual*dual product is never formed, so eps^2 = 0 holds bit-exactly.
template <class T>
BasicDual<T> dual_mul(const BasicDual<T>& a, const BasicDual<T>& b) {
  return {a.real * b.real, a.real * b.dual + b.real * a.dual};
}

template <class T>
BasicDual<T> dual_div(const BasicDual<T>& a, const BasicDual<T>& b, double threshold = kPureDualThreshold) {
  if (!(std::fabs(primal(b.real)) > threshold)) throw DivisionByPureDual("divisor is pure dual");
  return {a.real / b.real, (a.dual * b.real - a.real * b.dual) / (b.real * b.real)};
}

template <class T>
BasicDual<T> operator+(const BasicDual<T>& a, const BasicDual<T>& b) {
  return dual_add(a, b);
}
template <class T>
BasicDual<T> operator-(const BasicDual<T>& a, const BasicDual<T>& b) {
  return dual_sub(a, b);
}
template <class T>
BasicDual<T> operator-(const BasicDual<T>& a) {
  return {-a.real, -a.dual};
}
template <class T>
BasicDual<T> operator*(const BasicDual<T>& a, const BasicDual<T>& b) {
  return dual_mul(a, b);
}

template <class T>
BasicDualVec3<T> operator+(const BasicDualVec3<T>& a, const BasicDualVec3<T>& b) {
  return {a.real + b.real, a.dual + b.dual};
}
template <class T>
BasicDualVec3<T> operator-(const BasicDualVec3<T>& a, const BasicDualVec3<T>& b) {
  return {a.real - b.real, a.dual - b.dual};
}
template <class T>
BasicDualVec3<T> operator-(const BasicDualVec3<T>& a) {
  return {-a.real, -a.dual};
}

/// Dual scalar times dual vector.
template <class T>
BasicDualVec3<T> dual_scale(const BasicDual<T>& k, const BasicDualVec3<T>& a) {
  return {k.real * a.real, k.real * a.dual + k.dual * a.real};
}

template <class T>
BasicDual<T> dual_dot(const BasicDualVec3<T>& x, const BasicDualVec3<T>& y) {
  return {dot(x.real, y.real), dot(x.real, y.dual) + dot(x.dual, y.real)};
}

template <class T>
BasicDualVec3<T> dual_cross(const BasicDualVec3<T>& x, const BasicDualVec3<T>& y) {
  return {cross(x.real, y.real), cross(x.real, y.dual) + cross(x.dual, y.real)};
}

/// ||x|| + eps <x, x*> / ||x||.
template <class T>
BasicDual<T> dual_norm(const BasicDualVec3<T>& x, double threshold = kPureDualThreshold) {
  using std::sqrt;
  const T n = sqrt(dot(x.real, x.real));
  if (!(primal(n) > threshold)) throw PureDualVector("vector has vanishing real part");
  return {n, dot(x.real, x.dual) / n};
}

/// x / k for a dual scalar k, through dual_div so pure-dual divisors are rejected.
template <class T>
BasicDualVec3<T> dual_vec_div(const BasicDualVec3<T>& x, const BasicDual<T>& k,
                              double threshold = kPureDualThreshold) {
  const BasicDual<T> inv = dual_div(BasicDual<T>{T(1.0), T(0.0)}, k, threshold);
  return dual_scale(inv, x);
}

inline DualVec3 slice(const DualVecJet& a, int k) { return {slice(a.real, k), slice(a.dual, k)}; }
inline DualScalar slice(const DualJet& a, int k) { return {a.real[k], a.dual[k]}; }
inline DualVecJet derivative(const DualVecJet& a) { return {derivative(a.real), derivative(a.dual)}; }
inline DualJet derivative(const DualJet& a) { return {a.real.derivative(), a.dual.derivative()}; }

inline double max_abs(const DualScalar& a) { return std::fmax(std::fabs(a.real), std::fabs(a.dual)); }
inline double max_abs(const DualVec3& a) { return std::fmax(max_abs(a.real), max_abs(a.dual)); }

/// Directed line in canonical form: foot is the point nearest the origin.
struct LineR3 {
  Vec3d foot;
  Vec3d direction;
};

/// Study map: direction + eps (foot x direction).
DualVec3 line_to_dual(const LineR3& line);

/// Inverse Study map. Throws NotOnDualUnitSphere unless ||x|| = 1 and <x, x*> = 0.
DualVec3 require_dual_unit(const DualVec3& x, double tolerance = 1e-9);
LineR3 dual_to_line(const DualVec3& x, double tolerance = 1e-9);

}  // namespace rulekit
