#pragma once

#include <array>
#include <cmath>

namespace rulekit {

/// Truncated univariate jet: value and raw derivatives d^k/ds^k, k = 0..kOrder.
///
/// Coefficients are stored as plain derivatives, not Taylor coefficients
/// (no 1/k! factors anywhere in the public surface).
class Jet {
 public:
  static constexpr int kOrder = 5;
  static constexpr int kSize = kOrder + 1;

  Jet() = default;
  Jet(double value) { d_[0] = value; }  // NOLINT: constants promote implicitly

  /// The independent variable s, seeded at the given point.
  static Jet variable(double s) {
    Jet j(s);
    j.d_[1] = 1.0;
    return j;
  }

  double operator[](int k) const { return d_[k]; }
  double& operator[](int k) { return d_[k]; }
  double value() const { return d_[0]; }
  const std::array<double, kSize>& coefficients() const { return d_; }

  /// d/ds. The top coefficient is unknown after the shift and becomes 0.
  Jet derivative() const {
    Jet r;
    for (int k = 0; k < kOrder; ++k) r.d_[k] = d_[k + 1];
    return r;
  }

  Jet truncated(int order) const {
    Jet r = *this;
    for (int k = order + 1; k < kSize; ++k) r.d_[k] = 0.0;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) d_[k] += o.d_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Jet& operator*=(double a) {
    for (double& c : d_) c *= a;
    return *this;
  }

 private:
  std::array<double, kSize> d_{};
};

inline Jet operator-(Jet a) {
  a *= -1.0;
  return a;
}
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator+(Jet a, double b) {
  a[0] += b;
  return a;
}
inline Jet operator+(double b, Jet a) { return a + b; }
inline Jet operator-(Jet a, double b) {
  a[0] -= b;
  return a;
}
inline Jet operator-(double b, const Jet& a) { return -a + b; }
inline Jet operator*(Jet a, double b) { return a *= b; }
inline Jet operator*(double b, Jet a) { return a *= b; }
inline Jet operator/(Jet a, double b) { return a *= 1.0 / b; }

/// Leibniz rule.
Jet operator*(const Jet& a, const Jet& b);
/// Quotient by solving f = q g order by order. Throws DomainError if g(s) = 0.
Jet operator/(const Jet& a, const Jet& b);
inline Jet operator/(double a, const Jet& b) { return Jet(a) / b; }

Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet tan(const Jet& x);
Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sqrt(const Jet& x);
Jet pow(const Jet& x, int n);

/// Value part, so generic code can threshold on doubles and jets alike.
inline double primal(double x) { return x; }
inline double primal(const Jet& x) { return x.value(); }

/// Binomial coefficient C(n, k) for n <= Jet::kOrder.
double binomial(int n, int k);

}  // namespace rulekit
