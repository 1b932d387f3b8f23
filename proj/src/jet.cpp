#include "rulekit/jet.hpp"

#include <cmath>

#include "rulekit/errors.hpp"

namespace rulekit {

namespace {

constexpr std::array<std::array<double, Jet::kSize>, Jet::kSize> make_binomials() {
  std::array<std::array<double, Jet::kSize>, Jet::kSize> c{};
  for (int n = 0; n < Jet::kSize; ++n) {
    c[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
  }
  return c;
}

constexpr auto kBinomial = make_binomials();

// h = F(g) from the derivatives F^(j)(g(s)), j = 0..kOrder:
// h = sum_j F^(j)/j! * (g - g(s))^j, where the j-th power has no terms below order j.
Jet compose(const Jet& g, const std::array<double, Jet::kSize>& f_derivs) {
  Jet delta = g;
  delta[0] = 0.0;
  Jet result(f_derivs[0]);
  Jet power(1.0);
  double factorial = 1.0;
  for (int j = 1; j < Jet::kSize; ++j) {
    power = power * delta;
    factorial *= j;
    result += power * (f_derivs[j] / factorial);
  }
  return result;
}

}  // namespace

double binomial(int n, int k) { return kBinomial[n][k]; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < Jet::kSize; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += kBinomial[k][j] * a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b[0] == 0.0) throw DomainError("division by a jet with zero value");
  Jet q;
  for (int k = 0; k < Jet::kSize; ++k) {
    double acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= kBinomial[k][j] * b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Jet sin(const Jet& x) {
  const double s = std::sin(x[0]), c = std::cos(x[0]);
  const std::array<double, 4> cycle{s, c, -s, -c};
  std::array<double, Jet::kSize> f{};
  for (int j = 0; j < Jet::kSize; ++j) f[j] = cycle[j % 4];
  return compose(x, f);
}

Jet cos(const Jet& x) {
  const double s = std::sin(x[0]), c = std::cos(x[0]);
  const std::array<double, 4> cycle{c, -s, -c, s};
  std::array<double, Jet::kSize> f{};
  for (int j = 0; j < Jet::kSize; ++j) f[j] = cycle[j % 4];
  return compose(x, f);
}

Jet tan(const Jet& x) {
  if (std::abs(std::cos(x[0])) < 1e-12) throw DomainError("tan evaluated at a pole");
  return sin(x) / cos(x);
}

Jet exp(const Jet& x) {
  std::array<double, Jet::kSize> f{};
  f.fill(std::exp(x[0]));
  return compose(x, f);
}

Jet log(const Jet& x) {
  const double u = x[0];
  if (!(u > 0.0)) throw DomainError("log of a non-positive value");
  std::array<double, Jet::kSize> f{};
  f[0] = std::log(u);
  // d^j/du^j log u = (-1)^(j-1) (j-1)! / u^j
  double magnitude = 1.0 / u;
  for (int j = 1; j < Jet::kSize; ++j) {
    f[j] = (j % 2 == 1 ? 1.0 : -1.0) * magnitude;
    magnitude *= static_cast<double>(j) / u;
  }
  return compose(x, f);
}

Jet sqrt(const Jet& x) {
  const double u = x[0];
  if (u < 0.0) throw DomainError("sqrt of a negative value");
  if (u == 0.0) {
    bool constant = true;
    for (int k = 1; k < Jet::kSize; ++k) constant = constant && x[k] == 0.0;
    if (!constant) throw DomainError("sqrt is not differentiable at 0");
    return Jet(0.0);
  }
  std::array<double, Jet::kSize> f{};
  // d^j/du^j u^(1/2) = (1/2)(1/2 - 1)...(1/2 - j + 1) u^(1/2 - j)
  double falling = 1.0;
  for (int j = 0; j < Jet::kSize; ++j) {
    f[j] = falling * std::pow(u, 0.5 - j);
    falling *= 0.5 - j;
  }
  return compose(x, f);
}

Jet pow(const Jet& x, int n) {
  if (n == 0) return Jet(1.0);
  if (n < 0) {
    if (x[0] == 0.0) throw DomainError("negative power of zero");
    return Jet(1.0) / pow(x, -n);
  }
  Jet result(1.0);
  Jet base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace rulekit
