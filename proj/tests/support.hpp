#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "rulekit/curve_spec.hpp"
#include "rulekit/dual.hpp"

namespace testing {

// Fixed-seed generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  rulekit::Vec3d vec(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

  rulekit::Vec3d unit() {
    for (;;) {
      const rulekit::Vec3d v = vec();
      const double n = rulekit::norm(v);
      if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
    }
  }

  rulekit::DualScalar dual(double lo = -2.0, double hi = 2.0) { return {uniform(lo, hi), uniform(lo, hi)}; }
  rulekit::DualVec3 dual_vec() { return {vec(), vec()}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::filesystem::path corpus_path(const std::string& name) {
  return std::filesystem::path(RULEKIT_CORPUS_DIR) / (name + ".curve");
}

inline rulekit::DualCurveSpec corpus(const std::string& name) { return rulekit::load_spec(corpus_path(name)); }

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testing
