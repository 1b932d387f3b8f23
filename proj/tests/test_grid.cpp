#include <cmath>
#include <cstring>

#include "doctest.h"
#include "rulekit/errors.hpp"
#include "rulekit/grid.hpp"
#include "support.hpp"

using namespace rulekit;

namespace {

// Bitwise comparison, so NaN == NaN and -0 != 0.
bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool identical(const CurvatureSample& a, const CurvatureSample& b) {
  return a.singular == b.singular && same_bits(a.K_oracle, b.K_oracle) && same_bits(a.H_half, b.H_half) &&
         same_bits(a.H_trace, b.H_trace) && same_bits(a.K_paper, b.K_paper) && same_bits(a.H_paper, b.H_paper) &&
         same_bits(a.Y2_norm, b.Y2_norm) && same_bits(a.position.x, b.position.x) &&
         same_bits(a.position.z, b.position.z);
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("grid configuration checks") {
    CHECK_NOTHROW(check_grid(GridConfig{}));
    CHECK_THROWS_AS(check_grid(GridConfig{4, -1, 1, 9}), InputError);
    CHECK_THROWS_AS(check_grid(GridConfig{9, -1, 1, 4}), InputError);
    CHECK_THROWS_AS(check_grid(GridConfig{9, 1, -1, 9}), InputError);
    CHECK_THROWS_AS(check_grid(GridConfig{9, 0, NAN, 9}), InputError);
  }

  TEST_CASE("linspace hits both ends") {
    const auto v = linspace(-2.0, 2.0, 41);
    CHECK(v.size() == 41);
    CHECK(v.front() == -2.0);
    CHECK(v.back() == 2.0);
    CHECK(v[20] == 0.0);
  }

  TEST_CASE("parallel kernel equals the serial reference bit for bit") {
    for (const char* name : {"twisted", "helicoid", "circle"}) {
      const DualCurveSpec spec = testing::corpus(name);
      for (IndicatrixKind kind : kAllKinds) {
        const CurvatureGrid a = serial::evaluate_grid(spec, kind, GridConfig{});
        for (int threads : {1, 3, 8}) {
          set_thread_limit(threads);
          const CurvatureGrid b = evaluate_grid(spec, kind, GridConfig{});
          REQUIRE(a.samples.size() == b.samples.size());
          for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(identical(a.samples[i], b.samples[i]));
        }
      }
    }
    set_thread_limit(thread_limit());
  }

  TEST_CASE("layout is s-major") {
    const CurvatureGrid g = evaluate_grid(testing::corpus("twisted"), IndicatrixKind::Tangent, GridConfig{6, -1, 1, 5});
    CHECK(g.samples.size() == 30);
    CHECK(g.at(2, 3).s == g.s_values[2]);
    CHECK(g.at(2, 3).v == g.v_values[3]);
    CHECK(&g.at(1, 0) == &g.samples[5]);
  }

  TEST_CASE("points near the striction line of a plane are flagged, not fatal") {
    // Circle, tangent kind: the surface is a plane whose rulings all meet the
    // circle, and v = 0 is the edge of regression.
    const CurvatureGrid g = evaluate_grid(testing::corpus("circle"), IndicatrixKind::Tangent, GridConfig{});
    CHECK(g.excluded() == 21);
    for (int i = 0; i < 21; ++i) CHECK(g.at(i, 20).singular);
    CHECK_FALSE(g.at(3, 5).singular);
  }

  TEST_CASE("undefined frames propagate as numerical errors") {
    const DualCurveSpec still = parse_spec(
        "alpha_x = 1\nalpha_y = 0\nalpha_z = 0\nalphastar_x = 0\nalphastar_y = s\nalphastar_z = 0\ndomain = 0, 1\n");
    CHECK_THROWS_AS(evaluate_grid(still, IndicatrixKind::Tangent, GridConfig{}), NumericalError);
    CHECK_THROWS_AS(serial::evaluate_grid(still, IndicatrixKind::Tangent, GridConfig{}), NumericalError);
  }
}
