#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/dual.hpp"
#include "rulekit/expr.hpp"

namespace rulekit {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// alpha(s) + eps alpha*(s), given componentwise as expressions in s.
struct DualCurveSpec {
  std::array<Expr, 3> alpha;
  std::array<Expr, 3> alpha_star;
  Interval domain;
  Constants constants;

  DualVec3 eval(double s) const;
  /// Components as jets of order Jet::kOrder.
  DualVecJet eval_jet(double s) const;
  /// Same curve with s replaced by factor*s and the domain divided by factor.
  DualCurveSpec reparametrized(double factor) const;
};

/// Parses the key = value curve format:
///   alpha_x, alpha_y, alpha_z, alphastar_x, alphastar_y, alphastar_z = expression
///   domain = s0, s1
///   const.NAME = number
/// `#` starts a comment; LF and CRLF line endings are accepted.
/// Throws SpecError carrying the offending line number.
DualCurveSpec parse_spec(std::string_view text);
DualCurveSpec load_spec(const std::filesystem::path& path);

/// Binds a constant after loading (for parameter sweeps). Throws SpecError
/// when the name was not declared in the file.
void set_constant(DualCurveSpec& spec, const std::string& name, double value);

struct SpecValidation {
  bool pass = false;
  int samples = 0;
  double max_norm_defect = 0.0;    // max | ||alpha|| - 1 |
  double max_moment_defect = 0.0;  // max | <alpha, alpha*> |
  double min_real_curvature = 0.0;
  bool curvature_defined = true;   // false if some sample had a pure-dual speed or curvature
  std::vector<std::string> failures;         // membership or evaluation failures; these fail the check
  std::vector<std::string> curvature_issues;  // samples where the Frenet frame is undefined
};

inline constexpr double kSphereTolerance = 1e-8;

/// Dual unit sphere membership at n uniform samples (endpoints included),
/// plus the smallest real curvature seen by the Frenet computation.
SpecValidation validate_spec(const DualCurveSpec& spec, int n_samples);

}  // namespace rulekit
