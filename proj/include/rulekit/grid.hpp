#pragma once

#include <limits>
#include <vector>

#include "rulekit/ruled.hpp"

namespace rulekit {

struct GridConfig {
  int s_count = 21;
  double v_min = -2.0;
  double v_max = 2.0;
  int v_count = 41;
  /// Points with ||Y2|| below this are evaluated but flagged singular and
  /// left out of comparisons and verdicts.
  double y2_guard = 1e-3;
};

/// Throws InputError unless both counts are >= 5 and v_min < v_max.
void check_grid(const GridConfig& config);

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CurvatureSample {
  double s = 0.0, v = 0.0;
  Vec3d position;
  double K_oracle = kNaN, H_half = kNaN, H_trace = kNaN;
  double K_paper = kNaN, H_paper = kNaN;
  double Y2_norm = 0.0;        // Gram-Schmidt ||Y2|| (= ||phi_s x phi_v||)
  double formula_Y2_norm = kNaN; // printed ||Y2|| expression
  double det_S = kNaN, trace_S = kNaN, trace_S_s_only = kNaN;
  FormulaBrackets brackets;
  std::vector<FormulaTerm> H_terms;
  bool singular = false;
};

struct CurvatureGrid {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  BracketInterpretation interpretation = BracketInterpretation::Printed;
  GridConfig config;
  std::vector<double> s_values, v_values;
  std::vector<CurvatureSample> samples;  // s-major: index = i_s * v_count + i_v

  const CurvatureSample& at(int i_s, int i_v) const { return samples[static_cast<std::size_t>(i_s) * v_values.size() + i_v]; }
  int excluded() const;
};

std::vector<double> linspace(double lo, double hi, int count);

/// All quantities at one (s, v). Never throws for point-local singularities;
/// those come back as a singular sample.
CurvatureSample evaluate_point(const FrameJet& fj, const BracketTable& brackets, IndicatrixKind kind, double v,
                               BracketInterpretation interp, double y2_guard);

/// Grid evaluation, OpenMP-parallel over frames and over points. Results do
/// not depend on the thread count. Throws NumericalError if a frame is undefined.
CurvatureGrid evaluate_grid(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& config,
                            BracketInterpretation interp = BracketInterpretation::Printed);

/// Frames of the s-grid, parallel.
std::vector<FrameJet> grid_frames(const DualCurveSpec& spec, const std::vector<double>& s_values);

namespace serial {

/// Reference single-threaded loop; kept to check the parallel kernel.
CurvatureGrid evaluate_grid(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& config,
                            BracketInterpretation interp = BracketInterpretation::Printed);

}  // namespace serial

/// Thread cap for the parallel kernels (no-op without OpenMP).
void set_thread_limit(int threads);
int thread_limit();

}  // namespace rulekit
