#pragma once

#include <array>
#include <string>
#include <vector>

#include "rulekit/grid.hpp"

namespace rulekit {

struct Tolerances {
  double tol_K = 1e-8;         // developable: max |K| over the grid
  double tol_H = 1e-8;         // minimal: max |H_half| over the grid
  double tol_W = 1e-6;         // Weingarten: normalized Jacobian of (K, H)
  double tol_zero = 1e-10;     // theorem hypotheses "X = 0"
  double tol_nonzero = 1e-4;   // theorem side conditions "X != 0"
  double tol_verify = 1e-6;    // closed form vs oracle, relative
};

/// Relative disagreement |a - b| / max(1, |b|); infinite if a is undefined.
double relative_gap(double a, double b);

struct QuantityRange {
  std::string name;
  double max_abs = 0.0;
  double min_abs = 0.0;
};

struct TheoremBranch {
  std::string description;
  std::vector<QuantityRange> must_vanish;
  std::vector<QuantityRange> must_not_vanish;
  bool unsatisfiable_by_construction = false;  // requires kappa = 0, which no valid frame has
  bool satisfied = false;
};

struct TheoremRecord {
  int theorem = 0;
  IndicatrixKind kind = IndicatrixKind::Tangent;
  std::vector<TheoremBranch> branches;
  bool hypothesis_satisfied = false;
  double max_abs_K_paper = 0.0;
  double max_abs_H_paper = 0.0;
  double max_abs_K_oracle = 0.0;
  double max_abs_H_trace = 0.0;
  int compared_points = 0;
  bool conclusion_satisfied = false;
  bool forward_holds = true;         // hypothesis => conclusion
  bool converse_consistent = true;   // false when the conclusion holds without the hypothesis
  std::vector<std::string> notes;
};

struct ClassificationReport {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  bool developable = false;
  double max_abs_K = 0.0;
  bool minimal = false;
  double max_abs_H_half = 0.0;
  bool weingarten = false;
  bool jacobian_vanishes = false;
  double max_norm_jacobian = 0.0;
  int jacobian_points = 0;
  TheoremRecord theorem;
  BracketInterpretation selected_interpretation = BracketInterpretation::Printed;
  int s_count = 0, v_count = 0;
  int excluded_points = 0;
};

/// Developable / minimal / Weingarten verdicts on the curvature grid of one surface.
/// Throws InsufficientGrid when no interior point has a full finite-difference stencil.
ClassificationReport classify_surface(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid = {},
                                      const Tolerances& tol = {});

/// Max normalized |K_s H_v - K_v H_s| / (1 + |grad K| |grad H|) over the grid,
/// with order-4 central differences on interior, non-singular stencils.
struct JacobianScan {
  double max_norm_jacobian = 0.0;
  int points = 0;
};
JacobianScan weingarten_jacobian(const CurvatureGrid& grid);

/// Hypothesis and conclusion of the theorem that belongs to `kind`
/// (1: tangent, 2: principal normal, 3: binormal).
TheoremRecord theorem_predicate(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid = {},
                                const Tolerances& tol = {},
                                BracketInterpretation interp = BracketInterpretation::Printed);
TheoremRecord theorem_predicate(const CurvatureGrid& grid, const std::vector<FrameJet>& frames, const Tolerances& tol);

struct NamedSpec {
  std::string name;
  DualCurveSpec spec;
};

struct InterpretationRow {
  std::string member;
  IndicatrixKind kind = IndicatrixKind::Tangent;
  BracketInterpretation interpretation = BracketInterpretation::Printed;
  double max_rel_K = 0.0;
  double max_rel_H = 0.0;
  int compared = 0;
  int excluded = 0;
  int undefined = 0;  // compared points where the closed form has a vanishing denominator
};

struct TermMagnitude {
  std::string label;
  double max_abs = 0.0;  // max |term| / ||Y2||^3
};

/// Mean-curvature comparison for one member and kind under the selected interpretation.
struct HDiagnostics {
  std::string member;
  IndicatrixKind kind = IndicatrixKind::Tangent;
  int compared = 0;
  double max_rel_vs_trace = 0.0;        // printed H vs trace of the shape operator
  double max_rel_vs_negated_trace = 0.0;
  double max_rel_vs_s_only = 0.0;       // printed H vs trace with S(E2) = (1/||Y2||) dN/ds
  double max_rel_ruling_term = 0.0;     // |trace - s_only trace|, the part carried by the v-derivative of N
  std::vector<TermMagnitude> terms;
};

struct KindSelection {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  BracketInterpretation interpretation = BracketInterpretation::Printed;
  double max_rel_K = 0.0;
  double max_rel_H = 0.0;
  int undefined = 0;
  bool passes = false;
};

struct VerifyReport {
  std::vector<InterpretationRow> table;
  std::array<KindSelection, 3> selected{};
  std::vector<HDiagnostics> h_diagnostics;
  bool k_degenerate = false;  // K vanished at every compared point of every member
  bool passed = false;
  std::vector<std::string> notes;
};

/// Compares the closed forms against the fundamental-form oracle on every
/// member, kind and bracket interpretation, and picks per kind the
/// interpretation with the smallest K disagreement (ties go to Printed).
VerifyReport verify_formulas(const std::vector<NamedSpec>& corpus, const GridConfig& grid = {},
                             const Tolerances& tol = {});

/// argmin over interpretations of the K disagreement for a single surface.
BracketInterpretation select_interpretation(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid);

}  // namespace rulekit
