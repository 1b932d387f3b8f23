#include "rulekit/grid.hpp"

#include <exception>

#ifdef RULEKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace rulekit {

void check_grid(const GridConfig& config) {
  if (config.s_count < 5 || config.v_count < 5) throw InputError("grid counts must be >= 5");
  if (!std::isfinite(config.v_min) || !std::isfinite(config.v_max) || !(config.v_min < config.v_max)) {
    throw InputError("v range must be finite with v_min < v_max");
  }
}

int CurvatureGrid::excluded() const {
  int n = 0;
  for (const auto& p : samples) n += p.singular ? 1 : 0;
  return n;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1);
  return out;
}

CurvatureSample evaluate_point(const FrameJet& fj, const BracketTable& brackets, IndicatrixKind kind, double v,
                               BracketInterpretation interp, double y2_guard) {
  CurvatureSample p;
  p.s = fj.s;
  p.v = v;
  const Director x = director(fj, kind);
  p.position = cross(x.value.real, x.value.dual) + v * x.value.real;

  try {
    const SurfaceJet sj = surface_jet(fj, kind, v);
    const OracleCurvatures oc = curvatures_oracle(fundamental_forms(sj));
    p.K_oracle = oc.K;
    p.H_half = oc.H_half;
    p.H_trace = oc.H_trace;
    const GramSchmidtFrame gs = gram_schmidt(sj);
    p.Y2_norm = gs.Y2_norm;
    const ShapeOperator2x2 S = shape_operator(sj, gs);
    p.det_S = S.det();
    p.trace_S = S.trace();
    p.trace_S_s_only = shape_operator(sj, gs, ShapeDerivative::SOnly).trace();
  } catch (const NumericalError&) {
    p.singular = true;
  }

  const CurvatureInvariants inv = rate_invariants(fj);
  p.brackets = formula_brackets(brackets, kind, interp);
  try {
    p.K_paper = formula_K(kind, inv, p.brackets, v);
    FormulaH h = formula_H(kind, inv, p.brackets, v);
    p.H_paper = h.value;
    p.formula_Y2_norm = h.Y2_norm;
    p.H_terms = std::move(h.terms);
  } catch (const SingularDenominator&) {
  }

  if (p.Y2_norm < y2_guard) p.singular = true;
  return p;
}

namespace {

CurvatureGrid empty_grid(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& config,
                         BracketInterpretation interp) {
  check_grid(config);
  CurvatureGrid grid;
  grid.kind = kind;
  grid.interpretation = interp;
  grid.config = config;
  grid.s_values = linspace(spec.domain.lo, spec.domain.hi, config.s_count);
  grid.v_values = linspace(config.v_min, config.v_max, config.v_count);
  grid.samples.resize(static_cast<std::size_t>(config.s_count) * config.v_count);
  return grid;
}

}  // namespace

std::vector<FrameJet> grid_frames(const DualCurveSpec& spec, const std::vector<double>& s_values) {
  const int n = static_cast<int>(s_values.size());
  std::vector<FrameJet> frames(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      frames[i] = frame_jet_at(spec, s_values[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Lowest index first, so the reported error does not depend on scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return frames;
}

CurvatureGrid evaluate_grid(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& config,
                            BracketInterpretation interp) {
  CurvatureGrid grid = empty_grid(spec, kind, config, interp);
  const std::vector<FrameJet> frames = grid_frames(spec, grid.s_values);
  std::vector<BracketTable> tables(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) tables[i] = bracket_table(frames[i]);

  const int n_v = config.v_count;
  const int total = config.s_count * n_v;
#pragma omp parallel for schedule(static)
  for (int idx = 0; idx < total; ++idx) {
    const int i_s = idx / n_v;
    const int i_v = idx % n_v;
    grid.samples[idx] = evaluate_point(frames[i_s], tables[i_s], kind, grid.v_values[i_v], interp, config.y2_guard);
  }
  return grid;
}

namespace serial {

CurvatureGrid evaluate_grid(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& config,
                            BracketInterpretation interp) {
  CurvatureGrid grid = empty_grid(spec, kind, config, interp);
  std::size_t idx = 0;
  for (double s : grid.s_values) {
    const FrameJet fj = frame_jet_at(spec, s);
    const BracketTable table = bracket_table(fj);
    for (double v : grid.v_values) grid.samples[idx++] = evaluate_point(fj, table, kind, v, interp, config.y2_guard);
  }
  return grid;
}

}  // namespace serial

void set_thread_limit(int threads) {
#ifdef RULEKIT_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int thread_limit() {
#ifdef RULEKIT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rulekit
