#include "rulekit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rulekit/errors.hpp"

namespace rulekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

// Order-4 central difference coefficients for the first derivative.
double central4(double fm2, double fm1, double fp1, double fp2, double h) {
  return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
}

QuantityRange range_of(const std::string& name, const std::vector<double>& values) {
  QuantityRange q;
  q.name = name;
  q.min_abs = values.empty() ? 0.0 : kInf;
  for (double x : values) {
    q.max_abs = std::max(q.max_abs, std::abs(x));
    q.min_abs = std::min(q.min_abs, std::abs(x));
  }
  return q;
}

bool vanishes(const QuantityRange& q, double tol) { return q.max_abs <= tol; }
bool stays_away(const QuantityRange& q, double tol) { return q.min_abs >= tol; }

}  // namespace

double relative_gap(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return kInf;
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

JacobianScan weingarten_jacobian(const CurvatureGrid& grid) {
  JacobianScan scan;
  const int ns = static_cast<int>(grid.s_values.size());
  const int nv = static_cast<int>(grid.v_values.size());
  if (ns < 5 || nv < 5) return scan;
  const double hs = grid.s_values[1] - grid.s_values[0];
  const double hv = grid.v_values[1] - grid.v_values[0];

  for (int i = 2; i + 2 < ns; ++i) {
    for (int j = 2; j + 2 < nv; ++j) {
      bool ok = true;
      for (int d = -2; d <= 2 && ok; ++d) ok = !grid.at(i + d, j).singular && !grid.at(i, j + d).singular;
      if (!ok) continue;
      auto K = [&](int a, int b) { return grid.at(a, b).K_oracle; };
      auto H = [&](int a, int b) { return grid.at(a, b).H_half; };
      const double Ks = central4(K(i - 2, j), K(i - 1, j), K(i + 1, j), K(i + 2, j), hs);
      const double Kv = central4(K(i, j - 2), K(i, j - 1), K(i, j + 1), K(i, j + 2), hv);
      const double Hs = central4(H(i - 2, j), H(i - 1, j), H(i + 1, j), H(i + 2, j), hs);
      const double Hv = central4(H(i, j - 2), H(i, j - 1), H(i, j + 1), H(i, j + 2), hv);
      const double J = Ks * Hv - Kv * Hs;
      const double scale = 1.0 + std::hypot(Ks, Kv) * std::hypot(Hs, Hv);
      scan.max_norm_jacobian = std::max(scan.max_norm_jacobian, std::abs(J) / scale);
      ++scan.points;
    }
  }
  return scan;
}

TheoremRecord theorem_predicate(const CurvatureGrid& grid, const std::vector<FrameJet>& frames,
                                const Tolerances& tol) {
  TheoremRecord rec;
  rec.kind = grid.kind;
  rec.theorem = static_cast<int>(grid.kind) + 1;

  std::vector<double> kappa, kappa_star, tau, tau_star;
  for (const FrameJet& fj : frames) {
    const CurvatureInvariants inv = rate_invariants(fj);
    kappa.push_back(inv.kappa);
    kappa_star.push_back(inv.kappa_star);
    tau.push_back(inv.tau);
    tau_star.push_back(inv.tau_star);
  }
  const QuantityRange k = range_of("kappa", kappa);
  const QuantityRange ks = range_of("kappa_star", kappa_star);
  const QuantityRange t = range_of("tau", tau);
  const QuantityRange ts = range_of("tau_star", tau_star);

  auto settle = [&](TheoremBranch& b) {
    if (b.unsatisfiable_by_construction) {
      b.satisfied = false;
      return;
    }
    b.satisfied = true;
    for (const auto& q : b.must_vanish) b.satisfied = b.satisfied && vanishes(q, tol.tol_zero);
    for (const auto& q : b.must_not_vanish) b.satisfied = b.satisfied && stays_away(q, tol.tol_nonzero);
  };

  switch (grid.kind) {
    case IndicatrixKind::Tangent: {
      TheoremBranch b{"kappa* = 0 and tau = 0 (kappa, tau* nonzero)", {ks, t}, {k, ts}};
      rec.branches.push_back(b);
      break;
    }
    case IndicatrixKind::PrincipalNormal: {
      TheoremBranch a{"kappa = 0 and tau* = 0", {k, ts}, {}};
      a.unsatisfiable_by_construction = true;
      TheoremBranch b{"kappa* = 0 and tau = 0", {ks, t}, {}};
      rec.branches.push_back(a);
      rec.branches.push_back(b);
      rec.notes.push_back("branch kappa = 0 cannot hold: the principal normal is undefined where kappa vanishes");
      break;
    }
    case IndicatrixKind::Binormal: {
      TheoremBranch a{"kappa = 0 and tau* = 0 (kappa*, tau nonzero)", {k, ts}, {ks, t}};
      a.unsatisfiable_by_construction = true;
      rec.branches.push_back(a);
      rec.notes.push_back("hypothesis requires kappa = 0, where the principal normal is undefined");
      break;
    }
  }
  for (auto& b : rec.branches) {
    settle(b);
    rec.hypothesis_satisfied = rec.hypothesis_satisfied || b.satisfied;
  }

  for (const auto& p : grid.samples) {
    if (p.singular) continue;
    ++rec.compared_points;
    rec.max_abs_K_paper = std::max(rec.max_abs_K_paper, std::isfinite(p.K_paper) ? std::abs(p.K_paper) : kInf);
    rec.max_abs_H_paper = std::max(rec.max_abs_H_paper, std::isfinite(p.H_paper) ? std::abs(p.H_paper) : kInf);
    rec.max_abs_K_oracle = std::max(rec.max_abs_K_oracle, std::abs(p.K_oracle));
    rec.max_abs_H_trace = std::max(rec.max_abs_H_trace, std::abs(p.H_trace));
  }
  rec.conclusion_satisfied =
      rec.compared_points > 0 && rec.max_abs_K_paper <= tol.tol_K && rec.max_abs_H_paper <= tol.tol_H;
  if (rec.compared_points == 0) rec.notes.push_back("no non-singular grid point to test the conclusion on");
  rec.forward_holds = !rec.hypothesis_satisfied || rec.conclusion_satisfied;
  rec.converse_consistent = rec.hypothesis_satisfied || !rec.conclusion_satisfied;
  return rec;
}

TheoremRecord theorem_predicate(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid,
                                const Tolerances& tol, BracketInterpretation interp) {
  const CurvatureGrid g = evaluate_grid(spec, kind, grid, interp);
  return theorem_predicate(g, grid_frames(spec, g.s_values), tol);
}

namespace {

struct KStats {
  double max_rel_K = 0.0;
  double max_rel_H = 0.0;
  double max_abs_K = 0.0;
  int compared = 0;
  int undefined = 0;  // closed-form denominator vanished where the oracle is regular
};

KStats compare(const CurvatureGrid& g) {
  KStats st;
  for (const auto& p : g.samples) {
    if (p.singular) continue;
    ++st.compared;
    st.max_abs_K = std::max(st.max_abs_K, std::abs(p.K_oracle));
    if (!std::isfinite(p.K_paper)) {
      ++st.undefined;
      continue;
    }
    st.max_rel_K = std::max(st.max_rel_K, relative_gap(p.K_paper, p.K_oracle));
    st.max_rel_H = std::max(st.max_rel_H, relative_gap(p.H_paper, p.H_trace));
  }
  return st;
}

// Candidates with undefined points rank after those without. Within a rank a
// later candidate wins only if it is clearly better, so exact and round-off
// ties stay with the earlier (printed) reading.
bool clearly_better(int undefined, double candidate, int best_undefined, double best) {
  if ((undefined > 0) != (best_undefined > 0)) return undefined == 0;
  return candidate < best && best - candidate > 1e-12 * std::max(1.0, std::abs(best));
}

}  // namespace

BracketInterpretation select_interpretation(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid) {
  BracketInterpretation best = BracketInterpretation::Printed;
  KStats best_stats;
  bool first = true;
  for (BracketInterpretation interp : kAllInterpretations) {
    const KStats st = compare(evaluate_grid(spec, kind, grid, interp));
    if (first || clearly_better(st.undefined, st.max_rel_K, best_stats.undefined, best_stats.max_rel_K)) {
      best = interp;
      best_stats = st;
      first = false;
    }
  }
  return best;
}

ClassificationReport classify_surface(const DualCurveSpec& spec, IndicatrixKind kind, const GridConfig& grid,
                                      const Tolerances& tol) {
  check_grid(grid);
  ClassificationReport rep;
  rep.kind = kind;
  rep.selected_interpretation = select_interpretation(spec, kind, grid);
  const CurvatureGrid g = evaluate_grid(spec, kind, grid, rep.selected_interpretation);
  rep.s_count = grid.s_count;
  rep.v_count = grid.v_count;
  rep.excluded_points = g.excluded();

  const JacobianScan scan = weingarten_jacobian(g);
  if (scan.points == 0) {
    throw InsufficientGrid("no grid point has a full non-singular finite-difference stencil (" +
                           std::to_string(rep.excluded_points) + " of " + std::to_string(g.samples.size()) +
                           " points excluded)");
  }
  for (const auto& p : g.samples) {
    if (p.singular) continue;
    rep.max_abs_K = std::max(rep.max_abs_K, std::abs(p.K_oracle));
    rep.max_abs_H_half = std::max(rep.max_abs_H_half, std::abs(p.H_half));
  }
  rep.developable = rep.max_abs_K <= tol.tol_K;
  rep.minimal = rep.max_abs_H_half <= tol.tol_H;
  rep.max_norm_jacobian = scan.max_norm_jacobian;
  rep.jacobian_points = scan.points;
  rep.jacobian_vanishes = scan.max_norm_jacobian <= tol.tol_W;
  rep.weingarten = rep.developable || rep.minimal || rep.jacobian_vanishes;
  rep.theorem = theorem_predicate(g, grid_frames(spec, g.s_values), tol);
  return rep;
}

VerifyReport verify_formulas(const std::vector<NamedSpec>& corpus, const GridConfig& grid, const Tolerances& tol) {
  check_grid(grid);
  VerifyReport rep;
  double max_abs_K = 0.0;
  int total_compared = 0;

  for (IndicatrixKind kind : kAllKinds) {
    const int ki = static_cast<int>(kind);
    std::array<double, 4> agg_K{}, agg_H{};
    std::array<int, 4> agg_undefined{};
    for (const NamedSpec& member : corpus) {
      for (std::size_t ii = 0; ii < kAllInterpretations.size(); ++ii) {
        const CurvatureGrid g = evaluate_grid(member.spec, kind, grid, kAllInterpretations[ii]);
        const KStats st = compare(g);
        rep.table.push_back({member.name, kind, kAllInterpretations[ii], st.max_rel_K, st.max_rel_H, st.compared,
                             g.excluded(), st.undefined});
        agg_K[ii] = std::max(agg_K[ii], st.max_rel_K);
        agg_undefined[ii] += st.undefined;
        agg_H[ii] = std::max(agg_H[ii], st.max_rel_H);
        if (ii == 0) {
          max_abs_K = std::max(max_abs_K, st.max_abs_K);
          total_compared += st.compared;
        }
      }
    }
    std::size_t best = 0;
    for (std::size_t ii = 1; ii < agg_K.size(); ++ii) {
      if (clearly_better(agg_undefined[ii], agg_K[ii], agg_undefined[best], agg_K[best])) best = ii;
    }
    KindSelection& sel = rep.selected[ki];
    sel.kind = kind;
    sel.interpretation = kAllInterpretations[best];
    sel.max_rel_K = agg_K[best];
    sel.max_rel_H = agg_H[best];
    sel.undefined = agg_undefined[best];
    sel.passes = agg_K[best] <= tol.tol_verify && agg_undefined[best] == 0;

    // Mean-curvature diagnostics under the selected interpretation.
    for (const NamedSpec& member : corpus) {
      const CurvatureGrid g = evaluate_grid(member.spec, kind, grid, sel.interpretation);
      HDiagnostics d;
      d.member = member.name;
      d.kind = kind;
      for (const auto& p : g.samples) {
        if (p.singular) continue;
        ++d.compared;
        d.max_rel_vs_trace = std::max(d.max_rel_vs_trace, relative_gap(p.H_paper, p.H_trace));
        d.max_rel_vs_negated_trace = std::max(d.max_rel_vs_negated_trace, relative_gap(p.H_paper, -p.H_trace));
        d.max_rel_vs_s_only = std::max(d.max_rel_vs_s_only, relative_gap(p.H_paper, p.trace_S_s_only));
        d.max_rel_ruling_term = std::max(d.max_rel_ruling_term, relative_gap(p.trace_S_s_only, p.H_trace));
        if (d.terms.empty()) {
          for (const auto& t : p.H_terms) d.terms.push_back({t.label, 0.0});
        }
        const double cube = std::isfinite(p.formula_Y2_norm) ? std::pow(p.formula_Y2_norm, 3) : 0.0;
        for (std::size_t t = 0; t < p.H_terms.size() && t < d.terms.size(); ++t) {
          const double c = cube > 0.0 ? std::abs(p.H_terms[t].value) / cube : kInf;
          d.terms[t].max_abs = std::max(d.terms[t].max_abs, c);
        }
      }
      rep.h_diagnostics.push_back(std::move(d));
    }
  }

  rep.k_degenerate = total_compared == 0 || max_abs_K <= tol.tol_K;
  rep.passed = !corpus.empty() &&
               std::all_of(rep.selected.begin(), rep.selected.end(), [](const KindSelection& s) { return s.passes; });

  if (rep.k_degenerate) {
    rep.notes.push_back("K comparison degenerate: K vanishes (or no point was comparable) on every member");
  }
  for (const KindSelection& sel : rep.selected) {
    const std::string name = kind_name(sel.kind);
    rep.notes.push_back(name + ": selected bracket interpretation '" + interpretation_name(sel.interpretation) +
                        "', max relative K gap " + fmt("%.3g", sel.max_rel_K) +
                        (sel.passes ? " (within tolerance)" : " (exceeds tolerance)"));
    double vs_trace = 0.0, vs_neg = 0.0, vs_s_only = 0.0, ruling = 0.0;
    int compared = 0;
    for (const HDiagnostics& d : rep.h_diagnostics) {
      if (d.kind != sel.kind) continue;
      vs_trace = std::max(vs_trace, d.max_rel_vs_trace);
      vs_neg = std::max(vs_neg, d.max_rel_vs_negated_trace);
      vs_s_only = std::max(vs_s_only, d.max_rel_vs_s_only);
      ruling = std::max(ruling, d.max_rel_ruling_term);
      compared += d.compared;
    }
    if (compared == 0) {
      rep.notes.push_back(name + ": no comparable points for H");
    } else if (vs_trace <= tol.tol_verify) {
      rep.notes.push_back(name + ": closed-form H agrees with trace(S) (max relative gap " + fmt("%.3g", vs_trace) +
                          ")");
    } else if (vs_neg <= tol.tol_verify) {
      rep.notes.push_back(name + ": closed-form H agrees with -trace(S) only: sign discrepancy (max relative gap " +
                          fmt("%.3g", vs_neg) + ")");
    } else if (vs_s_only <= tol.tol_verify) {
      rep.notes.push_back(name + ": closed-form H differs from trace(S) by up to " + fmt("%.3g", vs_trace) +
                          " relative; it equals the trace obtained with S(E2) = (1/||Y2||) dN/ds (gap " +
                          fmt("%.3g", vs_s_only) + "), i.e. it omits the ruling-direction term <phi_s, E1> dN/dv / ||Y2||");
    } else {
      rep.notes.push_back(name + ": closed-form H disagrees with trace(S) (" + fmt("%.3g", vs_trace) +
                          ") and with the s-only trace (" + fmt("%.3g", vs_s_only) + ")");
    }
  }
  return rep;
}

}  // namespace rulekit
