#include "rulekit/ruled.hpp"

#include <cmath>

namespace rulekit {

const char* kind_name(IndicatrixKind kind) {
  switch (kind) {
    case IndicatrixKind::Tangent: return "tangent";
    case IndicatrixKind::PrincipalNormal: return "principal_normal";
    case IndicatrixKind::Binormal: return "binormal";
  }
  return "?";
}

char kind_letter(IndicatrixKind kind) { return "tnb"[static_cast<int>(kind)]; }

std::optional<IndicatrixKind> kind_from_letter(std::string_view letter) {
  if (letter == "t") return IndicatrixKind::Tangent;
  if (letter == "n") return IndicatrixKind::PrincipalNormal;
  if (letter == "b") return IndicatrixKind::Binormal;
  return std::nullopt;
}

const DualVecJet& director_jet(const FrameJet& fj, IndicatrixKind kind) {
  switch (kind) {
    case IndicatrixKind::Tangent: return fj.T;
    case IndicatrixKind::PrincipalNormal: return fj.N;
    case IndicatrixKind::Binormal: return fj.B;
  }
  return fj.T;
}

Director director(const FrameJet& fj, IndicatrixKind kind) {
  const DualVecJet& x = director_jet(fj, kind);
  return {slice(x, 0), slice(x, 1), slice(x, 2)};
}

SurfaceJet surface_jet(const FrameJet& fj, IndicatrixKind kind, double v) {
  const DualVecJet& x = director_jet(fj, kind);
  const Vec3j base = cross(x.real, x.dual);
  const Vec3j phi = base + Jet(v) * x.real;
  const Vec3j phi_s = derivative(phi);
  const Vec3j w = cross(phi_s, x.real);

  SurfaceJet sj;
  sj.s = fj.s;
  sj.v = v;
  sj.position = slice(phi, 0);
  sj.phi_s = slice(phi_s, 0);
  sj.phi_v = slice(x.real, 0);
  sj.phi_ss = slice(phi_s, 1);
  sj.phi_sv = slice(x.real, 1);
  sj.phi_vv = Vec3d{};
  sj.cross_norm = norm(slice(w, 0));
  if (!(sj.cross_norm > kSingularCross)) throw SingularPoint("surface normal undefined (phi_s x phi_v = 0)");

  const Vec3j n = w / norm(w);
  sj.unit_normal = slice(n, 0);
  sj.normal_s = slice(n, 1);
  // d/dv (phi_s x phi_v) = phi_sv x phi_v, then project off the normal.
  const Vec3d w_v = cross(sj.phi_sv, sj.phi_v);
  sj.normal_v = (w_v - dot(sj.unit_normal, w_v) * sj.unit_normal) / sj.cross_norm;
  return sj;
}

SurfaceJet surface_jet(const DualCurveSpec& spec, IndicatrixKind kind, double s, double v) {
  return surface_jet(frame_jet_at(spec, s), kind, v);
}

FundamentalForms fundamental_forms(const SurfaceJet& sj) {
  FundamentalForms ff;
  ff.E = dot(sj.phi_s, sj.phi_s);
  ff.F = dot(sj.phi_s, sj.phi_v);
  ff.G = dot(sj.phi_v, sj.phi_v);
  ff.L = dot(sj.phi_ss, sj.unit_normal);
  ff.M = dot(sj.phi_sv, sj.unit_normal);
  ff.Nf = dot(sj.phi_vv, sj.unit_normal);
  ff.W2 = ff.E * ff.G - ff.F * ff.F;
  return ff;
}

OracleCurvatures curvatures_oracle(const FundamentalForms& ff) {
  if (!(ff.W2 > 1e-12)) throw SingularPoint("degenerate first fundamental form");
  OracleCurvatures c;
  c.K = (ff.L * ff.Nf - ff.M * ff.M) / ff.W2;
  c.H_half = (ff.E * ff.Nf + ff.G * ff.L - 2.0 * ff.F * ff.M) / (2.0 * ff.W2);
  c.H_trace = 2.0 * c.H_half;
  return c;
}

GramSchmidtFrame gram_schmidt(const SurfaceJet& sj) {
  GramSchmidtFrame gs;
  gs.E1 = sj.phi_v / norm(sj.phi_v);
  const Vec3d Y2 = sj.phi_s - dot(sj.phi_s, gs.E1) * gs.E1;
  gs.Y2_norm = norm(Y2);
  if (!(gs.Y2_norm > kSingularCross)) throw SingularPoint("phi_s is parallel to the ruling");
  gs.E2 = Y2 / gs.Y2_norm;
  gs.surface_normal = cross(gs.E1, gs.E2);
  return gs;
}

ShapeOperator2x2 shape_operator(const SurfaceJet& sj, const GramSchmidtFrame& gs, ShapeDerivative mode) {
  // E1 x E2 = phi_v x phi_s / ||.|| = -unit_normal, so its derivatives are the negated ones.
  const Vec3d dn_E1 = -sj.normal_v;
  Vec3d dn_E2 = -sj.normal_s;
  if (mode == ShapeDerivative::Directional) dn_E2 = dn_E2 + dot(sj.phi_s, gs.E1) * sj.normal_v;
  dn_E2 = dn_E2 / gs.Y2_norm;

  ShapeOperator2x2 S;
  S.s11 = dot(dn_E1, gs.E1);
  S.s12 = dot(dn_E1, gs.E2);
  S.s21 = dot(dn_E2, gs.E1);
  S.s22 = dot(dn_E2, gs.E2);
  return S;
}

CurvatureInvariants rate_invariants(const FrameJet& fj) {
  CurvatureInvariants inv;
  inv.kappa = fj.kappa_rate.real[0];
  inv.kappa_star = fj.kappa_rate.dual[0];
  inv.tau = fj.tau_rate.real[0];
  inv.tau_star = fj.tau_rate.dual[0];
  inv.dkappa = fj.kappa_rate.real[1];
  inv.dkappa_star = fj.kappa_rate.dual[1];
  inv.dtau = fj.tau_rate.real[1];
  inv.dtau_star = fj.tau_rate.dual[1];
  return inv;
}

std::array<BracketValue, 3> canonical_brackets(const FrameJet& fj, IndicatrixKind kind) {
  const DualVecJet& x = director_jet(fj, kind);
  const Vec3j base = cross(x.real, x.dual);
  std::array<BracketValue, 3> row;
  for (IndicatrixKind vec : kAllKinds) {
    const Jet b = dot(base, director_jet(fj, vec).real);
    row[static_cast<int>(vec)] = {b[0], b[1]};
  }
  return row;
}

BracketTable bracket_table(const FrameJet& fj) {
  BracketTable t;
  for (IndicatrixKind kind : kAllKinds) t.entry[static_cast<int>(kind)] = canonical_brackets(fj, kind);
  return t;
}

const char* interpretation_name(BracketInterpretation interp) {
  switch (interp) {
    case BracketInterpretation::Printed: return "printed";
    case BracketInterpretation::Transposed: return "transposed";
    case BracketInterpretation::OwnBase: return "own_base";
    case BracketInterpretation::OwnBaseTransposed: return "own_base_transposed";
  }
  return "?";
}

BracketValue resolve_bracket(const BracketTable& table, IndicatrixKind surface, IndicatrixKind base,
                             IndicatrixKind vec, BracketInterpretation interp) {
  switch (interp) {
    case BracketInterpretation::Printed: return table.at(base, vec);
    case BracketInterpretation::Transposed: return table.at(vec, base);
    case BracketInterpretation::OwnBase: return table.at(surface, vec);
    case BracketInterpretation::OwnBaseTransposed: return table.at(surface, base);
  }
  return {};
}

FormulaBrackets formula_brackets(const BracketTable& table, IndicatrixKind kind, BracketInterpretation interp) {
  using K = IndicatrixKind;
  FormulaBrackets br;
  switch (kind) {
    case K::Tangent: br.first = resolve_bracket(table, kind, K::PrincipalNormal, K::Tangent, interp); break;
    case K::PrincipalNormal:
      br.first = resolve_bracket(table, kind, K::Tangent, K::PrincipalNormal, interp);
      br.second = resolve_bracket(table, kind, K::Binormal, K::PrincipalNormal, interp);
      break;
    case K::Binormal: br.first = resolve_bracket(table, kind, K::PrincipalNormal, K::Binormal, interp); break;
  }
  return br;
}

double formula_Y2_squared(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v) {
  const double k = inv.kappa, ks = inv.kappa_star, t = inv.tau, ts = inv.tau_star;
  switch (kind) {
    case IndicatrixKind::Tangent: {
      const double b = br.first.value;
      return k * k * (v - b) * (v - b) + ks * ks;
    }
    case IndicatrixKind::PrincipalNormal: {
      const double b1 = br.first.value, b2 = br.second.value;
      return k * k * b1 * b1 + (2 * k * ts - 2 * k * k * v) * b1 + ks * ks - (2 * t * ks + 2 * t * t * v) * b2 +
             2 * ks * t * v + t * t * b2 * b2 + ts * ts - 2 * k * ts * v + v * v * (k * k + t * t);
    }
    case IndicatrixKind::Binormal: {
      const double b = br.first.value;
      return t * t * (b - v) * (b - v) + ts * ts;
    }
  }
  return 0.0;
}

double formula_K(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v) {
  const double y2 = formula_Y2_squared(kind, inv, br, v);
  if (!(y2 > kSingularDenominator)) throw SingularDenominator("||Y2||^2 vanishes in the closed form");
  const double k = inv.kappa, ks = inv.kappa_star, t = inv.tau, ts = inv.tau_star;
  double numerator = 0.0;
  switch (kind) {
    case IndicatrixKind::Tangent: numerator = k * k * ks * ks; break;
    case IndicatrixKind::PrincipalNormal: numerator = (k * ks + t * ts) * (k * ks + t * ts); break;
    case IndicatrixKind::Binormal: numerator = t * t * ts * ts; break;
  }
  return -numerator / (y2 * y2);
}

FormulaH formula_H(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v) {
  const double y2 = formula_Y2_squared(kind, inv, br, v);
  if (!(y2 > kSingularDenominator)) throw SingularDenominator("||Y2||^2 vanishes in the closed form");
  const double k = inv.kappa, ks = inv.kappa_star, t = inv.tau, ts = inv.tau_star;
  const double dk = inv.dkappa, dks = inv.dkappa_star, dt = inv.dtau, dts = inv.dtau_star;

  FormulaH h;
  h.Y2_norm = std::sqrt(y2);
  switch (kind) {
    case IndicatrixKind::Tangent: {
      const double b = br.first.value, db = br.first.derivative;
      h.terms = {
          {"-kappa^2 tau b^2", -k * k * t * b * b},
          {"b kappa*' kappa", b * dks * k},
          {"2 v b kappa^2 tau", 2 * v * b * k * k * t},
          {"-b kappa* kappa'", -b * ks * dk},
          {"-kappa* kappa b'", -ks * k * db},
          {"-v kappa kappa*'", -v * k * dks},
          {"-v^2 kappa^2 tau", -v * v * k * k * t},
          {"-kappa*^2 tau", -ks * ks * t},
          {"v kappa* kappa'", v * ks * dk},
      };
      break;
    }
    case IndicatrixKind::PrincipalNormal: {
      const double b = br.first.value, db = br.first.derivative;
      h.terms = {
          {"(kappa*' kappa - kappa' kappa* + tau*' tau - tau' tau*)(b - v)",
           (dks * k - dk * ks + dts * t - dt * ts) * (b - v)},
          {"(kappa' tau - tau' kappa)(b^2 - 2 v b + v^2)", (dk * t - dt * k) * (b * b - 2 * v * b + v * v)},
          {"-b'(kappa kappa* + tau tau*)", -db * (k * ks + t * ts)},
          {"kappa*' tau*", dks * ts},
          {"-tau*' kappa*", -dts * ks},
      };
      break;
    }
    case IndicatrixKind::Binormal: {
      const double b = br.first.value, db = br.first.derivative;
      h.terms = {
          {"-tau^2 kappa b^2", -t * t * k * b * b},
          {"-b tau' tau*", -b * dt * ts},
          {"2 v b tau^2 kappa", 2 * v * b * t * t * k},
          {"b tau*' tau", b * dts * t},
          {"-tau tau* b'", -t * ts * db},
          {"-kappa tau*^2", -k * ts * ts},
          {"v tau' tau*", v * dt * ts},
          {"-v tau*' tau", -v * dts * t},
          {"-v^2 tau^2 kappa", -v * v * t * t * k},
      };
      break;
    }
  }
  double numerator = 0.0;
  for (const FormulaTerm& term : h.terms) numerator += term.value;
  h.value = numerator / (y2 * h.Y2_norm);
  return h;
}

double distribution_parameter(const DualFrenetFrame& frame, IndicatrixKind kind) {
  const DualScalar kr = dual_mul(frame.speed, frame.kappa);
  const DualScalar tr = dual_mul(frame.speed, frame.tau);
  double num = 0.0, den = 0.0;
  switch (kind) {
    case IndicatrixKind::Tangent:
      num = kr.dual;
      den = kr.real;
      break;
    case IndicatrixKind::PrincipalNormal:
      num = kr.real * kr.dual + tr.real * tr.dual;
      den = kr.real * kr.real + tr.real * tr.real;
      break;
    case IndicatrixKind::Binormal:
      num = tr.dual;
      den = tr.real;
      break;
  }
  if (!(std::fabs(den) > kSingularDenominator)) throw SingularDenominator("distribution parameter undefined");
  return num / den;
}

double striction_offset(const FrameJet& fj, IndicatrixKind kind) {
  const DualVecJet& x = director_jet(fj, kind);
  const Vec3d dbase = slice(derivative(cross(x.real, x.dual)), 0);
  const Vec3d dx = slice(x.real, 1);
  const double den = dot(dx, dx);
  if (!(den > kSingularDenominator)) throw SingularDenominator("cylindrical ruling: no striction point");
  return -dot(dbase, dx) / den;
}

}  // namespace rulekit
