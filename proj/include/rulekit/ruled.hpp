#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/frenet.hpp"

namespace rulekit {

/// Which dual Frenet vector is taken as the director of the ruled surface.
enum class IndicatrixKind { Tangent = 0, PrincipalNormal = 1, Binormal = 2 };

inline constexpr std::array<IndicatrixKind, 3> kAllKinds = {IndicatrixKind::Tangent, IndicatrixKind::PrincipalNormal,
                                                            IndicatrixKind::Binormal};

const char* kind_name(IndicatrixKind kind);    // "tangent", "principal_normal", "binormal"
char kind_letter(IndicatrixKind kind);         // 't', 'n', 'b'
std::optional<IndicatrixKind> kind_from_letter(std::string_view letter);

/// Dual director X^ of the chosen kind and its first two s-derivatives.
struct Director {
  DualVec3 value, d1, d2;
};

const DualVecJet& director_jet(const FrameJet& fj, IndicatrixKind kind);
Director director(const FrameJet& fj, IndicatrixKind kind);

inline constexpr double kSingularCross = 1e-10;

/// Local data of phi(s, v) = x(s) x x*(s) + v x(s), the ruled surface whose
/// rulings are the lines of the director under the Study map.
struct SurfaceJet {
  double s = 0.0, v = 0.0;
  Vec3d position;
  Vec3d phi_s, phi_v;
  Vec3d phi_ss, phi_sv, phi_vv;
  Vec3d unit_normal;  // (phi_s x phi_v) / ||phi_s x phi_v||
  Vec3d normal_s, normal_v;
  double cross_norm = 0.0;
};

/// Throws SingularPoint when ||phi_s x phi_v|| <= 1e-10.
SurfaceJet surface_jet(const FrameJet& fj, IndicatrixKind kind, double v);
SurfaceJet surface_jet(const DualCurveSpec& spec, IndicatrixKind kind, double s, double v);

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double L = 0, M = 0, Nf = 0;
  double W2 = 0;  // EG - F^2
};

FundamentalForms fundamental_forms(const SurfaceJet& sj);

struct OracleCurvatures {
  double K = 0.0;
  double H_half = 0.0;   // (EN + GL - 2FM) / (2 W2)
  double H_trace = 0.0;  // trace of the shape operator, 2 * H_half
};

OracleCurvatures curvatures_oracle(const FundamentalForms& ff);

/// E1 along the ruling, E2 the unit component of phi_s orthogonal to it.
struct GramSchmidtFrame {
  Vec3d E1, E2;
  double Y2_norm = 0.0;
  Vec3d surface_normal;  // E1 x E2
};

GramSchmidtFrame gram_schmidt(const SurfaceJet& sj);

struct ShapeOperator2x2 {
  double s11 = 0, s12 = 0, s21 = 0, s22 = 0;
  double det() const { return s11 * s22 - s12 * s21; }
  double trace() const { return s11 + s22; }
};

/// How S(E2) = D_{E2} n is formed, n = E1 x E2.
enum class ShapeDerivative {
  /// True directional derivative along E2: (n_s - <phi_s, E1> n_v) / ||Y2||.
  Directional,
  /// (1 / ||Y2||) dn/ds, ignoring that E2 is not the s-coordinate direction.
  SOnly,
};

ShapeOperator2x2 shape_operator(const SurfaceJet& sj, const GramSchmidtFrame& gs,
                                ShapeDerivative mode = ShapeDerivative::Directional);

/// kappa, kappa*, tau, tau* per unit s (speed-scaled) and their s-derivatives.
/// These satisfy T' = kappa N, N' = -kappa T + tau B, B' = -tau N in s.
struct CurvatureInvariants {
  double kappa = 0, kappa_star = 0, tau = 0, tau_star = 0;
  double dkappa = 0, dkappa_star = 0, dtau = 0, dtau_star = 0;
};

CurvatureInvariants rate_invariants(const FrameJet& fj);

struct BracketValue {
  double value = 0.0;
  double derivative = 0.0;
};

/// value[Y][Z] = <c_Y, Z> with c_Y = Y x Y*, the foot-point base curve of the
/// surface of kind Y, and Z the real frame vector of kind Z.
struct BracketTable {
  std::array<std::array<BracketValue, 3>, 3> entry{};
  const BracketValue& at(IndicatrixKind base, IndicatrixKind vec) const {
    return entry[static_cast<int>(base)][static_cast<int>(vec)];
  }
};

/// <c, T>, <c, N>, <c, B> with s-derivatives for the base curve of one kind.
std::array<BracketValue, 3> canonical_brackets(const FrameJet& fj, IndicatrixKind kind);
BracketTable bracket_table(const FrameJet& fj);

/// How a bracket symbol <beta_Y, Z> in the closed forms is read on the surface of kind X.
enum class BracketInterpretation {
  Printed,            // <c_Y, Z>
  Transposed,         // <c_Z, Y>
  OwnBase,            // <c_X, Z>
  OwnBaseTransposed,  // <c_X, Y>
};

inline constexpr std::array<BracketInterpretation, 4> kAllInterpretations = {
    BracketInterpretation::Printed, BracketInterpretation::Transposed, BracketInterpretation::OwnBase,
    BracketInterpretation::OwnBaseTransposed};

const char* interpretation_name(BracketInterpretation interp);

BracketValue resolve_bracket(const BracketTable& table, IndicatrixKind surface, IndicatrixKind base,
                             IndicatrixKind vec, BracketInterpretation interp);

/// Bracket scalars appearing in the closed forms for one kind:
///   Tangent:          first = <beta_N, T>
///   PrincipalNormal:  first = <beta_T, N>, second = <beta_B, N>
///   Binormal:         first = <beta_N, B>
struct FormulaBrackets {
  BracketValue first, second;
};

FormulaBrackets formula_brackets(const BracketTable& table, IndicatrixKind kind, BracketInterpretation interp);

inline constexpr double kSingularDenominator = 1e-12;

/// ||Y2||^2 as printed for each kind.
double formula_Y2_squared(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v);

/// Closed-form Gaussian curvature. Throws SingularDenominator when ||Y2||^2 <= 1e-12.
double formula_K(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v);

struct FormulaTerm {
  const char* label;
  double value;  // contribution to the numerator
};

struct FormulaH {
  double value = 0.0;    // numerator / ||Y2||^3
  double Y2_norm = 0.0;  // from the printed expression
  std::vector<FormulaTerm> terms;
};

/// Closed-form mean curvature (trace convention), with the numerator split into its printed terms.
FormulaH formula_H(IndicatrixKind kind, const CurvatureInvariants& inv, const FormulaBrackets& br, double v);

/// delta_T = kappa*/kappa, delta_N = (kappa kappa* + tau tau*)/(kappa^2 + tau^2),
/// delta_B = tau*/tau, in speed-scaled quantities. Throws SingularDenominator.
double distribution_parameter(const DualFrenetFrame& frame, IndicatrixKind kind);

/// Ruling parameter v of the striction point: -<c', x'> / <x', x'>.
double striction_offset(const FrameJet& fj, IndicatrixKind kind);

}  // namespace rulekit
