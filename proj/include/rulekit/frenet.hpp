#pragma once

#include "rulekit/curve_spec.hpp"
#include "rulekit/dual.hpp"

namespace rulekit {

struct FrenetTolerances {
  double speed_min = 1e-12;
  double kappa_min = 1e-8;
  double inflection_flag = 1e-4;  // frames with |kappa| below this are flagged, not rejected
};

/// Dual Frenet apparatus at one parameter value. kappa and tau are taken with
/// respect to the dual arc length (d/ds_hat = (1/speed) d/ds).
struct DualFrenetFrame {
  double s = 0.0;
  DualScalar speed;
  DualVec3 T, N, B;
  DualScalar kappa, tau;
  double tau_formula_gap = 0.0;  // |<dN/ds_hat, B> - (-<dB/ds_hat, N>)|
  bool near_inflection = false;
};

/// The frame with s-derivatives attached. Every quantity is a jet in s, so
/// T'(s) is derivative(T) and so on. kappa_rate = speed * kappa and
/// tau_rate = speed * tau are the curvatures per unit of s: T' = kappa_rate N.
///
/// Valid jet orders: T up to 4, N and B up to 3, kappa_rate up to 3, tau_rate up to 2.
struct FrameJet {
  double s = 0.0;
  DualJet speed;
  DualVecJet T, N, B;
  DualJet kappa, tau;
  DualJet kappa_rate, tau_rate;
  double tau_formula_gap = 0.0;
  bool near_inflection = false;

  DualFrenetFrame frame() const;
};

FrameJet frame_jet_from_curve(const DualVecJet& alpha, double s, const FrenetTolerances& tol = {});
FrameJet frame_jet_at(const DualCurveSpec& spec, double s, const FrenetTolerances& tol = {});
DualFrenetFrame frame_at(const DualCurveSpec& spec, double s, const FrenetTolerances& tol = {});

struct FrenetResiduals {
  double tangent = 0.0;   // dT/ds_hat - kappa N
  double normal = 0.0;    // dN/ds_hat + kappa T - tau B
  double binormal = 0.0;  // dB/ds_hat + tau N
  double max() const;
};

FrenetResiduals frenet_residuals(const FrameJet& fj);

/// T x N = B, N x B = T, B x T = N and their moment (dual) counterparts
/// T* = N* x B + N x B*, N* = B* x T + B x T*, B* = T* x N + T x N*.
struct MomentResiduals {
  std::array<double, 3> real{};
  std::array<double, 3> dual{};
  double max() const;
};

MomentResiduals moment_identities(const DualFrenetFrame& f);

/// Max deviation of the Gram matrix of {T, N, B} from the identity, as dual numbers.
double orthonormality_residual(const DualFrenetFrame& f);

}  // namespace rulekit
