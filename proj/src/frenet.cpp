#include "rulekit/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rulekit {

namespace {

std::string at(double s) { return " at s = " + std::to_string(s); }

}  // namespace

DualFrenetFrame FrameJet::frame() const {
  DualFrenetFrame f;
  f.s = s;
  f.speed = slice(speed, 0);
  f.T = slice(T, 0);
  f.N = slice(N, 0);
  f.B = slice(B, 0);
  f.kappa = slice(kappa, 0);
  f.tau = slice(tau, 0);
  f.tau_formula_gap = tau_formula_gap;
  f.near_inflection = near_inflection;
  return f;
}

FrameJet frame_jet_from_curve(const DualVecJet& alpha, double s, const FrenetTolerances& tol) {
  FrameJet fj;
  fj.s = s;
  const DualVecJet velocity = derivative(alpha);
  try {
    fj.speed = dual_norm(velocity, tol.speed_min);
  } catch (const PureDualVector&) {
    throw PureDualSpeed("curve is not regular (pure-dual speed)" + at(s));
  }
  fj.T = dual_vec_div(velocity, fj.speed, tol.speed_min);

  const DualVecJet dT = derivative(fj.T);
  try {
    fj.kappa_rate = dual_norm(dT, 0.0);
  } catch (const PureDualVector&) {
    throw PureDualCurvature("curvature is pure dual" + at(s));
  }
  fj.kappa = dual_div(fj.kappa_rate, fj.speed, tol.speed_min);
  if (!(std::fabs(fj.kappa.real.value()) > tol.kappa_min)) {
    throw PureDualCurvature("curvature is pure dual (|kappa| = " + std::to_string(fj.kappa.real.value()) + ")" + at(s));
  }
  fj.near_inflection = std::fabs(fj.kappa.real.value()) < tol.inflection_flag;

  fj.N = dual_vec_div(dT, fj.kappa_rate, 0.0);
  fj.B = dual_cross(fj.T, fj.N);

  fj.tau_rate = dual_dot(derivative(fj.N), fj.B);
  fj.tau = dual_div(fj.tau_rate, fj.speed, tol.speed_min);
  const DualJet tau_alt = -dual_dot(derivative(fj.B), fj.N);
  fj.tau_formula_gap = max_abs(slice(fj.tau_rate - tau_alt, 0)) / std::fabs(fj.speed.real.value());
  return fj;
}

FrameJet frame_jet_at(const DualCurveSpec& spec, double s, const FrenetTolerances& tol) {
  return frame_jet_from_curve(spec.eval_jet(s), s, tol);
}

DualFrenetFrame frame_at(const DualCurveSpec& spec, double s, const FrenetTolerances& tol) {
  return frame_jet_at(spec, s, tol).frame();
}

double FrenetResiduals::max() const { return std::max({tangent, normal, binormal}); }

FrenetResiduals frenet_residuals(const FrameJet& fj) {
  const DualScalar speed = slice(fj.speed, 0);
  const DualScalar kappa = slice(fj.kappa, 0);
  const DualScalar tau = slice(fj.tau, 0);
  const DualVec3 T = slice(fj.T, 0), N = slice(fj.N, 0), B = slice(fj.B, 0);
  const DualVec3 dT = dual_vec_div(slice(fj.T, 1), speed);
  const DualVec3 dN = dual_vec_div(slice(fj.N, 1), speed);
  const DualVec3 dB = dual_vec_div(slice(fj.B, 1), speed);

  FrenetResiduals r;
  r.tangent = max_abs(dT - dual_scale(kappa, N));
  r.normal = max_abs(dN + dual_scale(kappa, T) - dual_scale(tau, B));
  r.binormal = max_abs(dB + dual_scale(tau, N));
  return r;
}

double MomentResiduals::max() const {
  return std::max(*std::max_element(real.begin(), real.end()), *std::max_element(dual.begin(), dual.end()));
}

MomentResiduals moment_identities(const DualFrenetFrame& f) {
  const Vec3d &T = f.T.real, &N = f.N.real, &B = f.B.real;
  const Vec3d &Ts = f.T.dual, &Ns = f.N.dual, &Bs = f.B.dual;
  MomentResiduals r;
  r.real = {max_abs(cross(T, N) - B), max_abs(cross(N, B) - T), max_abs(cross(B, T) - N)};
  r.dual = {max_abs(Ts - (cross(Ns, B) + cross(N, Bs))), max_abs(Ns - (cross(Bs, T) + cross(B, Ts))),
            max_abs(Bs - (cross(Ts, N) + cross(T, Ns)))};
  return r;
}

double orthonormality_residual(const DualFrenetFrame& f) {
  const std::array<const DualVec3*, 3> frame{&f.T, &f.N, &f.B};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      DualScalar g = dual_dot(*frame[i], *frame[j]);
      if (i == j) g.real -= 1.0;
      worst = std::max(worst, max_abs(g));
    }
  }
  return worst;
}

}  // namespace rulekit
