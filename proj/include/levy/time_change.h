#pragma once

#include "levy/levy_models.h"
#include "levy/smile_asymptotics.h"
#include "levy/tail_expansion.h"

#include <optional>

namespace levy {

// Moment summary of the speed process Y (Eq. 3.5): E Y0, rho = lim t^{-2}
// E T_t^2 and gamma = lim (1/t)[E Y_t - E Y0].
struct TimeChangeMoments {
  double ey0 = 1.0;
  double rho = 1.0;
  double gamma = 0.0;
  // gamma < 0 violates Eq. 3.5(iii) literally; accepted as in the paper's CIR
  // discussion (y0 above theta).
  bool gamma_negative = false;
};

// Moments with validation (ey0 > 0, rho > 0, finite gamma).
TimeChangeMoments make_moments(double ey0, double rho, double gamma);

// CIR speed process dY = kappa(theta - Y)dt + sigma sqrt(Y) dW (Eq. 3.9).
struct CIRParams {
  double kappa = 0.0;
  double theta = 0.0;
  double sigma = 0.0;
  std::optional<double> y0;  // deterministic start; unset means stationary start
};

// Enforces the paper's inequality kappa theta / sigma^2 > 1/2.
// Deterministic start: (y0, y0^2, kappa(theta - y0)); stationary start:
// (theta, theta^2 + theta sigma^2/(2 kappa), 0).
TimeChangeMoments cir_moments(const CIRParams& p);

// Theorem 3.2: order 1 t ey0 nu[x, inf); order 2 adds
// (t^2/2)(rho d2(x) + gamma nu[x, inf)); clamped to [0, 1].
TailApprox tc_tail_approx(const LevyTriplet& model, const TimeChangeMoments& m, double x, double t,
                          int order, const D2Options& opts = {});

// Corollary 3.4: order 1 t ey0 a0(k); order 2 adds t^2 (rho a1(k) + gamma a0(k)).
// Negative order-2 results are clamped to 0 with a flag.
CallExpansion tc_call_expansion(const CallCoefficients& c, const TimeChangeMoments& m, double t,
                                int order);
CallExpansion tc_call_expansion(const LevyTriplet& model, const TimeChangeMoments& m, double k,
                                double t, int order, const D2Options& opts = {});

// Eq. 3.12: V0 unchanged, V1 with E(Y0) a0(k) inside the logarithm.
ImpliedVarApprox tc_implied_var_terms(const LevyTriplet& model, const TimeChangeMoments& m,
                                      double k, double t, const quad::Options& opts = {});

}  // namespace levy
