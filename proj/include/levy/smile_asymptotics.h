#pragma once

#include "levy/levy_models.h"
#include "levy/tail_expansion.h"

namespace levy {

// a0(k) = int_k^inf (e^x - e^k) nu(dx), k > 0 (Eq. 2.12).
quad::Result a0(const LevyTriplet& model, double k, const quad::Options& opts = {});

// a1(k) = [d2*(k) - e^k d2(k)] / 2 with d2* computed on the share-measure
// triplet (Eq. 2.12). The second overload reuses a precomputed share model.
quad::Result a1(const LevyTriplet& model, double k, const D2Options& opts = {});
quad::Result a1(const LevyTriplet& model, const LevyTriplet& share_model, double k,
                const D2Options& opts = {});

// Coefficients of the per-spot call expansion t a0 + t^2 a1 at one strike.
struct CallCoefficients {
  double k = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  double a0_error = 0.0;
  double a1_error = 0.0;
  TailExpansion tail;        // d2 and nu-tail under P
  TailExpansion share_tail;  // d2* and nu*-tail under P*
};

CallCoefficients call_coefficients(const LevyTriplet& model, const LevyTriplet& share_model,
                                   double k, const D2Options& opts = {});

struct CallExpansion {
  double k = 0.0;
  double t = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  double price_per_spot = 0.0;  // clamped at 0
  double raw_price = 0.0;
  bool clamped = false;
  double quad_error = 0.0;
};

// order 1: t a0; order 2: t a0 + t^2 a1, clamped at 0 with a flag.
CallExpansion call_price_expansion(const LevyTriplet& model, double k, double t, int order,
                                   const D2Options& opts = {});
CallExpansion call_price_expansion(const CallCoefficients& c, double t, int order);

struct ImpliedVarApprox {
  double t = 0.0;
  double k = 0.0;
  double V0 = 0.0;
  double V1 = 0.0;
  double sigma_tilde_1 = 0.0;
  double sigma_tilde_2 = 0.0;    // NaN when 1 + V1 <= 0
  bool sigma_tilde_2_defined = true;
};

// Theorem 2.3 terms and the Section 6 approximants.
ImpliedVarApprox implied_var_terms(const LevyTriplet& model, double k, double t,
                                   const quad::Options& opts = {});
// Same from a given leading coefficient `a0_value` (the time-changed variant
// passes E(Y0) a0).
ImpliedVarApprox implied_var_terms_from_a0(double a0_value, double k, double t);

// Zero-rate Black-Scholes call per unit spot, log-moneyness k.
double bs_price(double vol, double k, double t);
// Inverts bs_price on [1e-8, 10]; throws DomainError outside the
// no-arbitrage band ((1 - e^k)_+, 1) or below the representable range.
double bs_implied_vol(double price_per_spot, double k, double t);

}  // namespace levy
