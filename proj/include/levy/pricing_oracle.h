#pragma once

#include "levy/levy_models.h"
#include "levy/quadrature.h"

#include <optional>
#include <string>
#include <vector>

namespace levy {

enum class OracleMethod { FourierDamped, DistributionInversion, FourierFft };

std::string to_string(OracleMethod method);

struct OracleQuote {
  double price_per_spot = 0.0;  // or probability, for distribution inversion
  double est_error = 0.0;
  OracleMethod method = OracleMethod::FourierDamped;
  double damping = 0.0;
  bool in_band = true;  // inside the no-arbitrage band (or [0, 1] for probabilities)
  int evaluations = 0;
};

struct OracleOptions {
  // Tolerances of the oscillatory Fourier quadrature.
  quad::Options quad{1e-15, 1e-11, 200};
  // Damping alpha; defaults per default_call_damping / default_tail_damping.
  std::optional<double> damping;
  int max_panels = 20000;
};

// min(1, (M - 1)/2) for tempered-stable models, 0.75 otherwise.
double default_call_damping(const LevyTriplet& model);

// Carr-Madan damped transform
//   V(alpha) = e^{-alpha k}/pi int_0^inf Re[e^{-iuk} phi(u - i(alpha+1))
//                                          / ((alpha + iu)(alpha + 1 + iu))] du,
// phi = exp(t psi). V is the call for alpha > 0, call - 1 for -1 < alpha < 0
// and the put for alpha < -1. Requires alpha + 1 inside the strip.
OracleQuote ift_damped(const LevyTriplet& model, double k, double t, double alpha,
                       const OracleOptions& opts = {});

// Call price per unit spot at log-moneyness k (any sign).
OracleQuote ift_call(const LevyTriplet& model, double k, double t, const OracleOptions& opts = {});

// Put price per unit spot via damping alpha < -1 (default -1.75, clipped to
// the strip).
OracleQuote ift_put(const LevyTriplet& model, double k, double t, const OracleOptions& opts = {});

// P(X_t >= x) by inversion of the damped distribution function:
//   e^{-alpha x}/pi int_0^inf Re[e^{-iux} phi(u - i alpha)/(alpha + iu)] du
// equals P(X_t >= x) for alpha > 0 and P(X_t >= x) - 1 for alpha < 0.
OracleQuote ift_tail(const LevyTriplet& model, double x, double t, const OracleOptions& opts = {});

struct ImpliedVolQuote {
  double vol = 0.0;  // NaN when flagged and not invertible
  OracleQuote price;
  bool flagged = false;  // price below the inversion resolution
  std::string reason;
};

// Black-Scholes implied volatility of ift_call.
ImpliedVolQuote exact_implied_vol(const LevyTriplet& model, double k, double t,
                                  const OracleOptions& opts = {});

struct FftOptions {
  int n = 4096;           // grid size (power of two)
  double eta = 0.25;      // frequency spacing
  std::optional<double> damping;
};

struct GridQuote {
  double k;
  double price_per_spot;
};

// Carr-Madan FFT across the log-strike grid k_j = -b + j lambda, lambda =
// 2 pi / (n eta), with Simpson weights.
std::vector<GridQuote> fft_call_grid(const LevyTriplet& model, double t,
                                     const FftOptions& opts = {});

}  // namespace levy
