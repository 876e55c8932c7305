#pragma once

#include "levy/levy_models.h"
#include "levy/pricing_oracle.h"

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace levy {

// Symmetric Y-stable limit of X_t / t^{1/Y} for CGMY with 1 < Y < 2
// (Prop. 4.1): zeta(u) = exp(-|c u|^Y), c = (2 C Gamma(-Y) |cos(Y pi / 2)|)^{1/Y}.
class StableLimit {
 public:
  // alpha in (1, 2) gives a finite E(Z+). alpha in (0, 1) is accepted (the
  // driftless case of the Remark after Prop. 4.1) with E(Z+) = +inf.
  StableLimit(double alpha, double scale);

  double alpha() const { return alpha_; }
  double scale() const { return scale_; }
  // E(Z+) by numerical inversion of zeta (grid + algebraic tail series).
  double ez_plus() const { return ez_plus_; }
  // Closed form c Gamma(1 - 1/alpha) / pi, used as an independent check.
  double ez_plus_closed_form() const;
  // Limit characteristic function zeta(u).
  double zeta(double u) const;
  // Stable density: grid interpolation inside, asymptotic series outside.
  // Throws DomainError for alpha < 1.
  double density(double z) const;

 private:
  double alpha_;
  double scale_;
  double ez_plus_;
  // Standardised (c = 1) density on [0, s_max] with spacing h; immutable.
  std::shared_ptr<const std::vector<double>> grid_;
  double s_max_ = 0.0;
  double h_ = 0.0;

  double standard_tail_density(double s) const;
};

// Scale constant c of Prop. 4.1; depends only on (C, Y).
double stable_scale(double C, double Y);

// Limit of a CGMY model (tag CGMY). `driftless` admits 0 < Y < 1.
StableLimit stable_limit(const LevyTriplet& model, bool driftless = false);

// exp(t psi*(u / t^{1/Y})) with psi* the share-measure exponent; converges to
// zeta(u) as t -> 0.
std::complex<double> char_exponent_convergence(const LevyTriplet& model, double u, double t);

// Prop. 4.4: t^{1/Y} E*(Z+) per unit spot.
double atm_price_limit(const StableLimit& limit, double t);
double atm_price_limit(const LevyTriplet& model, double t);

// Prop. 4.5: sqrt(2 pi) E*(Z+) t^{1/Y - 1/2}.
double atm_implied_vol_limit(const StableLimit& limit, double t);
double atm_implied_vol_limit(const LevyTriplet& model, double t);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct TailBoundResult {
  CheckStatus status = CheckStatus::Skipped;
  double probability = 0.0;  // P*(X_t >= x)
  double ratio = 0.0;        // probability / (x^{-Y} t)
  double bound = 0.0;        // configured K
  std::string reason;
};

// Lemma 4.3: P*(X_t >= x) <= K x^{-Y} t for symmetric CGMY (G = M). The
// measured ratio is reported; precondition failures are skipped with reason.
TailBoundResult tail_bound_check(const LevyTriplet& model, double t, double x, double K,
                                 const OracleOptions& opts = {});

// Monte Carlo estimate of E(Z+) for the symmetric stable law (alpha, scale)
// via the Chambers-Mallows-Stuck sampler.
struct MonteCarloMean {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};
MonteCarloMean simulate_stable_positive_part(double alpha, double scale, std::size_t samples,
                                             std::uint64_t seed);

}  // namespace levy
