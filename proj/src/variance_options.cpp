#include "levy/variance_options.h"

#include "levy/errors.h"

#include <cmath>

namespace levy {
namespace {

void require_inputs(double K, double t) {
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("variance strike K must be positive");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("maturity t must be positive");
}

}  // namespace

double qv_density(const LevyTriplet& model, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("qv_density requires y > 0");
  const double r = std::sqrt(y);
  const LevyDensity& nu = model.nu();
  return (nu(r) + nu(-r)) / (2.0 * r);
}

quad::Result variance_call_leading(const LevyTriplet& model, double K, double t,
                                   const quad::Options& opts) {
  require_inputs(K, t);
  const LevyDensity& nu = model.nu();
  const double r = std::sqrt(K);
  // (x - r)(x + r) keeps precision near the strike.
  auto right = [&](double x) { return (x - r) * (x + r) * nu(x); };
  auto left = [&](double x) { return (x - r) * (x + r) * nu(-x); };
  const quad::Result sum = quad::integrate_upper(right, r, opts) + quad::integrate_upper(left, r, opts);
  return quad::require_converged(sum, "variance call (x-form)").scaled(t);
}

quad::Result variance_call_leading_yform(const LevyTriplet& model, double K, double t,
                                         const quad::Options& opts) {
  require_inputs(K, t);
  auto f = [&](double y) { return (y - K) * qv_density(model, y); };
  return quad::require_converged(quad::integrate_upper(f, K, opts), "variance call (y-form)")
      .scaled(t);
}

quad::Result variance_call_second_order(const QVSecondOrderHook& hook, double K, double t,
                                        const quad::Options& opts) {
  require_inputs(K, t);
  if (!hook.q_tail || !hook.d2q) throw DomainError("second-order hook needs q_tail and d2q");
  auto f = [&](double u) { return t * hook.q_tail(u) + 0.5 * t * t * hook.d2q(u); };
  return quad::require_converged(quad::integrate_upper(f, K, opts), "variance call (second order)");
}

}  // namespace levy
