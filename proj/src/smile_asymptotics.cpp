#include "levy/smile_asymptotics.h"

#include "levy/errors.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace levy {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_otm(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("log-moneyness k must be positive");
}

void require_maturity(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("maturity t must be positive");
}

// Evaluates `f`, prefixing quadrature failures with the measure's name.
template <class F>
auto labelled(const char* measure, F&& f) {
  try {
    return f();
  } catch (const QuadratureError& e) {
    throw QuadratureError(std::string("under ") + measure + ": " + e.what(), e.partial_estimate(),
                          e.error_estimate());
  }
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

// Standard normal density.
double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

}  // namespace

quad::Result a0(const LevyTriplet& model, double k, const quad::Options& opts) {
  require_otm(k);
  const LevyDensity& nu = model.nu();
  const double ek = std::exp(k);
  // expm1 keeps precision near the strike; far from it the weighted density
  // avoids overflow of e^x against an underflowing nu(x).
  auto f = [&](double x) {
    return x - k < 1.0 ? ek * std::expm1(x - k) * nu(x) : nu.weighted(x, 1.0) - ek * nu(x);
  };
  return quad::require_converged(quad::integrate_upper(f, k, opts), "a0");
}

quad::Result a1(const LevyTriplet& model, const LevyTriplet& share_model, double k,
                const D2Options& opts) {
  require_otm(k);
  const TailExpansion p = labelled("P", [&] { return d2(model, k, opts); });
  const TailExpansion s = labelled("P*", [&] { return d2(share_model, k, opts); });
  const double ek = std::exp(k);
  return {0.5 * (s.d2 - ek * p.d2), 0.5 * (s.quad_error + ek * p.quad_error),
          0, true};
}

quad::Result a1(const LevyTriplet& model, double k, const D2Options& opts) {
  const LevyTriplet star =
      labelled("P*", [&] { return share_measure_transform(model, opts.quad); });
  return a1(model, star, k, opts);
}

CallCoefficients call_coefficients(const LevyTriplet& model, const LevyTriplet& share_model,
                                   double k, const D2Options& opts) {
  require_otm(k);
  CallCoefficients c;
  c.k = k;
  const quad::Result lead = a0(model, k, opts.quad);
  c.a0 = lead.value;
  c.a0_error = lead.error;
  c.tail = labelled("P", [&] { return d2(model, k, opts); });
  c.share_tail = labelled("P*", [&] { return d2(share_model, k, opts); });
  const double ek = std::exp(k);
  c.a1 = 0.5 * (c.share_tail.d2 - ek * c.tail.d2);
  c.a1_error = 0.5 * (c.share_tail.quad_error + ek * c.tail.quad_error);
  return c;
}

CallExpansion call_price_expansion(const CallCoefficients& c, double t, int order) {
  require_maturity(t);
  if (order != 1 && order != 2) throw DomainError("expansion order must be 1 or 2");
  CallExpansion e;
  e.k = c.k;
  e.t = t;
  e.a0 = c.a0;
  e.a1 = c.a1;
  e.raw_price = t * c.a0 + (order == 2 ? t * t * c.a1 : 0.0);
  e.price_per_spot = std::max(e.raw_price, 0.0);
  e.clamped = e.raw_price < 0.0;
  e.quad_error = t * c.a0_error + (order == 2 ? t * t * c.a1_error : 0.0);
  return e;
}

CallExpansion call_price_expansion(const LevyTriplet& model, double k, double t, int order,
                                   const D2Options& opts) {
  require_otm(k);
  require_maturity(t);
  if (order == 1) {
    CallCoefficients c;
    c.k = k;
    const quad::Result lead = a0(model, k, opts.quad);
    c.a0 = lead.value;
    c.a0_error = lead.error;
    return call_price_expansion(c, t, 1);
  }
  const LevyTriplet star =
      labelled("P*", [&] { return share_measure_transform(model, opts.quad); });
  return call_price_expansion(call_coefficients(model, star, k, opts), t, order);
}

ImpliedVarApprox implied_var_terms_from_a0(double a0_value, double k, double t) {
  require_otm(k);
  if (!(t > 0.0 && t < 1.0)) throw DomainError("implied-variance expansion requires 0 < t < 1");
  if (!(a0_value > 0.0)) throw DomainError("leading coefficient a0 must be positive");
  const double L = std::log(1.0 / t);
  ImpliedVarApprox v;
  v.t = t;
  v.k = k;
  v.V0 = 0.5 * k * k / L;
  v.V1 = std::log(4.0 * std::sqrt(M_PI) * a0_value * std::exp(-0.5 * k) / k * std::pow(L, 1.5)) / L;
  v.sigma_tilde_1 = std::sqrt(v.V0 / t);
  v.sigma_tilde_2_defined = 1.0 + v.V1 > 0.0;
  v.sigma_tilde_2 = v.sigma_tilde_2_defined ? std::sqrt(v.V0 * (1.0 + v.V1) / t) : kNaN;
  return v;
}

ImpliedVarApprox implied_var_terms(const LevyTriplet& model, double k, double t,
                                   const quad::Options& opts) {
  return implied_var_terms_from_a0(a0(model, k, opts).value, k, t);
}

double bs_price(double vol, double k, double t) {
  require_maturity(t);
  if (!(vol >= 0.0)) throw DomainError("volatility must be non-negative");
  if (vol == 0.0) return std::max(1.0 - std::exp(k), 0.0);
  const double s = vol * std::sqrt(t);
  const double d1 = -k / s + 0.5 * s;
  const double d2 = d1 - s;
  return normal_cdf(d1) - std::exp(k) * normal_cdf(d2);
}

namespace {

// Call time value C - (1 - e^k)_+; for k < 0 it equals the put price, which
// is evaluated directly to avoid cancellation against the intrinsic value.
double bs_time_value(double vol, double k, double t) {
  if (k >= 0.0) return bs_price(vol, k, t);
  const double s = vol * std::sqrt(t);
  const double d1 = -k / s + 0.5 * s;
  const double d2 = d1 - s;
  return std::exp(k) * normal_cdf(-d2) - normal_cdf(-d1);
}

}  // namespace

double bs_implied_vol(double price, double k, double t) {
  require_maturity(t);
  const double intrinsic = std::max(1.0 - std::exp(k), 0.0);
  if (!(price > intrinsic && price < 1.0)) {
    throw DomainError("call price outside the no-arbitrage band ((1 - e^k)_+, 1)");
  }
  // Time value in log space: robust for deep out-of-the-money quotes. A time
  // value that underflows counts as -inf.
  const double target = std::log(price - intrinsic);
  auto objective = [&](double v) {
    const double tv = bs_time_value(v, k, t);
    return tv > 0.0 ? std::log(tv) - target : -std::numeric_limits<double>::infinity();
  };
  double lo = 1e-8, hi = 10.0;
  if (objective(lo) > 0.0) {
    throw DomainError("call price below the resolution of the implied-volatility bracket");
  }
  if (objective(hi) < 0.0) throw DomainError("call price above the implied-volatility bracket");

  // Bisection on log-volatility to a relative bracket of 1e-6.
  while (hi / lo > 1.0 + 1e-6) {
    const double mid = std::sqrt(lo * hi);
    (objective(mid) < 0.0 ? lo : hi) = mid;
  }
  // Newton refinement on the log time value, safeguarded to the bracket.
  double v = std::sqrt(lo * hi);
  for (int i = 0; i < 50; ++i) {
    const double f = objective(v);
    if (f == 0.0) break;
    (f < 0.0 ? lo : hi) = v;
    const double tv = bs_time_value(v, k, t);
    const double s = v * std::sqrt(t);
    const double vega = normal_pdf(-k / s + 0.5 * s) * std::sqrt(t);
    double next = v - f * tv / vega;
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - v) <= 1e-15 * v;
    v = next;
    if (done) break;
  }
  return v;
}

}  // namespace levy
