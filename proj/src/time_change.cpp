#include "levy/time_change.h"

#include "levy/errors.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace levy {
namespace {

void require_order(int order) {
  if (order != 1 && order != 2) throw DomainError("expansion order must be 1 or 2");
}

void require_maturity(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("maturity t must be positive");
}

}  // namespace

TimeChangeMoments make_moments(double ey0, double rho, double gamma) {
  if (!(ey0 > 0.0) || !std::isfinite(ey0)) throw DomainError("E Y0 must be positive");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
  if (!std::isfinite(gamma)) throw DomainError("gamma must be finite");
  return {ey0, rho, gamma, gamma < 0.0};
}

TimeChangeMoments cir_moments(const CIRParams& p) {
  if (!(p.kappa > 0.0 && p.theta > 0.0 && p.sigma > 0.0)) {
    throw DomainError("parameter constraint violated: CIR kappa, theta, sigma must be positive");
  }
  const double ratio = p.kappa * p.theta / (p.sigma * p.sigma);
  if (!(ratio > 0.5)) {
    std::ostringstream os;
    os << "parameter constraint violated: CIR requires kappa theta / sigma^2 > 1/2 (got " << ratio
       << ")";
    throw DomainError(os.str());
  }
  if (p.y0) {
    const double y0 = *p.y0;
    if (!(y0 > 0.0) || !std::isfinite(y0)) {
      throw DomainError("parameter constraint violated: CIR y0 must be positive");
    }
    return make_moments(y0, y0 * y0, p.kappa * (p.theta - y0));
  }
  // Stationary law Gamma(shape 2 kappa theta / sigma^2, scale sigma^2 / (2 kappa)).
  return make_moments(p.theta, p.theta * p.theta + p.theta * p.sigma * p.sigma / (2.0 * p.kappa),
                      0.0);
}

TailApprox tc_tail_approx(const LevyTriplet& model, const TimeChangeMoments& m, double x, double t,
                          int order, const D2Options& opts) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("tail threshold x must be positive");
  require_maturity(t);
  require_order(order);
  if (order == 1) {
    const quad::Result tail = nu_tail(model, x, opts.quad);
    return clamp_probability(t * m.ey0 * tail.value, t * m.ey0 * tail.error);
  }
  const TailExpansion e = d2(model, x, opts);
  const double raw = t * m.ey0 * e.nu_tail + 0.5 * t * t * (m.rho * e.d2 + m.gamma * e.nu_tail);
  const double err = t * m.ey0 * e.quad_error +
                     0.5 * t * t * (m.rho + std::abs(m.gamma)) * e.quad_error;
  return clamp_probability(raw, err);
}

CallExpansion tc_call_expansion(const CallCoefficients& c, const TimeChangeMoments& m, double t,
                                int order) {
  require_maturity(t);
  require_order(order);
  CallExpansion e;
  e.k = c.k;
  e.t = t;
  e.a0 = c.a0;
  e.a1 = c.a1;
  e.raw_price = t * m.ey0 * c.a0 + (order == 2 ? t * t * (m.rho * c.a1 + m.gamma * c.a0) : 0.0);
  e.price_per_spot = std::max(e.raw_price, 0.0);
  e.clamped = e.raw_price < 0.0;
  e.quad_error = t * m.ey0 * c.a0_error +
                 (order == 2 ? t * t * (m.rho * c.a1_error + std::abs(m.gamma) * c.a0_error) : 0.0);
  return e;
}

CallExpansion tc_call_expansion(const LevyTriplet& model, const TimeChangeMoments& m, double k,
                                double t, int order, const D2Options& opts) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("log-moneyness k must be positive");
  require_maturity(t);
  require_order(order);
  if (order == 1) {
    CallCoefficients c;
    c.k = k;
    const quad::Result lead = a0(model, k, opts.quad);
    c.a0 = lead.value;
    c.a0_error = lead.error;
    return tc_call_expansion(c, m, t, 1);
  }
  const LevyTriplet star = share_measure_transform(model, opts.quad);
  return tc_call_expansion(call_coefficients(model, star, k, opts), m, t, order);
}

ImpliedVarApprox tc_implied_var_terms(const LevyTriplet& model, const TimeChangeMoments& m,
                                      double k, double t, const quad::Options& opts) {
  return implied_var_terms_from_a0(m.ey0 * a0(model, k, opts).value, k, t);
}

}  // namespace levy
