#include "levy/tail_expansion.h"

#include "levy/errors.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace levy {
namespace {

void require_positive_threshold(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("tail threshold y must be positive");
}

quad::Result checked(const quad::Result& r, const char* form, int term) {
  return quad::require_converged(r, std::string(form) + " term " + std::to_string(term));
}

// Inner options: tighter than the outer so the outer error estimate dominates.
quad::Options inner_options(const quad::Options& outer) {
  quad::Options o = outer;
  o.abs_tol = outer.abs_tol * 1e-3;
  o.rel_tol = std::min(outer.rel_tol * 1e-2, 1e-11);
  return o;
}

// Terms common to both forms: -sigma2 nu'(y), 2 drift nu(y), -nu[y,inf)^2.
struct CommonTerms {
  double diffusion, drift, squared_tail, tail, tail_error;
};

CommonTerms common_terms(const LevyTriplet& model, double drift, double y,
                         const quad::Options& opts) {
  const LevyDensity& nu = model.nu();
  const quad::Result tail = nu.right_tail(y, opts);
  return {-model.sigma2() * nu.derivative(y), 2.0 * drift * nu(y), -tail.value * tail.value,
          tail.value, 2.0 * tail.value * tail.error};
}

// 2 int_0^{y/2} nu(x) nu(y - x, y) dx + nu(y/2, y)^2: the symmetric split of
// int_0^y int_{y-x}^y nu(u) nu(x) du dx (Remark after Theorem 2.1).
quad::Result symmetric_split(const LevyDensity& nu, double y, const quad::Options& opts) {
  const quad::Options inner = inner_options(opts);
  auto f = [&](double x) { return nu(x) * nu.mass(y - x, y, inner).value; };
  quad::Result r = quad::integrate_from_zero(f, 0.5 * y, opts).scaled(2.0);
  const quad::Result half = nu.mass(0.5 * y, y, inner);
  r.value += half.value * half.value;
  r.error += 2.0 * half.value * half.error;
  return r;
}

// int_{-inf}^{-a} nu(x) nu(y, y - x) dx for a >= 0 (a = 0 uses the
// singular-aware integrator near the origin).
quad::Result negative_jump_cross(const LevyDensity& nu, double y, double a,
                                 const quad::Options& opts) {
  const quad::Options inner = inner_options(opts);
  auto f = [&](double x) { return nu(x) * nu.mass(y, y - x, inner).value; };
  if (a > 0.0) return quad::integrate_lower(f, -a, opts);
  // Split at -y/2: singular-aware on [-y/2, 0), semi-infinite below.
  auto g = [&](double s) { return f(-s); };
  return quad::integrate_from_zero(g, 0.5 * y, opts) + quad::integrate_lower(f, -0.5 * y, opts);
}

}  // namespace

quad::Result nu_tail(const LevyTriplet& model, double y, const quad::Options& opts) {
  require_positive_threshold(y);
  return quad::require_converged(model.nu().right_tail(y, opts), "nu_tail");
}

TailExpansion d2_bv(const LevyTriplet& model, double y, const D2Options& opts) {
  require_positive_threshold(y);
  if (model.variation() != VariationClass::Finite) {
    throw DomainError("d2_bv requires a finite-variation model (Eq. 2.5)");
  }
  const LevyDensity& nu = model.nu();
  const CommonTerms c = common_terms(model, model.b0(), y, opts.quad);
  // int_0^y int_{y-x}^y nu(u) nu(x) du dx via the symmetric split.
  const quad::Result split = checked(symmetric_split(nu, y, opts.quad), "d2_bv", 4);
  // int_y^inf int_{-inf}^{y-x} nu(u) nu(x) du dx = int_{-inf}^0 nu(u) nu[y, y-u] du.
  const quad::Result cross = checked(negative_jump_cross(nu, y, 0.0, opts.quad), "d2_bv", 5);

  TailExpansion out;
  out.y = y;
  out.nu_tail = c.tail;
  out.terms = {c.diffusion, c.drift, c.squared_tail, split.value, -2.0 * cross.value, 0.0, 0.0};
  out.d2 = c.diffusion + c.drift + c.squared_tail + split.value - 2.0 * cross.value;
  out.quad_error = c.tail_error + split.error + 2.0 * cross.error;
  return out;
}

TailExpansion d2_general(const LevyTriplet& model, double y, const D2Options& opts) {
  require_positive_threshold(y);
  const LevyDensity& nu = model.nu();
  const quad::Options& q = opts.quad;
  const quad::Options inner = inner_options(q);
  const CommonTerms c = common_terms(model, model.b(), y, q);
  const double nu_y = nu(y);

  // nu(y/2, y)^2.
  const quad::Result half = checked(nu.mass(0.5 * y, y, inner), "d2_general", 4);
  const double t4 = half.value * half.value;

  // 2 int_{-inf}^{-y/2} int_{y-x}^y nu(u) nu(x) du dx = -2 int nu(x) nu[y, y-x] dx.
  const quad::Result cross = checked(negative_jump_cross(nu, y, 0.5 * y, q), "d2_general", 5);
  const double t5 = -2.0 * cross.value;

  // -2 nu(y) int_{y/2<|x|<1} x nu(x) dx.
  quad::Result moment;
  if (0.5 * y < 1.0 || opts.oriented_large_y_region) {
    auto xnu = [&](double x) { return x * nu(x); };
    moment = quad::integrate(xnu, 0.5 * y, 1.0, q) + quad::integrate(xnu, -1.0, -0.5 * y, q);
    checked(moment, "d2_general", 6);
  }
  const double t6 = -2.0 * nu_y * moment.value;

  // 2 int_{-y/2}^{y/2} nu(x) int_{y-x}^y (nu(u) - nu(y)) du dx. The inner
  // integrand is smooth on [y/2, 3y/2] and of size O(x^2) overall.
  auto inner_diff = [&](double x) {
    auto g = [&](double u) { return nu(u) - nu_y; };
    return quad::integrate(g, y - x, y, inner).value;
  };
  auto pos = [&](double x) { return nu(x) * inner_diff(x); };
  auto neg = [&](double x) { return nu(-x) * inner_diff(-x); };
  const quad::Result centre = checked(
      quad::integrate_from_zero(pos, 0.5 * y, q) + quad::integrate_from_zero(neg, 0.5 * y, q),
      "d2_general", 7);
  const double t7 = 2.0 * centre.value;

  TailExpansion out;
  out.y = y;
  out.nu_tail = c.tail;
  out.terms = {c.diffusion, c.drift, c.squared_tail, t4, t5, t6, t7};
  out.d2 = c.diffusion + c.drift + c.squared_tail + t4 + t5 + t6 + t7;
  out.quad_error = c.tail_error + 2.0 * half.value * half.error + 2.0 * cross.error +
                   2.0 * nu_y * moment.error + 2.0 * centre.error;
  return out;
}

TailExpansion d2(const LevyTriplet& model, double y, const D2Options& opts) {
  return model.variation() == VariationClass::Finite ? d2_bv(model, y, opts)
                                                     : d2_general(model, y, opts);
}

TailApprox clamp_probability(double raw, double quad_error) {
  TailApprox a;
  a.raw = raw;
  a.value = std::clamp(raw, 0.0, 1.0);
  a.clamped = a.value != raw;
  a.quad_error = quad_error;
  return a;
}

TailApprox tail_probability_approx(const LevyTriplet& model, double y, double t, int order,
                                   const D2Options& opts) {
  require_positive_threshold(y);
  if (!(t > 0.0)) throw DomainError("maturity t must be positive");
  if (order != 1 && order != 2) throw DomainError("expansion order must be 1 or 2");
  if (order == 1) {
    const quad::Result tail = nu_tail(model, y, opts.quad);
    return clamp_probability(t * tail.value, t * tail.error);
  }
  const TailExpansion e = d2(model, y, opts);
  return clamp_probability(t * e.nu_tail + 0.5 * t * t * e.d2, t * e.quad_error);
}

}  // namespace levy
