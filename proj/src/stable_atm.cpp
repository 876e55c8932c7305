#include "levy/stable_atm.h"

#include "levy/errors.h"
#include "levy/quadrature.h"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace levy {
namespace {

constexpr int kGridIntervals = 1200;  // even, for Simpson's rule

// Right end of the grid in standardised units: far enough that the
// asymptotic series is accurate to well below double precision.
double grid_end(double alpha) { return alpha > 1.8 ? 24.0 : 14.0; }

// Standardised symmetric stable density by inversion of exp(-|u|^alpha):
// g(s) = (1/pi) int_0^inf cos(u s) exp(-u^alpha) du.
double standard_density(double alpha, double s) {
  const double u_max = std::pow(46.0, 1.0 / alpha);  // exp(-46) ~ 1e-20
  quad::Options o{2e-12, 1e-10, 4000};
  auto f = [&](double u) { return std::cos(u * s) * std::exp(-std::pow(u, alpha)); };
  return quad::require_converged(quad::integrate(f, 0.0, u_max, o), "stable density").value /
         M_PI;
}

// Coefficients of g(s) ~ sum_k a_k s^{-alpha k - 1}; truncated at the
// smallest term at s.
template <class F>
double asymptotic_series(double alpha, double s, F&& term_map) {
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const double lg = std::lgamma(alpha * k + 1.0) - std::lgamma(k + 1.0);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double a = sign * std::exp(lg) * std::sin(0.5 * k * M_PI * alpha) / M_PI;
    const double term = term_map(a, k);
    const double mag = std::exp(lg) * std::pow(s, -alpha * k);
    if (mag > previous) break;
    previous = mag;
    sum += term;
    if (mag < 1e-18) break;
  }
  return sum;
}

}  // namespace

double stable_scale(double C, double Y) {
  if (!(C > 0.0) || !(Y > 0.0 && Y < 2.0) || Y == 1.0) {
    throw DomainError("stable scale requires C > 0 and Y in (0, 1) or (1, 2)");
  }
  // Gamma(-Y) < 0 on (0, 1) while cos(Y pi / 2) > 0; the paper's form is
  // written for (1, 2), where both factors are read with their magnitudes.
  return std::pow(2.0 * C * std::abs(boost::math::tgamma(-Y) * std::cos(0.5 * Y * M_PI)), 1.0 / Y);
}

StableLimit::StableLimit(double alpha, double scale) : alpha_(alpha), scale_(scale) {
  if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0) {
    throw DomainError("stable index must lie in (0, 1) or (1, 2)");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("stable scale must be positive");
  if (alpha < 1.0) {
    // Driftless finite-variation case: E(Z+) diverges and the density is not
    // tabulated (the oscillatory inversion does not converge for alpha < 1).
    ez_plus_ = std::numeric_limits<double>::infinity();
    return;
  }
  s_max_ = grid_end(alpha);
  h_ = s_max_ / kGridIntervals;
  auto grid = std::make_shared<std::vector<double>>(kGridIntervals + 1);
  for (int i = 0; i <= kGridIntervals; ++i) (*grid)[i] = standard_density(alpha, i * h_);
  grid_ = grid;

  // Simpson on [0, s_max] of s g(s), then the series integrated term by term:
  // int_{s_max}^inf s^{-alpha k} ds = s_max^{1 - alpha k} / (alpha k - 1).
  double body = 0.0;
  for (int i = 0; i <= kGridIntervals; ++i) {
    const double w = (i == 0 || i == kGridIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    body += w * (i * h_) * (*grid)[i];
  }
  body *= h_ / 3.0;
  const double s0 = s_max_;
  const double tail = asymptotic_series(alpha, s0, [&](double a, int k) {
    return a * std::pow(s0, 1.0 - alpha * k) / (alpha * k - 1.0);
  });
  ez_plus_ = scale * (body + tail);
}

double StableLimit::ez_plus_closed_form() const {
  if (alpha_ < 1.0) return std::numeric_limits<double>::infinity();
  return scale_ * boost::math::tgamma(1.0 - 1.0 / alpha_) / M_PI;
}

double StableLimit::zeta(double u) const { return std::exp(-std::pow(std::abs(scale_ * u), alpha_)); }

double StableLimit::standard_tail_density(double s) const {
  return asymptotic_series(alpha_, s, [&](double a, int k) { return a * std::pow(s, -alpha_ * k - 1.0); });
}

double StableLimit::density(double z) const {
  if (!grid_) throw DomainError("stable density is only available for 1 < alpha < 2");
  const double s = std::abs(z) / scale_;
  if (s >= s_max_) return standard_tail_density(s) / scale_;
  const double pos = s / h_;
  const int i = std::min(static_cast<int>(pos), kGridIntervals - 1);
  const double w = pos - i;
  const std::vector<double>& g = *grid_;
  return ((1.0 - w) * g[i] + w * g[i + 1]) / scale_;
}

StableLimit stable_limit(const LevyTriplet& model, bool driftless) {
  const auto ts = tempered_stable_params(model);
  if (!ts || model.tag() != ModelTag::CGMY) throw DomainError("stable limit requires a CGMY model");
  const bool finite_variation_ok = driftless && ts->Y > 0.0 && ts->Y < 1.0;
  if (!(ts->Y > 1.0 && ts->Y < 2.0) && !finite_variation_ok) {
    throw DomainError(
        "stable limit requires 1 < Y < 2 (0 < Y < 1 only for driftless processes)");
  }
  return StableLimit(ts->Y, stable_scale(ts->C, ts->Y));
}

std::complex<double> char_exponent_convergence(const LevyTriplet& model, double u, double t) {
  if (!(t > 0.0)) throw DomainError("maturity t must be positive");
  const auto ts = tempered_stable_params(model);
  if (!ts) throw DomainError("char_exponent_convergence requires a CGMY model");
  const LevyTriplet star = share_measure_transform(model);
  return std::exp(t * star.psi(cplx(u * std::pow(t, -1.0 / ts->Y), 0.0)));
}

double atm_price_limit(const StableLimit& limit, double t) {
  if (!(t > 0.0)) throw DomainError("maturity t must be positive");
  if (!(limit.alpha() > 1.0)) throw DomainError("ATM limit requires 1 < Y < 2");
  return std::pow(t, 1.0 / limit.alpha()) * limit.ez_plus();
}

double atm_price_limit(const LevyTriplet& model, double t) {
  // The scale depends only on (C, Y), which the share measure leaves unchanged.
  return atm_price_limit(stable_limit(share_measure_transform(model)), t);
}

double atm_implied_vol_limit(const StableLimit& limit, double t) {
  if (!(t > 0.0)) throw DomainError("maturity t must be positive");
  if (!(limit.alpha() > 1.0)) throw DomainError("ATM limit requires 1 < Y < 2");
  return std::sqrt(2.0 * M_PI) * limit.ez_plus() * std::pow(t, 1.0 / limit.alpha() - 0.5);
}

double atm_implied_vol_limit(const LevyTriplet& model, double t) {
  return atm_implied_vol_limit(stable_limit(share_measure_transform(model)), t);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

TailBoundResult tail_bound_check(const LevyTriplet& model, double t, double x, double K,
                                 const OracleOptions& opts) {
  TailBoundResult r;
  r.bound = K;
  const auto ts = tempered_stable_params(model);
  if (!ts || model.tag() != ModelTag::CGMY) {
    r.reason = "requires a CGMY model";
    return r;
  }
  if (ts->G != ts->M) {
    r.reason = "requires a symmetric CGMY model (G = M)";
    return r;
  }
  if (!(ts->M > 1.0) || !(ts->Y > 1.0 && ts->Y < 2.0)) {
    r.reason = "requires M > 1 and 1 < Y < 2";
    return r;
  }
  if (!(t > 0.0 && x > 0.0)) {
    r.reason = "requires t > 0 and x > 0";
    return r;
  }
  // Drift condition t (b + int_{|z| <= x/4} z (e^z - 1) nu(dz)) < x/4.
  const LevyDensity& nu = model.nu();
  auto g = [&](double z) { return z * std::expm1(z) * nu(z); };
  const double a = 0.25 * x;
  const quad::Options qo{1e-13, 1e-10, 400};
  const double compensator = quad::integrate_from_zero(g, a, qo).value +
                             quad::integrate_from_zero([&](double z) { return g(-z); }, a, qo).value;
  const double lhs = t * (model.b() + compensator);
  if (!(lhs < a)) {
    std::ostringstream os;
    os << "drift condition violated: t(b + int z(e^z-1) nu) = " << lhs << " >= x/4 = " << a;
    r.reason = os.str();
    return r;
  }
  const LevyTriplet star = share_measure_transform(model);
  const OracleQuote q = ift_tail(star, x, t, opts);
  r.probability = q.price_per_spot;
  if (!q.in_band) {
    r.reason = "oracle probability outside [0, 1]";
    return r;
  }
  r.ratio = r.probability / (std::pow(x, -ts->Y) * t);
  r.status = r.ratio <= K ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

MonteCarloMean simulate_stable_positive_part(double alpha, double scale, std::size_t samples,
                                             std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
    throw DomainError("stable index must lie in (0, 1) or (1, 2]");
  }
  if (samples < 2) throw DomainError("need at least two samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-0.5 * M_PI, 0.5 * M_PI);
  std::exponential_distribution<double> expo(1.0);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double v = angle(rng);
    const double w = expo(rng);
    // Chambers-Mallows-Stuck, symmetric case: characteristic function exp(-|u|^alpha).
    const double z = std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
                     std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
    // Symmetry gives E(Z+) = E|Z| / 2; |Z| / 2 halves the sample variance of
    // max(Z, 0). For alpha < 2 the variance is infinite, so the standard error
    // is a self-normalised diagnostic rather than a CLT quantity.
    const double zp = 0.5 * std::abs(scale * z);
    sum += zp;
    sum_sq += zp * zp;
  }
  const double n = static_cast<double>(samples);
  MonteCarloMean m;
  m.samples = samples;
  m.mean = sum / n;
  m.std_error = std::sqrt(std::max(sum_sq / n - m.mean * m.mean, 0.0) / (n - 1.0));
  return m;
}

}  // namespace levy
