#include "levy/pricing_oracle.h"

#include "levy/errors.h"
#include "levy/smile_asymptotics.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace levy {
namespace {

const cplx kI{0.0, 1.0};

// Phase frequencies below this are treated as non-oscillatory.
constexpr double kMinOmega = 1e-3;

void require_maturity(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("maturity t must be positive");
}

void require_in_strip(const LevyTriplet& model, double p, const char* what) {
  const ExponentialStrip s = model.nu().strip();
  if (!s.contains(p)) {
    std::ostringstream os;
    os << what << " " << p << " outside the exponential strip (" << s.lower << ", " << s.upper
       << ")";
    throw DomainError(os.str());
  }
}

double oscillation(double phase_rate) {
  const double w = std::abs(phase_rate);
  return w < kMinOmega ? 0.0 : w;
}

OracleQuote finish(const quad::Result& r, double scale, OracleMethod method, double alpha) {
  OracleQuote q;
  q.price_per_spot = scale * r.value;
  q.est_error = std::abs(scale) * r.error;
  q.method = method;
  q.damping = alpha;
  q.evaluations = r.evaluations;
  if (!r.converged) {
    throw QuadratureError("Fourier inversion did not converge (damping " + std::to_string(alpha) +
                              ", " + std::to_string(r.evaluations) + " evaluations)",
                          q.price_per_spot, q.est_error);
  }
  return q;
}

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::string to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::FourierDamped: return "fourier-damped";
    case OracleMethod::DistributionInversion: return "distribution-inversion";
    case OracleMethod::FourierFft: return "fourier-fft";
  }
  return "unknown";
}

double default_call_damping(const LevyTriplet& model) {
  if (auto ts = tempered_stable_params(model)) return std::min(1.0, 0.5 * (ts->M - 1.0));
  return 0.75;
}

OracleQuote ift_damped(const LevyTriplet& model, double k, double t, double alpha,
                       const OracleOptions& opts) {
  require_maturity(t);
  if (alpha == 0.0 || alpha == -1.0) throw DomainError("damping must avoid the poles 0 and -1");
  require_in_strip(model, alpha + 1.0, "damping alpha + 1 =");
  const CharExponent& psi = model.require_exponent();
  auto f = [&](double u) {
    const cplx v(u, -(alpha + 1.0));
    const cplx num = std::exp(t * psi(v) - kI * u * k);
    return (num / ((alpha + kI * u) * (alpha + 1.0 + kI * u))).real();
  };
  const double omega = oscillation(k - t * psi.linear_phase());
  const quad::Result r = quad::integrate_oscillatory(f, 0.0, omega, opts.quad, opts.max_panels);
  return finish(r, std::exp(-alpha * k) / M_PI, OracleMethod::FourierDamped, alpha);
}

OracleQuote ift_call(const LevyTriplet& model, double k, double t, const OracleOptions& opts) {
  const double alpha = opts.damping.value_or(default_call_damping(model));
  OracleQuote q = ift_damped(model, k, t, alpha, opts);
  if (alpha < 0.0) q.price_per_spot += 1.0;
  if (alpha < -1.0) q.price_per_spot -= std::exp(k);
  const double intrinsic = std::max(1.0 - std::exp(k), 0.0);
  q.in_band = q.price_per_spot > intrinsic && q.price_per_spot < 1.0;
  return q;
}

OracleQuote ift_put(const LevyTriplet& model, double k, double t, const OracleOptions& opts) {
  double alpha = opts.damping.value_or(-1.75);
  if (!opts.damping) {
    alpha = std::max(alpha, model.nu().strip().lower - 1.0 + 0.5);
    alpha = std::min(alpha, -1.25);
  }
  if (!(alpha < -1.0)) throw DomainError("put pricing requires damping alpha < -1");
  OracleQuote q = ift_damped(model, k, t, alpha, opts);
  const double intrinsic = std::max(std::exp(k) - 1.0, 0.0);
  q.in_band = q.price_per_spot > intrinsic && q.price_per_spot < std::exp(k);
  return q;
}

OracleQuote ift_tail(const LevyTriplet& model, double x, double t, const OracleOptions& opts) {
  require_maturity(t);
  const ExponentialStrip s = model.nu().strip();
  double alpha = 0.0;
  if (opts.damping) {
    alpha = *opts.damping;
  } else {
    // Damp towards the side that makes e^{-alpha x} small.
    alpha = x >= 0.0 ? std::min(1.0, 0.5 * s.upper) : std::max(-1.0, 0.5 * s.lower);
  }
  if (alpha == 0.0) throw DomainError("tail inversion requires non-zero damping");
  require_in_strip(model, alpha, "damping alpha =");
  const CharExponent& psi = model.require_exponent();
  if (!opts.damping) {
    // The integrand near u = 0 has size e^{t psi(-i alpha) - alpha x} / |alpha|.
    // When that is large (long maturities) the result would be lost to
    // cancellation, so shrink alpha to minimise it.
    auto log_size = [&](double a) { return t * psi(cplx(0.0, -a)).real() - a * x - std::log(std::abs(a)); };
    if (log_size(alpha) + std::log(std::abs(alpha)) > 5.0) {
      double best = alpha;
      for (double a = alpha; std::abs(a) > 1e-6; a *= 0.8) {
        if (log_size(a) < log_size(best)) best = a;
      }
      alpha = best;
    }
  }
  auto f = [&](double u) {
    const cplx v(u, -alpha);
    return (std::exp(t * psi(v) - kI * u * x) / (alpha + kI * u)).real();
  };
  const double omega = oscillation(x - t * psi.linear_phase());
  const quad::Result r = quad::integrate_oscillatory(f, 0.0, omega, opts.quad, opts.max_panels);
  OracleQuote q = finish(r, std::exp(-alpha * x) / M_PI, OracleMethod::DistributionInversion, alpha);
  if (alpha < 0.0) q.price_per_spot += 1.0;
  q.in_band = q.price_per_spot >= -q.est_error && q.price_per_spot <= 1.0 + q.est_error;
  return q;
}

ImpliedVolQuote exact_implied_vol(const LevyTriplet& model, double k, double t,
                                  const OracleOptions& opts) {
  ImpliedVolQuote out;
  out.price = ift_call(model, k, t, opts);
  const double intrinsic = std::max(1.0 - std::exp(k), 0.0);
  const double time_value = out.price.price_per_spot - intrinsic;
  if (!(time_value > 10.0 * out.price.est_error)) {
    out.flagged = true;
    out.reason = "price below inversion resolution";
  }
  try {
    out.vol = bs_implied_vol(out.price.price_per_spot, k, t);
  } catch (const DomainError& e) {
    out.vol = std::numeric_limits<double>::quiet_NaN();
    out.flagged = true;
    out.reason = e.what();
  }
  return out;
}

std::vector<GridQuote> fft_call_grid(const LevyTriplet& model, double t, const FftOptions& opts) {
  require_maturity(t);
  const int n = opts.n;
  if (n < 16 || (n & (n - 1)) != 0) throw DomainError("FFT size must be a power of two >= 16");
  const double alpha = opts.damping.value_or(default_call_damping(model));
  if (!(alpha > 0.0)) throw DomainError("FFT mode requires positive damping");
  require_in_strip(model, alpha + 1.0, "damping alpha + 1 =");
  const CharExponent& psi = model.require_exponent();
  const double eta = opts.eta;
  const double lambda = 2.0 * M_PI / (n * eta);
  const double b = 0.5 * n * lambda;

  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (int j = 0; j < n; ++j) {
    const double u = j * eta;
    const cplx v(u, -(alpha + 1.0));
    const cplx psi_term = std::exp(t * psi(v)) / ((alpha + kI * u) * (alpha + 1.0 + kI * u));
    // Simpson weights (1, 4, 2, 4, ..., 2, 4) / 3 with the j = 0 endpoint.
    const double w = (j == 0 ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0)) * eta / 3.0;
    const cplx x = std::exp(kI * b * u) * psi_term * w;
    buf[j][0] = x.real();
    buf[j][1] = x.imag();
  }
  fftw_execute(plan);
  std::vector<GridQuote> out(n);
  for (int m = 0; m < n; ++m) {
    const double k = -b + m * lambda;
    out[m] = {k, std::exp(-alpha * k) / M_PI * buf[m][0]};
  }
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);
  return out;
}

}  // namespace levy
