#include "levy/levy_models.h"

#include "levy/errors.h"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace levy {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
const cplx kI{0.0, 1.0};

void require(bool ok, const std::string& constraint) {
  if (!ok) throw DomainError("parameter constraint violated: " + constraint);
}

// Density wrapper for e^{theta x} nu(x) over a family without its own tilt.
class TiltedDensity final : public LevyDensity {
 public:
  TiltedDensity(DensityPtr base, double theta) : base_(std::move(base)), theta_(theta) {}

  double log_value(double x) const override { return base_->log_value(x) + theta_ * x; }
  double derivative(double x) const override {
    return std::exp(theta_ * x) * (base_->derivative(x) + theta_ * (*base_)(x));
  }
  VariationClass variation() const override { return base_->variation(); }
  ModelTag tag() const override { return base_->tag(); }
  ExponentialStrip strip() const override {
    const ExponentialStrip s = base_->strip();
    return {s.lower - theta_, s.upper - theta_};
  }
  std::optional<JumpExponent> jump_exponent() const override {
    auto base = base_->jump_exponent();
    if (!base || base->centering != Centering::Uncompensated) return std::nullopt;
    // int (e^{iux} - 1) e^{theta x} nu(dx) = J(u - i theta) - J(-i theta).
    auto J = base->J;
    const double theta = theta_;
    const cplx shift = J(cplx(0.0, -theta));
    return JumpExponent{[J, theta, shift](cplx u) { return J(u - kI * theta) - shift; },
                        Centering::Uncompensated, base->linear_phase};
  }
  DensityPtr tilted(double theta) const override {
    return std::make_shared<TiltedDensity>(base_, theta_ + theta);
  }

 private:
  DensityPtr base_;
  double theta_;
};

// log K_1(z) for z > 0 without underflow.
double log_bessel_k1(double z) {
  if (z < 600.0) return std::log(std::cyl_bessel_k(1.0, z));
  // Hankel expansion: K_1(z) ~ sqrt(pi/2z) e^{-z} (1 + 3/(8z) - 15/(128 z^2)).
  return 0.5 * std::log(M_PI / (2.0 * z)) - z + std::log1p(3.0 / (8.0 * z) - 15.0 / (128.0 * z * z));
}

// K_0(z)/K_1(z) for z > 0.
double bessel_k_ratio(double z) {
  if (z < 600.0) return std::cyl_bessel_k(0.0, z) / std::cyl_bessel_k(1.0, z);
  const double k0 = 1.0 - 1.0 / (8.0 * z) + 9.0 / (128.0 * z * z);
  const double k1 = 1.0 + 3.0 / (8.0 * z) - 15.0 / (128.0 * z * z);
  return k0 / k1;
}

// Asymptotic expansion of Gamma(a, z) for large z.
double upper_gamma_asymptotic(double a, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double next = term * (a - k) / z;
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::exp((a - 1.0) * std::log(z) - z) * sum;
}

// int_{0 < |x| <= 1} f(x) nu(x) dx, split at the origin.
quad::Result integrate_small_jumps(const std::function<double(double)>& f,
                                   const LevyDensity& nu, const quad::Options& opts) {
  auto pos = [&](double x) { return f(x) * nu(x); };
  auto neg = [&](double x) { return f(-x) * nu(-x); };
  return quad::integrate_from_zero(pos, 1.0, opts) + quad::integrate_from_zero(neg, 1.0, opts);
}

// int_{|x| > 1} f(x) nu(x) dx with f given in log-weighted form g(x, log nu(x)).
quad::Result integrate_large_jumps(const std::function<double(double)>& f,
                                   const quad::Options& opts) {
  return quad::integrate_upper(f, 1.0, opts) + quad::integrate_lower(f, -1.0, opts);
}

}  // namespace

std::string to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::VG: return "VG";
    case ModelTag::CGMY: return "CGMY";
    case ModelTag::Merton: return "Merton";
    case ModelTag::Kou: return "Kou";
    case ModelTag::NIG: return "NIG";
    case ModelTag::Custom: return "custom";
  }
  return "unknown";
}

double upper_incomplete_gamma(double a, double z) {
  if (!(z > 0.0)) throw DomainError("upper_incomplete_gamma: z must be positive");
  if (z > 40.0) return upper_gamma_asymptotic(a, z);
  if (a > 0.0) return boost::math::tgamma(a, z);
  if (a == 0.0) return boost::math::expint(1, z);
  if (a == std::floor(a)) throw DomainError("upper_incomplete_gamma: a is a negative integer");
  // Gamma(a, z) = (Gamma(a + 1, z) - z^a e^{-z}) / a.
  return (upper_incomplete_gamma(a + 1.0, z) - std::exp(a * std::log(z) - z)) / a;
}

// ---------------------------------------------------------------- LevyDensity

DensityPtr LevyDensity::tilted(double theta) const {
  return std::make_shared<TiltedDensity>(shared_from_this(), theta);
}

double LevyDensity::operator()(double x) const {
  if (std::abs(x) < quad::kSingularCutoff) {
    throw DomainError("Levy density evaluated inside the singular cutoff |x| < 1e-12");
  }
  return std::exp(log_value(x));
}

double LevyDensity::weighted(double x, double p) const {
  if (std::abs(x) < quad::kSingularCutoff) {
    throw DomainError("Levy density evaluated inside the singular cutoff |x| < 1e-12");
  }
  return std::exp(log_value(x) + p * x);
}

quad::Result LevyDensity::right_tail(double z, const quad::Options& opts) const {
  if (!(z > 0.0)) throw DomainError("right_tail: threshold must be positive");
  if (auto v = right_tail_closed(z)) return {*v, 0.0, 1, true};
  return quad::integrate_upper([this](double x) { return (*this)(x); }, z, opts);
}

quad::Result LevyDensity::left_tail(double z, const quad::Options& opts) const {
  if (!(z > 0.0)) throw DomainError("left_tail: threshold must be positive");
  if (auto v = left_tail_closed(z)) return {*v, 0.0, 1, true};
  return quad::integrate_lower([this](double x) { return (*this)(x); }, -z, opts);
}

quad::Result LevyDensity::mass(double a, double b, const quad::Options& opts) const {
  if (a > b) throw DomainError("mass: empty interval");
  if (a == b) return {};
  if (!(a > 0.0 || b < 0.0)) throw DomainError("mass: interval must not contain the origin");
  auto f = [this](double x) { return (*this)(x); };
  // Short intervals are integrated directly: differencing tails would cancel.
  const bool short_interval = (b - a) < 0.25 * std::min(std::abs(a), std::abs(b));
  if (!short_interval && has_closed_tails()) {
    if (a > 0.0) return {*right_tail_closed(a) - *right_tail_closed(b), 0.0, 2, true};
    return {*left_tail_closed(-b) - *left_tail_closed(-a), 0.0, 2, true};
  }
  return quad::integrate(f, a, b, opts);
}

// ------------------------------------------------------ TemperedStableDensity

TemperedStableDensity::TemperedStableDensity(double C, double G, double M, double Y, ModelTag tag)
    : C_(C), G_(G), M_(M), Y_(Y), tag_(tag) {
  require(C > 0.0, "C > 0");
  require(G > 0.0, "G > 0");
  require(M > 0.0, "M > 0");
  require(Y >= 0.0 && Y < 2.0, "0 <= Y < 2");
  require(Y != 1.0, "Y != 1");
}

double TemperedStableDensity::log_value(double x) const {
  const double ax = std::abs(x);
  const double expo = x > 0.0 ? -M_ * x : G_ * x;
  return std::log(C_) + expo - (1.0 + Y_) * std::log(ax);
}

double TemperedStableDensity::derivative(double x) const {
  const double slope = x > 0.0 ? -M_ : G_;
  return (*this)(x) * (slope - (1.0 + Y_) / x);
}

VariationClass TemperedStableDensity::variation() const {
  return Y_ < 1.0 ? VariationClass::Finite : VariationClass::Infinite;
}

std::optional<double> TemperedStableDensity::right_tail_closed(double z) const {
  if (Y_ == 0.0) return C_ * boost::math::expint(1, M_ * z);
  return C_ * std::pow(M_, Y_) * upper_incomplete_gamma(-Y_, M_ * z);
}

std::optional<double> TemperedStableDensity::left_tail_closed(double z) const {
  if (Y_ == 0.0) return C_ * boost::math::expint(1, G_ * z);
  return C_ * std::pow(G_, Y_) * upper_incomplete_gamma(-Y_, G_ * z);
}

std::optional<JumpExponent> TemperedStableDensity::jump_exponent() const {
  const double C = C_, G = G_, M = M_, Y = Y_;
  if (Y == 0.0) {
    return JumpExponent{[C, G, M](cplx u) {
                          return -C * (std::log(1.0 - kI * u / M) + std::log(1.0 + kI * u / G));
                        },
                        Centering::Uncompensated};
  }
  const double cg = C * std::tgamma(-Y);
  const double mY = std::pow(M, Y), gY = std::pow(G, Y);
  if (Y < 1.0) {
    return JumpExponent{[cg, G, M, Y, mY, gY](cplx u) {
                          return cg * (std::pow(M - kI * u, Y) - mY + std::pow(G + kI * u, Y) - gY);
                        },
                        Centering::Uncompensated};
  }
  const double comp = cg * Y * (std::pow(M, Y - 1.0) - std::pow(G, Y - 1.0));
  return JumpExponent{[cg, G, M, Y, mY, gY, comp](cplx u) {
                        return cg * (std::pow(M - kI * u, Y) - mY + std::pow(G + kI * u, Y) - gY) +
                               kI * u * comp;
                      },
                      Centering::Compensated, comp};
}

DensityPtr TemperedStableDensity::tilted(double theta) const {
  require(G_ + theta > 0.0 && M_ - theta > 0.0, "tilt inside the exponential strip (-G, M)");
  return std::make_shared<TemperedStableDensity>(C_, G_ + theta, M_ - theta, Y_, tag_);
}

// --------------------------------------------------- DoubleExponentialDensity

DoubleExponentialDensity::DoubleExponentialDensity(double c_plus, double a_plus, double c_minus,
                                                   double a_minus)
    : c_plus_(c_plus), a_plus_(a_plus), c_minus_(c_minus), a_minus_(a_minus) {
  require(c_plus > 0.0 && c_minus > 0.0, "Kou jump intensities on both sides > 0");
  require(a_plus > 0.0 && a_minus > 0.0, "Kou decay rates > 0");
}

double DoubleExponentialDensity::log_value(double x) const {
  return x > 0.0 ? std::log(c_plus_) - a_plus_ * x : std::log(c_minus_) + a_minus_ * x;
}

double DoubleExponentialDensity::derivative(double x) const {
  return (*this)(x) * (x > 0.0 ? -a_plus_ : a_minus_);
}

std::optional<double> DoubleExponentialDensity::right_tail_closed(double z) const {
  return c_plus_ / a_plus_ * std::exp(-a_plus_ * z);
}

std::optional<double> DoubleExponentialDensity::left_tail_closed(double z) const {
  return c_minus_ / a_minus_ * std::exp(-a_minus_ * z);
}

std::optional<JumpExponent> DoubleExponentialDensity::jump_exponent() const {
  const double cp = c_plus_, ap = a_plus_, cm = c_minus_, am = a_minus_;
  return JumpExponent{[cp, ap, cm, am](cplx u) {
                        return cp * (1.0 / (ap - kI * u) - 1.0 / ap) +
                               cm * (1.0 / (am + kI * u) - 1.0 / am);
                      },
                      Centering::Uncompensated};
}

DensityPtr DoubleExponentialDensity::tilted(double theta) const {
  require(a_plus_ - theta > 0.0 && a_minus_ + theta > 0.0,
          "tilt inside the exponential strip (-lambda_minus, lambda_plus)");
  return std::make_shared<DoubleExponentialDensity>(c_plus_, a_plus_ - theta, c_minus_,
                                                    a_minus_ + theta);
}

// -------------------------------------------------------- GaussianJumpDensity

GaussianJumpDensity::GaussianJumpDensity(double lambda, double mu, double delta)
    : lambda_(lambda), mu_(mu), delta_(delta) {
  require(lambda > 0.0, "lambda > 0 (density must be strictly positive)");
  require(delta > 0.0, "delta_j > 0");
}

double GaussianJumpDensity::log_value(double x) const {
  const double z = (x - mu_) / delta_;
  return std::log(lambda_ / (delta_ * std::sqrt(2.0 * M_PI))) - 0.5 * z * z;
}

double GaussianJumpDensity::derivative(double x) const {
  return -(*this)(x) * (x - mu_) / (delta_ * delta_);
}

ExponentialStrip GaussianJumpDensity::strip() const { return {-kInf, kInf}; }

std::optional<double> GaussianJumpDensity::right_tail_closed(double z) const {
  return 0.5 * lambda_ * std::erfc((z - mu_) / (delta_ * M_SQRT2));
}

std::optional<double> GaussianJumpDensity::left_tail_closed(double z) const {
  return 0.5 * lambda_ * std::erfc((z + mu_) / (delta_ * M_SQRT2));
}

std::optional<JumpExponent> GaussianJumpDensity::jump_exponent() const {
  const double l = lambda_, m = mu_, d = delta_;
  return JumpExponent{[l, m, d](cplx u) { return l * (std::exp(kI * u * m - 0.5 * d * d * u * u) - 1.0); },
                      Centering::Uncompensated};
}

DensityPtr GaussianJumpDensity::tilted(double theta) const {
  const double scale = std::exp(theta * mu_ + 0.5 * theta * theta * delta_ * delta_);
  return std::make_shared<GaussianJumpDensity>(lambda_ * scale, mu_ + theta * delta_ * delta_,
                                               delta_);
}

// ----------------------------------------------------------------- NigDensity

NigDensity::NigDensity(double alpha, double beta, double delta)
    : alpha_(alpha), beta_(beta), delta_(delta) {
  require(alpha > 0.0, "alpha > 0");
  require(std::abs(beta) < alpha, "|beta| < alpha");
  require(delta > 0.0, "delta > 0");
}

double NigDensity::log_value(double x) const {
  const double ax = std::abs(x);
  return std::log(delta_ * alpha_ / M_PI) + beta_ * x + log_bessel_k1(alpha_ * ax) - std::log(ax);
}

double NigDensity::derivative(double x) const {
  const double z = alpha_ * std::abs(x);
  const double sgn = x > 0.0 ? 1.0 : -1.0;
  // K_1'(z) = -K_0(z) - K_1(z)/z.
  const double dlogk = -alpha_ * sgn * (bessel_k_ratio(z) + 1.0 / z);
  return (*this)(x) * (beta_ + dlogk - 1.0 / x);
}

std::optional<JumpExponent> NigDensity::jump_exponent() const {
  const double a = alpha_, b = beta_, d = delta_;
  const double g = std::sqrt(a * a - b * b);
  // Compensated: -delta (sqrt(a^2 - (b + iu)^2) - g) - iu delta b / g.
  return JumpExponent{[a, b, d, g](cplx u) {
                        const cplx w = b + kI * u;
                        return -d * (std::sqrt(a * a - w * w) - g) - kI * u * d * b / g;
                      },
                      Centering::Compensated, -d * b / g};
}

DensityPtr NigDensity::tilted(double theta) const {
  return std::make_shared<NigDensity>(alpha_, beta_ + theta, delta_);
}

// -------------------------------------------------------------- CustomDensity

CustomDensity::CustomDensity(std::function<double(double)> density, VariationClass variation,
                             ExponentialStrip strip, std::function<double(double)> derivative)
    : density_(std::move(density)),
      derivative_(std::move(derivative)),
      variation_(variation),
      strip_(strip) {
  if (!density_) throw DomainError("custom density: density function required");
}

double CustomDensity::log_value(double x) const { return std::log(density_(x)); }

double CustomDensity::derivative(double x) const {
  if (derivative_) return derivative_(x);
  const double h = std::max(1e-6, 1e-6 * std::abs(x));
  return (density_(x + h) - density_(x - h)) / (2.0 * h);
}

// --------------------------------------------------------------- CharExponent

CharExponent::CharExponent(double drift, double sigma2, JumpExponent jump)
    : drift_(drift), sigma2_(sigma2), jump_(std::move(jump)) {}

cplx CharExponent::operator()(cplx u) const {
  return kI * u * drift_ - 0.5 * sigma2_ * u * u + jump_.J(u);
}

// ---------------------------------------------------------------- LevyTriplet

LevyTriplet::LevyTriplet(double b, double sigma2, DensityPtr nu)
    : b_(b), sigma2_(sigma2), nu_(std::move(nu)), small_jump_mean_(kNaN) {
  if (!nu_) throw DomainError("triplet requires a Levy density");
  require(sigma2 >= 0.0, "sigma2 >= 0");
  if (nu_->variation() == VariationClass::Finite) {
    small_jump_mean_ = integrate_small_jumps([](double x) { return x; }, *nu_, {}).value;
  }
  if (auto jump = nu_->jump_exponent()) {
    // psi(u) = i u b - sigma2 u^2/2 + int(e^{iux} - 1 - iux 1_{|x|<=1}) nu
    //        = i u (b - shift) - sigma2 u^2/2 + J(u),
    // with shift = int_{|x|<=1} x nu for uncompensated J and
    // shift = -int_{|x|>1} x nu for compensated J.
    double shift = 0.0;
    if (jump->centering == Centering::Uncompensated) {
      shift = small_jump_mean_;
    } else {
      const LevyDensity& d = *nu_;
      shift = -integrate_large_jumps([&d](double x) { return x * d(x); }, {}).value;
    }
    exponent_.emplace(b_ - shift, sigma2_, std::move(*jump));
  }
}

double LevyTriplet::b0() const {
  if (variation() != VariationClass::Finite) {
    throw DomainError("b0 is defined for finite-variation models only");
  }
  return b_ - small_jump_mean_;
}

const CharExponent& LevyTriplet::require_exponent() const {
  if (!exponent_) {
    throw DomainError("model " + to_string(tag()) + " has no closed-form characteristic exponent");
  }
  return *exponent_;
}

// ------------------------------------------------------------------ builders

quad::Result martingale_integral(const LevyDensity& nu, const quad::Options& opts) {
  const quad::Result small =
      integrate_small_jumps([](double x) { return std::expm1(x) - x; }, nu, opts);
  const quad::Result large = integrate_large_jumps(
      [&nu](double x) { return nu.weighted(x, 1.0) - nu(x); }, opts);
  return small + large;
}

double martingale_drift(double sigma2, const LevyDensity& nu, const quad::Options& opts) {
  const quad::Result r = quad::require_converged(martingale_integral(nu, opts),
                                                 "martingale drift integral");
  return -0.5 * sigma2 - r.value;
}

namespace {

// Triplet whose drift is pinned by psi(-i) = 0 from the closed-form exponent.
LevyTriplet pinned_triplet(double sigma2, DensityPtr nu) {
  // Build with b = 0, read off the centring shift, then pin.
  const LevyTriplet probe(0.0, sigma2, nu);
  const CharExponent& psi0 = probe.require_exponent();
  const double shift = -psi0.drift();
  const double jump_at_minus_i = psi0.jump().J(cplx(0.0, -1.0)).real();
  const double drift = -0.5 * sigma2 - jump_at_minus_i;
  return LevyTriplet(drift + shift, sigma2, std::move(nu));
}

struct ModelBuilder {
  LevyTriplet operator()(const VGParams& p) const {
    require(p.sigma > 0.0, "VG sigma > 0");
    require(p.nu > 0.0, "VG nu > 0");
    require(p.eta >= 0.0, "VG eta >= 0");
    const double s2 = p.sigma * p.sigma;
    const double A = p.theta / s2;
    const double B = std::sqrt(p.theta * p.theta + 2.0 * s2 / p.nu) / s2;
    const double G = B + A, M = B - A;
    require(M > 1.0, "VG right decay rate M > 1 (finite exponential moment)");
    auto nu = std::make_shared<TemperedStableDensity>(1.0 / p.nu, G, M, 0.0, ModelTag::VG);
    return pinned_triplet(p.eta * p.eta, nu);
  }
  LevyTriplet operator()(const CGMYParams& p) const {
    require(p.C > 0.0, "CGMY C > 0");
    require(p.G > 0.0, "CGMY G > 0");
    require(p.M > 1.0, "CGMY M > 1");
    require(p.Y > 0.0 && p.Y < 2.0, "CGMY Y in (0, 2)");
    require(p.Y != 1.0, "CGMY Y != 1");
    auto nu = std::make_shared<TemperedStableDensity>(p.C, p.G, p.M, p.Y, ModelTag::CGMY);
    return pinned_triplet(0.0, nu);
  }
  LevyTriplet operator()(const MertonParams& p) const {
    require(p.lambda > 0.0, "Merton lambda > 0 (density must be strictly positive)");
    require(p.delta_j > 0.0, "Merton delta_j > 0");
    require(p.sigma >= 0.0, "Merton sigma >= 0");
    auto nu = std::make_shared<GaussianJumpDensity>(p.lambda, p.mu_j, p.delta_j);
    return pinned_triplet(p.sigma * p.sigma, nu);
  }
  LevyTriplet operator()(const KouParams& p) const {
    require(p.lambda > 0.0, "Kou lambda > 0");
    require(p.p > 0.0 && p.p < 1.0, "Kou p in (0, 1)");
    require(p.lambda_plus > 1.0, "Kou lambda_plus > 1");
    require(p.lambda_minus > 0.0, "Kou lambda_minus > 0");
    require(p.sigma >= 0.0, "Kou sigma >= 0");
    auto nu = std::make_shared<DoubleExponentialDensity>(
        p.lambda * p.p * p.lambda_plus, p.lambda_plus,
        p.lambda * (1.0 - p.p) * p.lambda_minus, p.lambda_minus);
    return pinned_triplet(p.sigma * p.sigma, nu);
  }
  LevyTriplet operator()(const NIGParams& p) const {
    require(p.alpha > 0.0, "NIG alpha > 0");
    require(std::abs(p.beta) < p.alpha, "NIG |beta| < alpha");
    require(p.beta + 1.0 < p.alpha, "NIG beta + 1 < alpha (finite exponential moment)");
    require(p.delta > 0.0, "NIG delta > 0");
    require(p.sigma >= 0.0, "NIG sigma >= 0");
    auto nu = std::make_shared<NigDensity>(p.alpha, p.beta, p.delta);
    return pinned_triplet(p.sigma * p.sigma, nu);
  }
};

}  // namespace

LevyTriplet make_model(const ModelParams& params) { return std::visit(ModelBuilder{}, params); }

LevyTriplet esscher_transform(const LevyTriplet& model, double theta, const quad::Options& opts) {
  const LevyDensity& nu = model.nu();
  if (!nu.strip().contains(theta)) {
    std::ostringstream os;
    os << "Esscher parameter " << theta << " outside the exponential strip ("
       << nu.strip().lower << ", " << nu.strip().upper << ")";
    throw DomainError(os.str());
  }
  const quad::Result shift = quad::require_converged(
      integrate_small_jumps([theta](double x) { return x * std::expm1(theta * x); }, nu, opts),
      "Esscher drift integral");
  const double b_theta = model.b() + shift.value + theta * model.sigma2();
  return LevyTriplet(b_theta, model.sigma2(), nu.tilted(theta));
}

LevyTriplet share_measure_transform(const LevyTriplet& model, const quad::Options& opts) {
  return esscher_transform(model, 1.0, opts);
}

ConsistencyReport check_consistency(const LevyTriplet& model) {
  ConsistencyReport rep;
  const LevyDensity& nu = model.nu();
  double sup_weighted = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double x = 0.025 * i;
    for (double s : {x, -x}) {
      // Positivity is judged in log space: Gaussian tails underflow in double.
      const double lv = nu.log_value(s);
      if (std::isnan(lv) || lv == -kInf || lv == kInf) rep.positive = false;
      sup_weighted = std::max(sup_weighted, nu.weighted(s, 1.0));
    }
  }
  rep.exp_weighted_bounded = std::isfinite(sup_weighted);
  const quad::Result big =
      integrate_large_jumps([&nu](double x) { return nu.weighted(x, 1.0); }, {});
  rep.exp_moment_finite = nu.strip().contains(1.0) && big.converged && std::isfinite(big.value);
  const quad::Result m = martingale_integral(nu);
  rep.martingale_residual = model.b() + 0.5 * model.sigma2() + m.value;
  return rep;
}

std::optional<CGMYParams> tempered_stable_params(const LevyTriplet& model) {
  if (auto ts = dynamic_cast<const TemperedStableDensity*>(&model.nu())) {
    return CGMYParams{ts->C(), ts->G(), ts->M(), ts->Y()};
  }
  return std::nullopt;
}

}  // namespace levy
