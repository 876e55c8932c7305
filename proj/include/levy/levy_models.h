#pragma once

#include "levy/quadrature.h"

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace levy {

using cplx = std::complex<double>;

enum class VariationClass { Finite, Infinite };
enum class ModelTag { VG, CGMY, Merton, Kou, NIG, Custom };

std::string to_string(ModelTag tag);

// Open interval of p for which the integral of e^{px} nu(x) over |x| > 1 is
// finite.
struct ExponentialStrip {
  double lower;
  double upper;
  bool contains(double p) const { return p > lower && p < upper; }
};

// How a closed-form jump exponent J(u) is centred.
//   Uncompensated: J(u) = int (e^{iux} - 1) nu(dx)
//   Compensated:   J(u) = int (e^{iux} - 1 - iux) nu(dx)
enum class Centering { Uncompensated, Compensated };

struct JumpExponent {
  std::function<cplx(cplx)> J;
  Centering centering;
  // c with Im J(u) = c u + o(u) as u -> +inf (real u).
  double linear_phase = 0.0;
};

class LevyDensity;
using DensityPtr = std::shared_ptr<const LevyDensity>;

// Strictly positive Levy density on R \ {0}. Immutable.
class LevyDensity : public std::enable_shared_from_this<LevyDensity> {
 public:
  virtual ~LevyDensity() = default;

  // log nu(x) for x != 0.
  virtual double log_value(double x) const = 0;
  virtual double derivative(double x) const = 0;
  virtual VariationClass variation() const = 0;
  virtual ModelTag tag() const = 0;
  virtual ExponentialStrip strip() const = 0;

  // Closed-form nu[z, inf) and nu(-inf, -z] for z > 0 where available.
  virtual std::optional<double> right_tail_closed(double /*z*/) const { return std::nullopt; }
  virtual std::optional<double> left_tail_closed(double /*z*/) const { return std::nullopt; }

  virtual std::optional<JumpExponent> jump_exponent() const { return std::nullopt; }

  // Density e^{theta x} nu(x). Families closed under tilting return their own
  // type; anything else is wrapped generically.
  virtual DensityPtr tilted(double theta) const;

  // Throws DomainError for |x| < kSingularCutoff.
  double operator()(double x) const;
  // e^{p x} nu(x), evaluated in log space.
  double weighted(double x, double p) const;

  // nu[z, inf) and nu(-inf, -z] for z > 0, closed form or quadrature.
  quad::Result right_tail(double z, const quad::Options& opts = {}) const;
  quad::Result left_tail(double z, const quad::Options& opts = {}) const;
  // nu([a, b]) for 0 < a <= b or a <= b < 0.
  quad::Result mass(double a, double b, const quad::Options& opts = {}) const;

  bool has_closed_tails() const { return right_tail_closed(1.0).has_value(); }
};

// Tempered-stable density C e^{-M x} x^{-1-Y} (x > 0), C e^{G x} |x|^{-1-Y}
// (x < 0). Y = 0 is the variance-gamma case.
class TemperedStableDensity final : public LevyDensity {
 public:
  TemperedStableDensity(double C, double G, double M, double Y, ModelTag tag = ModelTag::CGMY);

  double log_value(double x) const override;
  double derivative(double x) const override;
  VariationClass variation() const override;
  ModelTag tag() const override { return tag_; }
  ExponentialStrip strip() const override { return {-G_, M_}; }
  std::optional<double> right_tail_closed(double z) const override;
  std::optional<double> left_tail_closed(double z) const override;
  std::optional<JumpExponent> jump_exponent() const override;
  DensityPtr tilted(double theta) const override;

  double C() const { return C_; }
  double G() const { return G_; }
  double M() const { return M_; }
  double Y() const { return Y_; }

 private:
  double C_, G_, M_, Y_;
  ModelTag tag_;
};

// Kou: c_+ e^{-a_+ x} (x > 0), c_- e^{-a_- |x|} (x < 0).
class DoubleExponentialDensity final : public LevyDensity {
 public:
  DoubleExponentialDensity(double c_plus, double a_plus, double c_minus, double a_minus);

  double log_value(double x) const override;
  double derivative(double x) const override;
  VariationClass variation() const override { return VariationClass::Finite; }
  ModelTag tag() const override { return ModelTag::Kou; }
  ExponentialStrip strip() const override { return {-a_minus_, a_plus_}; }
  std::optional<double> right_tail_closed(double z) const override;
  std::optional<double> left_tail_closed(double z) const override;
  std::optional<JumpExponent> jump_exponent() const override;
  DensityPtr tilted(double theta) const override;

 private:
  double c_plus_, a_plus_, c_minus_, a_minus_;
};

// Merton: lambda * N(mu, delta^2) density.
class GaussianJumpDensity final : public LevyDensity {
 public:
  GaussianJumpDensity(double lambda, double mu, double delta);

  double log_value(double x) const override;
  double derivative(double x) const override;
  VariationClass variation() const override { return VariationClass::Finite; }
  ModelTag tag() const override { return ModelTag::Merton; }
  ExponentialStrip strip() const override;
  std::optional<double> right_tail_closed(double z) const override;
  std::optional<double> left_tail_closed(double z) const override;
  std::optional<JumpExponent> jump_exponent() const override;
  DensityPtr tilted(double theta) const override;

 private:
  double lambda_, mu_, delta_;
};

// Normal inverse Gaussian: (delta alpha / pi) e^{beta x} K_1(alpha |x|) / |x|.
class NigDensity final : public LevyDensity {
 public:
  NigDensity(double alpha, double beta, double delta);

  double log_value(double x) const override;
  double derivative(double x) const override;
  VariationClass variation() const override { return VariationClass::Infinite; }
  ModelTag tag() const override { return ModelTag::NIG; }
  ExponentialStrip strip() const override { return {-alpha_ - beta_, alpha_ - beta_}; }
  std::optional<JumpExponent> jump_exponent() const override;
  DensityPtr tilted(double theta) const override;

 private:
  double alpha_, beta_, delta_;
};

// User-supplied density. nu' falls back to a central difference with step
// max(1e-6, 1e-6 |x|) when no derivative is given.
class CustomDensity final : public LevyDensity {
 public:
  CustomDensity(std::function<double(double)> density, VariationClass variation,
                ExponentialStrip strip,
                std::function<double(double)> derivative = nullptr);

  double log_value(double x) const override;
  double derivative(double x) const override;
  VariationClass variation() const override { return variation_; }
  ModelTag tag() const override { return ModelTag::Custom; }
  ExponentialStrip strip() const override { return strip_; }

  double value(double x) const { return density_(x); }

 private:
  std::function<double(double)> density_;
  std::function<double(double)> derivative_;
  VariationClass variation_;
  ExponentialStrip strip_;
};

// psi(u) = i u drift - sigma2 u^2 / 2 + J(u), with E e^{iuX_t} = e^{t psi(u)},
// valid for complex u with -Im(u) inside the exponential strip.
class CharExponent {
 public:
  CharExponent(double drift, double sigma2, JumpExponent jump);

  cplx operator()(cplx u) const;
  double drift() const { return drift_; }
  // Coefficient of the asymptotically linear phase of psi on the real axis.
  double linear_phase() const { return drift_ + jump_.linear_phase; }
  double sigma2() const { return sigma2_; }
  const JumpExponent& jump() const { return jump_; }

 private:
  double drift_;
  double sigma2_;
  JumpExponent jump_;
};

// Generating triplet (b, sigma^2, nu) under the truncation 1_{|x| <= 1}.
class LevyTriplet {
 public:
  // No martingale enforcement: b is taken as given.
  LevyTriplet(double b, double sigma2, DensityPtr nu);

  double b() const { return b_; }
  double sigma2() const { return sigma2_; }
  const LevyDensity& nu() const { return *nu_; }
  const DensityPtr& nu_ptr() const { return nu_; }
  VariationClass variation() const { return nu_->variation(); }
  ModelTag tag() const { return nu_->tag(); }

  // b0 = b - int_{|x|<=1} x nu(dx); finite-variation models only.
  double b0() const;

  // Exponent implied by this triplet's own b:
  //   psi(u) = i u b - sigma2 u^2/2 + int (e^{iux} - 1 - iux 1_{|x|<=1}) nu(dx),
  // assembled from the closed-form jump part and a quadrature centring shift.
  // Empty when the density has no closed-form jump exponent.
  const std::optional<CharExponent>& char_exponent() const { return exponent_; }
  // As char_exponent(), throwing DomainError when unavailable.
  const CharExponent& require_exponent() const;
  cplx psi(cplx u) const { return require_exponent()(u); }

  LevyTriplet with_b(double b) const { return LevyTriplet(b, sigma2_, nu_); }
  LevyTriplet with_sigma2(double sigma2) const { return LevyTriplet(b_, sigma2, nu_); }

 private:
  double b_;
  double sigma2_;
  DensityPtr nu_;
  double small_jump_mean_;  // int_{|x|<=1} x nu(dx); NaN for infinite variation
  std::optional<CharExponent> exponent_;
};

struct VGParams {
  double sigma, nu, theta, eta = 0.0;
};
struct CGMYParams {
  double C, G, M, Y;
};
struct MertonParams {
  double lambda, mu_j, delta_j, sigma;
};
struct KouParams {
  double lambda, p, lambda_plus, lambda_minus, sigma;
};
struct NIGParams {
  double alpha, beta, delta, sigma = 0.0;
};
using ModelParams = std::variant<VGParams, CGMYParams, MertonParams, KouParams, NIGParams>;

// Builds a martingale-consistent model. Throws DomainError naming the
// violated constraint.
LevyTriplet make_model(const ModelParams& params);

// b = -sigma2/2 - int (e^x - 1 - x 1_{|x|<=1}) nu(dx), by quadrature.
double martingale_drift(double sigma2, const LevyDensity& nu, const quad::Options& opts = {});
quad::Result martingale_integral(const LevyDensity& nu, const quad::Options& opts = {});

// General Esscher tilt by e^{theta x}: nu_theta = e^{theta x} nu,
// b_theta = b + int_{|x|<=1} x (e^{theta x} - 1) nu(dx) + theta sigma2.
LevyTriplet esscher_transform(const LevyTriplet& model, double theta,
                              const quad::Options& opts = {});
// Share-measure triplet (b*, sigma2, nu*), nu*(x) = e^x nu(x).
LevyTriplet share_measure_transform(const LevyTriplet& model, const quad::Options& opts = {});

// Consistency checks on a triplet: positivity on a grid, the exponential
// moment conditions, and the martingale condition within `tol`.
struct ConsistencyReport {
  bool positive = true;
  bool exp_moment_finite = true;
  bool exp_weighted_bounded = true;
  double martingale_residual = 0.0;
  bool ok(double tol) const {
    return positive && exp_moment_finite && exp_weighted_bounded &&
           std::abs(martingale_residual) <= tol;
  }
};
ConsistencyReport check_consistency(const LevyTriplet& model);

// Tempered-stable parameters of a VG or CGMY model, if it is one.
std::optional<CGMYParams> tempered_stable_params(const LevyTriplet& model);

// Upper incomplete gamma Gamma(a, z) for z > 0 and any real a that is not a
// non-positive integer, plus a = 0.
double upper_incomplete_gamma(double a, double z);

}  // namespace levy
