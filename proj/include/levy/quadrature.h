#pragma once

#include <cmath>
#include <functional>
#include <string>

namespace levy::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 400;
};

// Value of an integral together with its accumulated error bound.
struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;

  Result& operator+=(const Result& other) {
    value += other.value;
    error += other.error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
  friend Result operator+(Result a, const Result& b) { return a += b; }
  friend Result operator-(Result a, Result b) {
    b.value = -b.value;
    return a += b;
  }
  Result scaled(double factor) const {
    Result r = *this;
    r.value *= factor;
    r.error *= std::abs(factor);
    return r;
  }
};

using Integrand = std::function<double(double)>;

// Smallest |x| at which integrands singular at the origin are evaluated.
inline constexpr double kSingularCutoff = 1e-12;

// Globally adaptive 15-point Gauss-Kronrod on a finite interval. b < a
// yields the oriented integral.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

// Integral over [a, +inf) via x = a + (1 - s) / s.
Result integrate_upper(const Integrand& f, double a, const Options& opts = {});

// Integral over (-inf, b].
Result integrate_lower(const Integrand& f, double b, const Options& opts = {});

// Integral over (0, a] for f with an integrable singularity at 0. Uses
// x = a e^{-s} down to kSingularCutoff and a local power-law fit for the
// remaining sliver.
Result integrate_from_zero(const Integrand& f, double a, const Options& opts = {});

// Integral over [a, +inf) of an integrand that asymptotically oscillates with
// angular frequency `omega`. Sums half-period panels and accelerates the
// partial sums with Wynn's epsilon algorithm. omega <= 0 falls back to
// panels of doubling width summed until they become negligible.
Result integrate_oscillatory(const Integrand& f, double a, double omega,
                             const Options& opts = {}, int max_panels = 4000);

// Throws QuadratureError labelled `what` unless r converged.
const Result& require_converged(const Result& r, const std::string& what);

}  // namespace levy::quad
