#include "levy/quadrature.h"

#include "levy/errors.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace levy::quad {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod_panel(const Integrand& f, double a, double b) {
  double err = 0.0;
  const double v = Kronrod::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

double tolerance(const Options& opts, double value) {
  return std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
}

// Wynn epsilon table, stored as its latest antidiagonal.
class WynnEpsilon {
 public:
  static constexpr std::size_t kMaxColumns = 40;

  // Adds the next partial sum and returns the current extrapolated limit.
  double push(double s) {
    std::vector<double> next{s};
    for (std::size_t k = 0; k < diag_.size() && k + 1 <= kMaxColumns; ++k) {
      const double d = next[k] - diag_[k];
      if (d == 0.0 || !std::isfinite(d)) break;
      next.push_back((k == 0 ? 0.0 : diag_[k - 1]) + 1.0 / d);
    }
    const std::vector<double> old = std::move(diag_);
    diag_ = std::move(next);

    // Highest even column that is finite; its change against the previous
    // antidiagonal serves as the error indicator.
    double estimate = diag_.front();
    error_ = old.empty() ? std::numeric_limits<double>::infinity()
                         : std::abs(diag_.front() - old.front());
    for (std::size_t k = 2; k < diag_.size(); k += 2) {
      if (!std::isfinite(diag_[k]) || k >= old.size()) break;
      const double change = std::abs(diag_[k] - old[k]);
      if (change <= error_) {
        estimate = diag_[k];
        error_ = change;
      }
    }
    return estimate;
  }

  double error() const { return error_; }

 private:
  std::vector<double> diag_;
  double error_ = std::numeric_limits<double>::infinity();
};

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
  if (a == b) return {};
  if (b < a) {
    Result r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<Panel> heap;
  Panel first = kronrod_panel(f, a, b);
  double total = first.value;
  double total_err = first.error;
  int evals = 15;
  heap.push(first);
  int splits = 0;
  while (total_err > tolerance(opts, total) && splits < opts.max_subdivisions) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;  // interval exhausted at machine resolution
    }
    Panel left = kronrod_panel(f, worst.a, mid);
    Panel right = kronrod_panel(f, mid, worst.b);
    evals += 30;
    ++splits;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double sum = 0.0, err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  Result r{sum, err, evals, err <= tolerance(opts, sum)};
  if (!std::isfinite(sum)) r.converged = false;
  return r;
}

Result integrate_upper(const Integrand& f, double a, const Options& opts) {
  auto g = [&](double s) {
    const double x = a + (1.0 - s) / s;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return integrate(g, 0.0, 1.0, opts);
}

Result integrate_lower(const Integrand& f, double b, const Options& opts) {
  auto g = [&](double s) {
    const double x = b - (1.0 - s) / s;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return integrate(g, 0.0, 1.0, opts);
}

Result integrate_from_zero(const Integrand& f, double a, const Options& opts) {
  if (a <= kSingularCutoff) return {};
  const double s_max = std::log(a / kSingularCutoff);
  auto g = [&](double s) {
    const double x = a * std::exp(-s);
    return f(x) * x;
  };
  Result r = integrate(g, 0.0, s_max, opts);
  // Power-law extrapolation of f on (0, cutoff].
  const double x0 = kSingularCutoff;
  const double f0 = f(x0);
  const double f1 = f(2.0 * x0);
  if (f0 != 0.0 && f1 != 0.0 && (f0 > 0) == (f1 > 0)) {
    const double q = std::log(f1 / f0) / std::log(2.0);
    if (q > -1.0) {
      const double sliver = f0 * x0 / (q + 1.0);
      r.value += sliver;
      r.error += 0.05 * std::abs(sliver);
    } else {
      r.converged = false;  // not integrable at the origin
    }
  }
  r.evaluations += 2;
  return r;
}

Result integrate_oscillatory(const Integrand& f, double a, double omega, const Options& opts,
                             int max_panels) {
  Options panel_opts = opts;
  panel_opts.rel_tol = std::min(opts.rel_tol, 1e-10);
  panel_opts.abs_tol = opts.abs_tol * 1e-2;

  if (!(omega > 0.0)) {
    // Non-oscillatory tail: panels of doubling width until three in a row
    // are negligible.
    constexpr double kFirstWidth = 50.0;
    Result acc;
    double lo = a, width = kFirstWidth;
    int quiet = 0;
    for (int j = 0; j < max_panels; ++j) {
      const Result panel = integrate(f, lo, lo + width, panel_opts);
      acc += panel;
      lo += width;
      width *= 2.0;
      quiet = std::abs(panel.value) < 1e-3 * tolerance(opts, acc.value) ? quiet + 1 : 0;
      if (quiet >= 3) {
        acc.converged = true;  // panel estimates are accumulated into the error
        return acc;
      }
    }
    acc.converged = false;
    return acc;
  }

  const double width = M_PI / omega;
  WynnEpsilon wynn;
  Result acc;
  double previous_limit = std::numeric_limits<double>::quiet_NaN();
  int quiet_panels = 0;
  int stable_limits = 0;
  for (int j = 0; j < max_panels; ++j) {
    const Result panel = integrate(f, a + j * width, a + (j + 1) * width, panel_opts);
    acc += panel;
    const double limit = wynn.push(acc.value);
    const double tol = tolerance(opts, limit);

    quiet_panels = std::abs(panel.value) < 1e-3 * tol ? quiet_panels + 1 : 0;
    if (quiet_panels >= 3 && j >= 4) {
      return {acc.value, acc.error + 3.0 * std::abs(panel.value), acc.evaluations, true};
    }
    if (j >= 8 && std::isfinite(previous_limit)) {
      const double change = std::abs(limit - previous_limit);
      stable_limits = change < 0.1 * tol ? stable_limits + 1 : 0;
      if (stable_limits >= 3) {
        return {limit, acc.error + change + wynn.error(), acc.evaluations, true};
      }
    }
    previous_limit = limit;
  }
  return {previous_limit, acc.error + std::abs(previous_limit - acc.value), acc.evaluations,
          false};
}

const Result& require_converged(const Result& r, const std::string& what) {
  if (!r.converged) {
    throw QuadratureError("quadrature did not converge: " + what, r.value, r.error);
  }
  return r;
}

}  // namespace levy::quad
