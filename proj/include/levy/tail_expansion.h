#pragma once

#include "levy/levy_models.h"
#include "levy/quadrature.h"

#include <array>

namespace levy {

// Second-order small-time tail data at threshold y (Theorem 2.1).
struct TailExpansion {
  double y = 0.0;
  double nu_tail = 0.0;     // nu[y, inf)
  double d2 = 0.0;
  double quad_error = 0.0;  // sum of per-term absolute error estimates
  // Individual terms in the order of the formula used (Eq. 2.4 or Eq. 2.5).
  std::array<double, 7> terms{};
};

struct D2Options {
  quad::Options quad{};
  // Eq. 2.4's term 2 nu(y) int_{y/2<|x|<1} x nu(x) dx for y > 2: when true the
  // bounds are read as an oriented integral (the reading under which Eq. 2.4
  // and Eq. 2.5 agree); when false the region is taken as empty.
  bool oriented_large_y_region = true;
};

// nu[y, inf) for y > 0.
quad::Result nu_tail(const LevyTriplet& model, double y, const quad::Options& opts = {});

// d2 by the general formula (Eq. 2.4, with the inner prefactor of the last
// term read as 2 rather than 2 nu(y); see the decisions ledger).
TailExpansion d2_general(const LevyTriplet& model, double y, const D2Options& opts = {});

// d2 by the bounded-variation formula (Eq. 2.5). Finite-variation models only.
TailExpansion d2_bv(const LevyTriplet& model, double y, const D2Options& opts = {});

// Eq. 2.5 for finite-variation models, Eq. 2.4 otherwise.
TailExpansion d2(const LevyTriplet& model, double y, const D2Options& opts = {});

struct TailApprox {
  double value = 0.0;  // clamped to [0, 1]
  double raw = 0.0;    // before clamping
  bool clamped = false;
  double quad_error = 0.0;
};

// order 1: t nu[y, inf); order 2: adds (t^2 / 2) d2(y).
TailApprox tail_probability_approx(const LevyTriplet& model, double y, double t, int order,
                                   const D2Options& opts = {});

// Shared by the time-changed expansion: clamps `raw` into [0, 1].
TailApprox clamp_probability(double raw, double quad_error);

}  // namespace levy
