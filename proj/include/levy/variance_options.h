#pragma once

#include "levy/levy_models.h"
#include "levy/quadrature.h"

#include <functional>

namespace levy {

// Levy density of the quadratic-variation process [X] (Section 5):
// q(y) = [nu(sqrt y) + nu(-sqrt y)] / (2 sqrt y), y > 0.
double qv_density(const LevyTriplet& model, double y);

// Leading-order variance call t int (x^2 - K)_+ nu(x) dx (Eq. 5.2, x-form).
// The diffusion part does not enter at this order.
quad::Result variance_call_leading(const LevyTriplet& model, double K, double t,
                                   const quad::Options& opts = {});

// The same quantity as t int_K^inf (y - K) q(y) dy (Eq. 5.1, y-form); used as
// the dual-quadrature check of the x-form.
quad::Result variance_call_leading_yform(const LevyTriplet& model, double K, double t,
                                         const quad::Options& opts = {});

// Optional second-order hook for E([X]_t - K)_+ = int_K^inf P([X]_t >= u) du
// with P([X]_t >= u) ~ t qbar(u) + (t^2/2) d2q(u). The caller supplies the
// tail of q and its d2 analogue; nothing is computed by default.
struct QVSecondOrderHook {
  std::function<double(double)> q_tail;  // u -> int_u^inf q(y) dy
  std::function<double(double)> d2q;    // u -> second-order coefficient
};

quad::Result variance_call_second_order(const QVSecondOrderHook& hook, double K, double t,
                                        const quad::Options& opts = {});

}  // namespace levy
