#include "doctest.h"
#include "levy/errors.h"
#include "levy/variance_options.h"
#include "test_support.h"

#include <cmath>

using namespace levy;

TEST_CASE("quadratic-variation density") {
  const LevyTriplet cgmy = make_model(paper::kCgmyTable3);
  const double y = 0.01, r = 0.1;
  const auto& p = paper::kCgmyTable3;
  const double direct = (p.C * std::exp(-p.M * r) * std::pow(r, -1.0 - p.Y) +
                         p.C * std::exp(-p.G * r) * std::pow(r, -1.0 - p.Y)) /
                        (2.0 * r);
  CHECK(qv_density(cgmy, y) == doctest::Approx(direct).epsilon(1e-13));

  const LevyTriplet sym = make_model(CGMYParams{1.1, 6.0, 6.0, 0.7});
  for (double v : {1e-4, 0.04, 1.0}) {
    CHECK(qv_density(sym, v) == doctest::Approx(sym.nu()(std::sqrt(v)) / std::sqrt(v)).epsilon(1e-14));
  }
  for (const auto& m : testsupport::builtin_models()) CHECK(qv_density(m, 0.02) > 0.0);
  CHECK_THROWS_AS(qv_density(cgmy, 0.0), DomainError);
  CHECK_THROWS_AS(qv_density(cgmy, -1.0), DomainError);
}

TEST_CASE("tail of q equals the substituted x-integral") {
  const LevyTriplet m = make_model(paper::kVgTable1);
  const quad::Options o{1e-14, 1e-12, 1000};
  for (double K : {0.01, 0.04}) {
    const double qtail = quad::integrate_upper([&](double y) { return qv_density(m, y); }, K, o).value;
    const double r = std::sqrt(K);
    const double xtail = m.nu().right_tail(r, o).value + m.nu().left_tail(r, o).value;
    CHECK(qtail == doctest::Approx(xtail).epsilon(1e-9));
  }
}

TEST_CASE("variance call: dual forms, sigma independence and limits") {
  const std::vector<LevyTriplet> models{make_model(paper::kVgTable1), make_model(paper::kVgTable2),
                                        make_model(paper::kCgmyTable3),
                                        make_model(CGMYParams{1.1, 5.09, 8.6, 1.5})};
  const double t = 10.0 / 252.0;
  for (const auto& m : models) {
    for (double K : {0.005, 0.01, 0.04, 0.09, 0.25}) {
      const quad::Result x = variance_call_leading(m, K, t);
      const quad::Result y = variance_call_leading_yform(m, K, t);
      INFO(to_string(m.tag()) << " K=" << K);
      CHECK(x.value > 0.0);
      CHECK(std::abs(x.value - y.value) < 1e-6 * x.value);
      // Diffusion does not enter at leading order: exactly equal.
      CHECK(variance_call_leading(m.with_sigma2(0.09), K, t).value == x.value);
    }
    CHECK(variance_call_leading(m, 100.0, t).value < 1e-20);
    CHECK(variance_call_leading(m, 0.04, 2.0 * t).value ==
          doctest::Approx(2.0 * variance_call_leading(m, 0.04, t).value).epsilon(1e-14));
  }
  CHECK_THROWS_AS(variance_call_leading(models[0], 0.0, t), DomainError);
  CHECK_THROWS_AS(variance_call_leading(models[0], 0.04, 0.0), DomainError);
}

TEST_CASE("second-order hook reduces to the leading term when d2q = 0") {
  const LevyTriplet m = make_model(paper::kVgTable1);
  const quad::Options o{1e-14, 1e-12, 1000};
  QVSecondOrderHook hook;
  hook.q_tail = [&](double u) {
    const double r = std::sqrt(u);
    return m.nu().right_tail(r, o).value + m.nu().left_tail(r, o).value;
  };
  hook.d2q = [](double) { return 0.0; };
  const double t = 5.0 / 252.0;
  for (double K : {0.01, 0.04}) {
    const double lead = variance_call_leading(m, K, t).value;
    CHECK(variance_call_second_order(hook, K, t).value == doctest::Approx(lead).epsilon(1e-7));
  }
  // A constant d2q adds (t^2/2) d2q over an interval of unit length.
  QVSecondOrderHook box = hook;
  box.d2q = [](double u) { return u < 1.0 ? 3.0 : 0.0; };
  const double K = 0.04;
  CHECK(variance_call_second_order(box, K, t).value - variance_call_second_order(hook, K, t).value ==
        doctest::Approx(0.5 * t * t * 3.0 * (1.0 - K)).epsilon(1e-7));
  CHECK_THROWS_AS(variance_call_second_order(QVSecondOrderHook{}, K, t), DomainError);
}
