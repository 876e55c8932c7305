#include "doctest.h"
#include "levy/errors.h"
#include "levy/pricing_oracle.h"
#include "levy/smile_asymptotics.h"
#include "levy/stable_atm.h"
#include "test_support.h"

#include <cmath>

using namespace levy;

namespace {

LevyTriplet cgmy15() { return make_model(CGMYParams{1.1, 5.09, 8.6, 1.5}); }

}  // namespace

TEST_CASE("E(Z+) by inversion matches the closed form") {
  for (double a : {1.1, 1.3, 1.5, 1.7, 1.9}) {
    const StableLimit s(a, 0.8);
    INFO("alpha=" << a);
    CHECK(s.ez_plus() > 0.0);
    CHECK(s.ez_plus() == doctest::Approx(s.ez_plus_closed_form()).epsilon(1e-8));
  }
}

TEST_CASE("stable density and characteristic function") {
  const StableLimit s(1.5, 1.3);
  CHECK(s.zeta(0.0) == 1.0);
  CHECK(s.zeta(0.7) == doctest::Approx(std::exp(-std::pow(1.3 * 0.7, 1.5))).epsilon(1e-15));
  CHECK(s.density(0.4) == doctest::Approx(s.density(-0.4)).epsilon(1e-15));
  // Mass and first absolute moment by trapezoid on [0, 400] plus the
  // algebraic tail beyond, against 1/2 and E(Z+).
  double mass = 0.0, mean = 0.0;
  const double h = 1e-3, L = 400.0;
  for (int i = 0; i <= static_cast<int>(L / h); ++i) {
    const double z = i * h;
    const double w = (i == 0 || i == static_cast<int>(L / h)) ? 0.5 : 1.0;
    mass += w * h * s.density(z);
    mean += w * h * z * s.density(z);
  }
  // Tail: density ~ A z^{-1-alpha}, A = c^alpha Gamma(1+alpha) sin(pi alpha/2) / pi.
  const double A = std::pow(1.3, 1.5) * std::tgamma(2.5) * std::sin(0.75 * M_PI) / M_PI;
  mass += A / 1.5 * std::pow(L, -1.5);
  mean += A / 0.5 * std::pow(L, -0.5);
  CHECK(mass == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(mean == doctest::Approx(s.ez_plus()).epsilon(1e-4));
}

TEST_CASE("Y -> 2: E(Z+) approaches the half-normal mean") {
  const double c = 0.9;
  const StableLimit s(1.99, c);
  // zeta = exp(-c^2 u^2) at alpha = 2: N(0, 2c^2), E(Z+) = c / sqrt(pi).
  CHECK(std::abs(s.ez_plus() / (c / std::sqrt(M_PI)) - 1.0) < 0.02);
}

TEST_CASE("dual oracle: inversion versus 10^7-sample stable simulation") {
  const LevyTriplet m = make_model(CGMYParams{0.5, 3.0, 4.0, 1.5});
  const StableLimit s = stable_limit(share_measure_transform(m));
  const MonteCarloMean mc = simulate_stable_positive_part(s.alpha(), s.scale(), 10000000, 12345);
  INFO("inversion " << s.ez_plus() << " mc " << mc.mean << " se " << mc.std_error);
  MESSAGE("E(Z+) z-score (mc - inversion)/se = " << (mc.mean - s.ez_plus()) / mc.std_error);
  CHECK(mc.samples == 10000000);
  CHECK(std::abs(mc.mean - s.ez_plus()) < 3.0 * mc.std_error);
  // Determinism of the seeded sampler.
  CHECK(simulate_stable_positive_part(1.5, 1.0, 1000, 7).mean ==
        simulate_stable_positive_part(1.5, 1.0, 1000, 7).mean);
}

TEST_CASE("scale depends only on (C, Y); share-measure parameters") {
  const double c0 = stable_limit(make_model(CGMYParams{1.1, 5.09, 8.6, 1.5})).scale();
  CHECK(stable_limit(make_model(CGMYParams{1.1, 2.0, 20.0, 1.5})).scale() == c0);
  CHECK(stable_limit(make_model(CGMYParams{1.1, 9.0, 1.5, 1.5})).scale() == c0);
  CHECK(c0 == stable_scale(1.1, 1.5));
  CHECK(c0 == doctest::Approx(std::pow(2.0 * 1.1 * std::tgamma(-1.5) * std::abs(std::cos(0.75 * M_PI)), 1.0 / 1.5))
                  .epsilon(1e-15));

  const LevyTriplet m = cgmy15();
  const LevyTriplet share = share_measure_transform(m);
  const auto p = tempered_stable_params(share);
  REQUIRE(p.has_value());
  CHECK(p->C == 1.1);
  CHECK(p->G == 5.09 + 1.0);
  CHECK(p->M == 8.6 - 1.0);
  CHECK(p->Y == 1.5);
  for (double t : {1e-2, 1e-4}) {
    const double u = 0.8;
    const cplx expected = std::exp(t * share.psi(cplx(u * std::pow(t, -1.0 / 1.5), 0.0)));
    CHECK(std::abs(char_exponent_convergence(m, u, t) - expected) < 1e-15);
  }
  CHECK(atm_price_limit(m, 1e-3) == atm_price_limit(stable_limit(share), 1e-3));
}

TEST_CASE("characteristic-function convergence diagnostics") {
  const LevyTriplet m = cgmy15();
  const StableLimit s = stable_limit(share_measure_transform(m));
  for (double t : {1e-2, 1e-5}) {
    CHECK(char_exponent_convergence(m, 0.0, t) == cplx(1.0, 0.0));
    const cplx a = char_exponent_convergence(m, 0.6, t), b = char_exponent_convergence(m, -0.6, t);
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
  }
  double prev = 1e9;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    const double gap = std::abs(char_exponent_convergence(m, 1.0, t) - s.zeta(1.0));
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("ATM limits: scaling, ordering and Black-Scholes consistency") {
  const LevyTriplet m = cgmy15();
  const StableLimit s = stable_limit(share_measure_transform(m));
  for (double t : {1e-2, 1e-4, 1e-6}) {
    CHECK(atm_price_limit(s, t) / std::pow(t, 1.0 / 1.5) == doctest::Approx(s.ez_plus()).epsilon(1e-14));
    CHECK(atm_implied_vol_limit(s, t) / std::pow(t, 1.0 / 1.5 - 0.5) ==
          doctest::Approx(std::sqrt(2.0 * M_PI) * s.ez_plus()).epsilon(1e-14));
  }
  const double t = 1e-5;
  CHECK(std::abs(bs_price(atm_implied_vol_limit(s, t), 0.0, t) / atm_price_limit(s, t) - 1.0) < 0.02);

  // Higher Y decays more slowly (exponent 1/Y).
  const StableLimit lo = stable_limit(make_model(CGMYParams{1.0, 5.0, 8.0, 1.2}));
  const StableLimit hi = stable_limit(make_model(CGMYParams{1.0, 5.0, 8.0, 1.8}));
  CHECK(atm_price_limit(hi, 1e-4) / hi.ez_plus() > atm_price_limit(lo, 1e-4) / lo.ez_plus());
  // Y -> 2: the vol exponent 1/Y - 1/2 tends to 0.
  const StableLimit y199 = stable_limit(make_model(CGMYParams{1.0, 5.0, 8.0, 1.99}));
  CHECK(atm_implied_vol_limit(y199, 1e-6) / atm_implied_vol_limit(y199, 1e-2) ==
        doctest::Approx(std::pow(1e-4, 1.0 / 1.99 - 0.5)).epsilon(1e-12));
  CHECK(1.0 / 1.99 - 0.5 < 3e-3);
}

TEST_CASE("rescaled oracle ATM price trends monotonically toward E*(Z+)") {
  const LevyTriplet m = cgmy15();
  const StableLimit s = stable_limit(share_measure_transform(m));
  double prev = 0.0;
  for (double t : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double r = ift_call(m, 0.0, t).price_per_spot / atm_price_limit(s, t);
    MESSAGE("t=" << t << " oracle / limit = " << r);
    CHECK(r > prev);
    CHECK(r < 1.0);
    prev = r;
  }
}

TEST_CASE("Lemma 4.3 tail bound") {
  const LevyTriplet sym = make_model(CGMYParams{1.1, 8.6, 8.6, 1.5});
  double max_ratio = 0.0;
  for (double t : {1e-4, 1e-3}) {
    for (double x : {0.1, 0.5, 1.0}) {
      const TailBoundResult r = tail_bound_check(sym, t, x, 10.0);
      INFO("t=" << t << " x=" << x << " " << r.reason);
      CHECK(r.status == CheckStatus::Pass);
      CHECK(r.probability >= 0.0);
      CHECK(r.ratio == doctest::Approx(r.probability / (std::pow(x, -1.5) * t)).epsilon(1e-14));
      max_ratio = std::max(max_ratio, r.ratio);
    }
  }
  MESSAGE("measured Lemma 4.3 constant over the grid: " << max_ratio);
  CHECK(max_ratio < 1.0);
  // Large x, small t: large margin.
  CHECK(tail_bound_check(sym, 1e-5, 2.0, 10.0).ratio < 0.1);
  // A bound below the measured constant fails.
  CHECK(tail_bound_check(sym, 1e-3, 0.1, 1e-6).status == CheckStatus::Fail);

  const TailBoundResult huge = tail_bound_check(sym, 100.0, 1.0, 10.0);
  CHECK(huge.status == CheckStatus::Skipped);
  CHECK_FALSE(huge.reason.empty());
  CHECK(tail_bound_check(cgmy15(), 1e-3, 0.1, 10.0).status == CheckStatus::Skipped);  // G != M
  CHECK(tail_bound_check(make_model(paper::kVgTable1), 1e-3, 0.1, 10.0).status == CheckStatus::Skipped);
  CHECK(to_string(CheckStatus::Skipped) == "skipped");
}

TEST_CASE("domain of the stable limit") {
  CHECK_THROWS_AS(stable_limit(make_model(paper::kCgmyTable3)), DomainError);
  CHECK_THROWS_AS(stable_limit(make_model(paper::kVgTable1)), DomainError);
  CHECK_THROWS_AS(stable_limit(make_model(NIGParams{15.0, -3.0, 0.5, 0.0})), DomainError);
  const StableLimit driftless = stable_limit(make_model(paper::kCgmyTable3), true);
  CHECK(driftless.alpha() == 0.4456);
  CHECK(driftless.scale() > 0.0);
  CHECK_THROWS_AS(driftless.density(0.1), DomainError);
  CHECK(std::isinf(driftless.ez_plus()));
  CHECK_THROWS_AS(StableLimit(1.5, -1.0), DomainError);
  CHECK_THROWS_AS(StableLimit(2.5, 1.0), DomainError);
  CHECK_THROWS_AS(StableLimit(1.0, 1.0), DomainError);
}
