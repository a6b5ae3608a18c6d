#include "drift/bd3.hpp"

#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <stdexcept>

#include "drift/rng.hpp"
#include "oracles.hpp"

using drift::Bd3Config;
using drift::Bd3Detector;
using drift::BetaParams;
using drift::ErrorBatch;
using drift::Signal;

TEST_CASE("ErrorBatch validates counts") {
  CHECK_THROWS_AS(ErrorBatch(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ErrorBatch(10, 11), std::invalid_argument);
  CHECK_THROWS_AS(ErrorBatch(10, -1), std::invalid_argument);
  CHECK(ErrorBatch(200, 10).error_rate() == doctest::Approx(0.05));
}

TEST_CASE("initialization splits the prior by pi0") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  CHECK(d.state().alpha0 == doctest::Approx(100.0));
  CHECK(d.state().beta0 == doctest::Approx(100.0));
  CHECK(d.state().t == 0);

  cfg.pi0 = 0.1;
  Bd3Detector d2(cfg, 100);
  CHECK(d2.state().alpha0 == doctest::Approx(10.0));
  CHECK(d2.state().beta0 == doctest::Approx(90.0));

  cfg.pi0 = 0.25;
  Bd3Detector d3(cfg, 8);
  CHECK(d3.state().alpha0 == doctest::Approx(2.0));
  CHECK(d3.state().beta0 == doctest::Approx(6.0));

  cfg.pi0 = 1.5;
  CHECK_THROWS_AS(Bd3Detector(cfg, 200), std::invalid_argument);
}

TEST_CASE("decay schedule") {
  CHECK_CLOSE(drift::decay_value(0, 0.15, -7.0), 3.957651118063164, 1e-12);
  CHECK_CLOSE(drift::decay_value(7, 0.15, -7.0), 2.1, 1e-12);
  CHECK_CLOSE(drift::decay_value(100000, 0.15, -7.0), 1.1, 1e-9);
  // strictly decreasing
  double prev = drift::decay_value(0, 0.15, -7.0);
  for (int t = 1; t <= 60; ++t) {
    const double d = drift::decay_value(t, 0.15, -7.0);
    CHECK(d < prev);
    CHECK(d > 1.1);
    prev = d;
  }
}

TEST_CASE("bounds are posterior quantiles") {
  Bd3Config cfg;
  Bd3Detector uniform(cfg, 2);  // alpha0 = beta0 = 1
  const auto b = uniform.bounds();
  CHECK_CLOSE(b.warn_upper, 0.975, 1e-9);
  CHECK_CLOSE(b.drift_upper, 0.9985, 1e-9);

  Bd3Detector d(cfg, 200);  // Beta(100, 100)
  const auto b2 = d.bounds();
  CHECK(b2.warn_upper < b2.drift_upper);
  const double via_bisection = oracle::quantile_bisection(
      [&](double x) { return drift::beta_cdf(BetaParams(100, 100), x); }, 0.9985);
  CHECK_CLOSE(b2.drift_upper, via_bisection, 1e-8);

  cfg.bound_mode = drift::BoundMode::upper_tail;
  Bd3Detector du(cfg, 2);
  CHECK_CLOSE(du.bounds().warn_upper, 0.950, 1e-9);
  CHECK_CLOSE(du.bounds().drift_upper, 0.997, 1e-9);
}

TEST_CASE("update folds the batch with decayed pseudo-counts") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  // advance the test counter to 7 with mean-preserving batches
  for (int i = 0; i < 7; ++i) d.update(ErrorBatch(200, 100));
  CHECK(d.state().t == 7);
  const double a7 = d.state().alpha;
  const double b7 = d.state().beta;

  const Signal sig = d.update(ErrorBatch(200, 10));
  CHECK(sig == Signal::none);
  CHECK_CLOSE(d.state().alpha, a7 / 2.1 + 10.0, 1e-12);
  CHECK_CLOSE(d.state().beta, b7 / 2.1 + 190.0, 1e-12);
  CHECK(d.state().t == 8);
}

TEST_CASE("worked example: one step from (100,100) at t=7") {
  const double decay = drift::decay_value(7, 0.15, -7.0);
  CHECK_CLOSE(100.0 / decay + 10.0, 57.61904761904762, 1e-11);
  CHECK_CLOSE(100.0 / decay + 190.0, 237.61904761904762, 1e-11);
}

TEST_CASE("certain error rate one signals drift and rebuilds from the prior") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  d.update(ErrorBatch(200, 100));
  d.update(ErrorBatch(200, 100));
  const Signal sig = d.update(ErrorBatch(200, 200));
  CHECK(sig == Signal::drift);
  // reset semantics: posterior = prior/decay(0) + batch, t = 1
  const double d0 = drift::decay_value(0, cfg.decay_a, cfg.decay_b);
  CHECK_CLOSE(d.state().alpha, 100.0 / d0 + 200.0, 1e-10);
  CHECK_CLOSE(d.state().beta, 100.0 / d0 + 0.0, 1e-10);
  CHECK(d.state().t == 1);
}

TEST_CASE("batch at the posterior mean never signals") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  CHECK(d.update(ErrorBatch(200, 100)) == Signal::none);
}

TEST_CASE("drift bound dominates the warn bound at every state") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  drift::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto b = d.bounds();
    CHECK(b.warn_upper < b.drift_upper);
    int k = 0;
    for (int j = 0; j < 200; ++j) k += rng.bernoulli(0.3);
    d.update(ErrorBatch(200, k));
  }
}

TEST_CASE("conjugacy: decay pinned to one reduces to exact counting") {
  Bd3Config cfg;
  cfg.fixed_decay = 1.0;
  Bd3Detector d(cfg, 200);
  drift::Rng rng(17);
  double sum_k = 0.0, sum_nk = 0.0;
  for (int i = 0; i < 40; ++i) {
    const int n = 50 + static_cast<int>(rng.raw() % 300);
    int k = 0;
    for (int j = 0; j < n; ++j) k += rng.bernoulli(0.35);
    // keep below the drift bound so no reset interferes: rate 0.35 vs a
    // posterior that tracks 0.35 after the first few batches; skip batches
    // that would signal by checking first
    const auto b = d.bounds();
    if (static_cast<double>(k) / n > b.drift_upper) continue;
    d.update(ErrorBatch(n, k));
    sum_k += k;
    sum_nk += n - k;
    CHECK_CLOSE(d.state().alpha, 100.0 + sum_k, 1e-9);
    CHECK_CLOSE(d.state().beta, 100.0 + sum_nk, 1e-9);
  }

  // without decay: prior (100,100) + batch (200,10) -> (110, 290)
  Bd3Detector d2(cfg, 200);
  d2.update(ErrorBatch(200, 10));
  CHECK_CLOSE(d2.state().alpha, 110.0, 1e-12);
  CHECK_CLOSE(d2.state().beta, 290.0, 1e-12);
}

TEST_CASE("pseudo-count sum converges to n + n/(decay-1)") {
  SUBCASE("pinned decay 1.1") {
    Bd3Config cfg;
    cfg.fixed_decay = 1.1;
    Bd3Detector d(cfg, 200);
    for (int i = 0; i < 300; ++i) d.update(ErrorBatch(200, 100));
    const double sum = d.state().alpha + d.state().beta;
    CHECK(sum == doctest::Approx(2200.0).epsilon(0.001));
  }
  SUBCASE("scheduled decay approaches the same limit") {
    Bd3Config cfg;
    Bd3Detector d(cfg, 200);
    for (int i = 0; i < 300; ++i) d.update(ErrorBatch(200, 100));
    const double sum = d.state().alpha + d.state().beta;
    CHECK(sum == doctest::Approx(2200.0).epsilon(0.01));
  }
}

TEST_CASE("monotone sensitivity in the batch error count") {
  Bd3Config cfg;
  Bd3Detector base(cfg, 200);
  for (int i = 0; i < 5; ++i) base.update(ErrorBatch(200, 40));

  int prev = 2;  // none=0 < warning=1 < drift=2, scanning downward from k=200
  for (int k = 200; k >= 0; k -= 5) {
    Bd3Detector d = base;
    const Signal s = d.update(ErrorBatch(200, k));
    CHECK(static_cast<int>(s) <= prev);
    prev = static_cast<int>(s);
  }
}

TEST_CASE("reset restores the initial prior") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);
  for (int i = 0; i < 9; ++i) d.update(ErrorBatch(200, 60));
  d.reset();
  CHECK(d.state().alpha == doctest::Approx(100.0));
  CHECK(d.state().beta == doctest::Approx(100.0));
  CHECK(d.state().t == 0);
}

TEST_CASE("error rates between the bounds signal warning") {
  Bd3Config cfg;
  Bd3Detector d(cfg, 200);  // Beta(100,100): warn ~0.569, drift ~0.604
  const auto b = d.bounds();

  Bd3Detector warn = d;
  const int k_warn = static_cast<int>(200.0 * (b.warn_upper + b.drift_upper) / 2.0);
  CHECK(warn.update(ErrorBatch(200, k_warn)) == Signal::warning);

  Bd3Detector drift = d;
  CHECK(drift.update(ErrorBatch(200, 140)) == Signal::drift);
}
