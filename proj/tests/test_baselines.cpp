#include "drift/baselines.hpp"

#include <doctest.h>

#include "approx.hpp"

#include <vector>

#include "drift/rng.hpp"

using drift::DdmDetector;
using drift::EddmDetector;
using drift::Signal;

namespace {

template <typename D>
std::vector<Signal> drive(D& det, const std::vector<int>& errors) {
  std::vector<Signal> out;
  out.reserve(errors.size());
  for (const int e : errors) out.push_back(det.update(e != 0));
  return out;
}

}  // namespace

TEST_CASE("ddm: error burst after a clean run signals drift") {
  DdmDetector d;
  bool drifted = false;
  for (int i = 0; i < 1000; ++i) d.update(false);
  for (int i = 0; i < 200 && !drifted; ++i) drifted = d.update(true) == Signal::drift;
  CHECK(drifted);
}

TEST_CASE("ddm: all-zero stream never signals") {
  DdmDetector d;
  for (int i = 0; i < 100000; ++i) CHECK(d.update(false) == Signal::none);
}

TEST_CASE("ddm: warmup gate") {
  DdmDetector d;
  for (int i = 0; i < 29; ++i) CHECK(d.update(true) == Signal::none);
}

TEST_CASE("ddm: false-drift frequency below 1e-3 per instance on i.i.d. streams") {
  for (const double mu : {0.1, 0.3}) {
    DdmDetector d;
    drift::Rng rng(101);
    int drifts = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      if (d.update(rng.bernoulli(mu)) == Signal::drift) ++drifts;
    }
    CHECK(drifts < n / 1000);
  }
}

TEST_CASE("ddm: deterministic on identical sequences") {
  drift::Rng rng(7);
  std::vector<int> errors;
  for (int i = 0; i < 5000; ++i) errors.push_back(rng.bernoulli(0.2));
  DdmDetector a, b;
  CHECK(drive(a, errors) == drive(b, errors));
}

TEST_CASE("ddm: behavior after drift equals a fresh instance") {
  DdmDetector d;
  for (int i = 0; i < 500; ++i) d.update(false);
  Signal s = Signal::none;
  int i = 0;
  while (s != Signal::drift && i < 200) {
    s = d.update(true);
    ++i;
  }
  REQUIRE(s == Signal::drift);

  drift::Rng rng(13);
  std::vector<int> suffix;
  for (int j = 0; j < 3000; ++j) suffix.push_back(rng.bernoulli(0.3));
  DdmDetector fresh;
  CHECK(drive(d, suffix) == drive(fresh, suffix));
}

TEST_CASE("eddm: gap collapse signals drift") {
  EddmDetector d;
  std::vector<int> errors;
  for (int i = 0; i < 40 * 100; ++i) errors.push_back(i % 100 == 99);  // gap 100
  for (int i = 0; i < 4000; ++i) errors.push_back(i % 5 == 4);         // gap 5
  bool drifted = false;
  for (const int e : errors) drifted = drifted || d.update(e != 0) == Signal::drift;
  CHECK(drifted);
}

TEST_CASE("eddm: error-free stream never signals") {
  EddmDetector d;
  for (int i = 0; i < 100000; ++i) CHECK(d.update(false) == Signal::none);
}

TEST_CASE("eddm: constant gaps keep the ratio at one") {
  EddmDetector d;
  for (int i = 0; i < 200 * 17; ++i) {
    CHECK(d.update(i % 17 == 16) == Signal::none);
  }
  CHECK_CLOSE(d.mean_distance(), 17.0, 1e-12);
}

TEST_CASE("eddm: deterministic on identical sequences") {
  drift::Rng rng(29);
  std::vector<int> errors;
  for (int i = 0; i < 5000; ++i) errors.push_back(rng.bernoulli(0.15));
  EddmDetector a, b;
  CHECK(drive(a, errors) == drive(b, errors));
}

TEST_CASE("eddm: behavior after drift equals a fresh instance") {
  EddmDetector d;
  std::vector<int> errors;
  for (int i = 0; i < 40 * 100; ++i) errors.push_back(i % 100 == 99);
  for (int i = 0; i < 6000; ++i) errors.push_back(i % 5 == 4);
  bool drifted = false;
  for (const int e : errors) {
    if (d.update(e != 0) == Signal::drift) {
      drifted = true;
      break;
    }
  }
  REQUIRE(drifted);

  drift::Rng rng(31);
  std::vector<int> suffix;
  for (int j = 0; j < 3000; ++j) suffix.push_back(rng.bernoulli(0.1));
  EddmDetector fresh;
  CHECK(drive(d, suffix) == drive(fresh, suffix));
}

TEST_CASE("ddm: warning zone sits between two and three sigma") {
  // error rate steps 0.1 -> 0.2: the statistic climbs through the warning
  // band before the drift threshold
  DdmDetector d;
  drift::Rng rng(211);
  for (int i = 0; i < 2000; ++i) d.update(rng.bernoulli(0.1));
  bool warned_before_drift = false;
  for (int i = 0; i < 4000; ++i) {
    const Signal s = d.update(rng.bernoulli(0.2));
    if (s == Signal::warning) warned_before_drift = true;
    if (s == Signal::drift) break;
  }
  CHECK(warned_before_drift);
}

TEST_CASE("eddm: ratio between 0.90 and 0.95 is a warning") {
  // alternating gaps 10/30 pin the maximum at mean + 2*std = 40; a run of
  // constant 20-gaps then shrinks the pooled std so the statistic glides
  // down through the warning band before it would reach the drift line
  EddmDetector d;
  Signal last = Signal::none;
  bool warned = false, drifted = false;
  auto emit_gap = [&](int gap) {
    for (int i = 0; i < gap - 1; ++i) d.update(false);
    last = d.update(true);
    warned = warned || last == Signal::warning;
    drifted = drifted || last == Signal::drift;
  };
  d.update(true);  // anchor error
  for (int p = 0; p < 20; ++p) {
    emit_gap(10);
    emit_gap(30);
  }
  CHECK(!warned);
  CHECK(!drifted);
  for (int j = 0; j < 20; ++j) emit_gap(20);
  CHECK(warned);
  CHECK(!drifted);
  CHECK(last == Signal::warning);
}
