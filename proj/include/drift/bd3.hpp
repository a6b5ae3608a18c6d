#pragma once

#include <cstdint>
#include <optional>

#include "drift/beta_math.hpp"
#include "drift/signal.hpp"

namespace drift {

// One batch's binary error outcomes: n trials, k misclassifications.
struct ErrorBatch {
  int n;
  int k;

  ErrorBatch(int n_, int k_);
  double error_rate() const { return static_cast<double>(k) / n; }
};

// Where the upper test boundary sits for a confidence mass m:
//   central    - upper endpoint of the central interval, quantile (1+m)/2
//   upper_tail - quantile m
enum class BoundMode { central, upper_tail };

struct Bd3Config {
  double pi0 = 0.5;          // prior error rate when nothing else is known
  double warn_mass = 0.950;
  double drift_mass = 0.997;
  double decay_a = 0.15;
  double decay_b = -7.0;
  BoundMode bound_mode = BoundMode::central;
  // When set, decay(t) is pinned to this constant instead of the schedule.
  std::optional<double> fixed_decay;

  void validate() const;  // throws std::invalid_argument
};

struct Bd3State {
  double alpha;
  double beta;
  std::int64_t t;
  double alpha0;
  double beta0;
};

struct Bd3Bounds {
  double warn_upper;
  double drift_upper;
};

// decay(t) = 1/exp(a*(t+b)) + 1.1; strictly decreasing in t for a > 0,
// approaching 1.1.
double decay_value(std::int64_t t, double a, double b);

// The BD3 detector. Maintains a beta posterior over the classifier error,
// tests each batch's error rate against the warn/drift upper bounds of the
// previous posterior, folds the batch in with decayed pseudo-counts, and
// re-seeds from the initial prior when drift fires.
class Bd3Detector {
 public:
  // n0: number of instances in the first batch; sets alpha0 = pi0*n0,
  // beta0 = (1-pi0)*n0.
  Bd3Detector(const Bd3Config& config, int n0);

  // Warn/drift upper bounds of the current posterior.
  Bd3Bounds bounds() const;

  // Processes one batch: test against the pre-update bounds, reset on drift,
  // then fold the batch into the posterior and advance the test counter.
  Signal update(const ErrorBatch& batch);

  // Back to (alpha0, beta0, t = 0).
  void reset();

  const Bd3State& state() const { return state_; }
  const Bd3Config& config() const { return config_; }

 private:
  double current_decay() const;

  Bd3Config config_;
  Bd3State state_;
};

}  // namespace drift
