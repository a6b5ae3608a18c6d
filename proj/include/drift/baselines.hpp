#pragma once

#include <cstdint>

#include "drift/signal.hpp"

namespace drift {

// Drift Detection Method: monitors the running error probability p and its
// binomial standard deviation s = sqrt(p(1-p)/i), records the minimum of
// p + s, and tests against 2-sigma / 3-sigma excess over that minimum.
class DdmDetector {
 public:
  explicit DdmDetector(int warmup = 30) : warmup_(warmup) { reset(); }

  Signal update(bool error);
  void reset();

  std::int64_t instances() const { return i_; }
  double p() const { return p_; }
  double s() const { return s_; }

 private:
  int warmup_;
  std::int64_t i_ = 0;
  double p_ = 0.0;
  double s_ = 0.0;
  double p_min_ = 0.0;
  double s_min_ = 0.0;
  bool has_min_ = false;
};

// Early Drift Detection Method: monitors the distances (instance gaps)
// between consecutive errors. Tracks the running mean and population
// standard deviation of the gaps, the historical maximum of mean + 2*std,
// and after 30 observed errors signals when the current statistic falls
// below 95% (warning) / 90% (drift) of that maximum. A constant-gap stream
// keeps the ratio at exactly 1.
class EddmDetector {
 public:
  explicit EddmDetector(int min_errors = 30) : min_errors_(min_errors) { reset(); }

  Signal update(bool error);
  void reset();

  std::int64_t errors() const { return num_errors_; }
  double mean_distance() const { return mean_; }

 private:
  int min_errors_;
  std::int64_t i_ = 0;
  std::int64_t num_errors_ = 0;
  std::int64_t num_gaps_ = 0;
  std::int64_t last_error_index_ = -1;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double max_stat_ = 0.0;
  bool has_max_ = false;
};

}  // namespace drift
