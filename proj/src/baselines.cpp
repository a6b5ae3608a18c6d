#include "drift/baselines.hpp"

#include <cmath>

namespace drift {

void DdmDetector::reset() {
  i_ = 0;
  p_ = 0.0;
  s_ = 0.0;
  p_min_ = 0.0;
  s_min_ = 0.0;
  has_min_ = false;
}

Signal DdmDetector::update(bool error) {
  i_ += 1;
  const double e = error ? 1.0 : 0.0;
  p_ += (e - p_) / static_cast<double>(i_);
  s_ = std::sqrt(std::max(p_ * (1.0 - p_), 0.0) / static_cast<double>(i_));
  if (i_ < warmup_) return Signal::none;

  const double stat = p_ + s_;
  if (!has_min_ || stat <= p_min_ + s_min_) {
    p_min_ = p_;
    s_min_ = s_;
    has_min_ = true;
  }
  if (stat > p_min_ + 3.0 * s_min_) {
    reset();
    return Signal::drift;
  }
  if (stat > p_min_ + 2.0 * s_min_) return Signal::warning;
  return Signal::none;
}

void EddmDetector::reset() {
  i_ = 0;
  num_errors_ = 0;
  num_gaps_ = 0;
  last_error_index_ = -1;
  mean_ = 0.0;
  m2_ = 0.0;
  max_stat_ = 0.0;
  has_max_ = false;
}

Signal EddmDetector::update(bool error) {
  i_ += 1;
  if (!error) return Signal::none;

  num_errors_ += 1;
  if (last_error_index_ < 0) {  // first error has no gap
    last_error_index_ = i_;
    return Signal::none;
  }
  const double dist = static_cast<double>(i_ - last_error_index_);
  last_error_index_ = i_;

  num_gaps_ += 1;
  const double old_mean = mean_;
  mean_ += (dist - mean_) / static_cast<double>(num_gaps_);
  m2_ += (dist - mean_) * (dist - old_mean);
  const double std = std::sqrt(m2_ / static_cast<double>(num_gaps_));
  const double stat = mean_ + 2.0 * std;

  if (!has_max_ || stat > max_stat_) {
    max_stat_ = stat;
    has_max_ = true;
  }
  if (num_errors_ < min_errors_ || max_stat_ <= 0.0) return Signal::none;

  const double ratio = stat / max_stat_;
  if (ratio < 0.90) {
    reset();
    return Signal::drift;
  }
  if (ratio < 0.95) return Signal::warning;
  return Signal::none;
}

}  // namespace drift
