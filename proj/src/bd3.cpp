#include "drift/bd3.hpp"

#include <cmath>
#include <stdexcept>

namespace drift {

ErrorBatch::ErrorBatch(int n_, int k_) : n(n_), k(k_) {
  if (n < 1) throw std::invalid_argument("ErrorBatch: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("ErrorBatch: k must be in [0, n]");
}

void Bd3Config::validate() const {
  if (!(pi0 > 0.0 && pi0 < 1.0)) {
    throw std::invalid_argument("Bd3Config: pi0 must be in (0,1)");
  }
  if (!(warn_mass > 0.0 && warn_mass < drift_mass && drift_mass < 1.0)) {
    throw std::invalid_argument("Bd3Config: need 0 < warn_mass < drift_mass < 1");
  }
  if (fixed_decay && !(*fixed_decay > 0.0)) {
    throw std::invalid_argument("Bd3Config: fixed_decay must be > 0");
  }
}

double decay_value(std::int64_t t, double a, double b) {
  return 1.0 / std::exp(a * (static_cast<double>(t) + b)) + 1.1;
}

Bd3Detector::Bd3Detector(const Bd3Config& config, int n0) : config_(config) {
  config_.validate();
  if (n0 < 1) throw std::invalid_argument("Bd3Detector: n0 must be >= 1");
  state_.alpha0 = config_.pi0 * n0;
  state_.beta0 = (1.0 - config_.pi0) * n0;
  state_.alpha = state_.alpha0;
  state_.beta = state_.beta0;
  state_.t = 0;
}

void Bd3Detector::reset() {
  state_.alpha = state_.alpha0;
  state_.beta = state_.beta0;
  state_.t = 0;
}

double Bd3Detector::current_decay() const {
  if (config_.fixed_decay) return *config_.fixed_decay;
  return decay_value(state_.t, config_.decay_a, config_.decay_b);
}

Bd3Bounds Bd3Detector::bounds() const {
  const BetaParams posterior(state_.alpha, state_.beta);
  double qw, qd;
  if (config_.bound_mode == BoundMode::central) {
    qw = (1.0 + config_.warn_mass) / 2.0;
    qd = (1.0 + config_.drift_mass) / 2.0;
  } else {
    qw = config_.warn_mass;
    qd = config_.drift_mass;
  }
  return {beta_quantile(posterior, qw), beta_quantile(posterior, qd)};
}

Signal Bd3Detector::update(const ErrorBatch& batch) {
  const Bd3Bounds b = bounds();
  const double pi = batch.error_rate();

  Signal signal = Signal::none;
  if (pi > b.drift_upper) {
    signal = Signal::drift;
    reset();
  } else if (pi > b.warn_upper) {
    signal = Signal::warning;
  }

  // The (possibly reset) posterior becomes the prior; decay is evaluated at
  // the pre-increment test counter.
  const double d = current_decay();
  state_.alpha = state_.alpha / d + batch.k;
  state_.beta = state_.beta / d + (batch.n - batch.k);
  state_.t += 1;
  return signal;
}

}  // namespace drift
