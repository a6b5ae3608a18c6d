#include "drift/naive_bayes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace drift {

GaussianNaiveBayes::GaussianNaiveBayes(std::size_t dim) : dim_(dim) {
  count_[0] = count_[1] = 0.0;
  for (int c = 0; c < 2; ++c) {
    mean_[c].assign(dim_, 0.0);
    m2_[c].assign(dim_, 0.0);
  }
}

void GaussianNaiveBayes::reset() {
  count_[0] = count_[1] = 0.0;
  for (int c = 0; c < 2; ++c) {
    mean_[c].assign(dim_, 0.0);
    m2_[c].assign(dim_, 0.0);
  }
}

int GaussianNaiveBayes::predict(std::span<const double> features) const {
  if (features.size() != dim_) {
    throw std::invalid_argument("naive_bayes: feature dimensionality mismatch");
  }
  const double total = count_[0] + count_[1];
  if (total <= 0.0) return 0;

  double best_score = 0.0;
  int best_class = -1;
  for (int c = 0; c < 2; ++c) {
    if (count_[c] <= 0.0) continue;
    double score = std::log((count_[c] + 1.0) / (total + 2.0));
    for (std::size_t f = 0; f < dim_; ++f) {
      const double var = std::max(m2_[c][f] / count_[c], kVarianceFloor);
      const double d = features[f] - mean_[c][f];
      score += -0.5 * (std::log(2.0 * std::numbers::pi * var) + d * d / var);
    }
    if (best_class < 0 || score > best_score) {
      best_score = score;
      best_class = c;
    }
  }
  return best_class < 0 ? 0 : best_class;
}

void GaussianNaiveBayes::train(std::span<const double> features, int label) {
  if (features.size() != dim_) {
    throw std::invalid_argument("naive_bayes: feature dimensionality mismatch");
  }
  const int c = label != 0;
  count_[c] += 1.0;
  for (std::size_t f = 0; f < dim_; ++f) {
    const double delta = features[f] - mean_[c][f];
    mean_[c][f] += delta / count_[c];
    m2_[c][f] += delta * (features[f] - mean_[c][f]);
  }
}

}  // namespace drift
