#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace drift {

// Incremental Gaussian naive Bayes for binary classification. Per class it
// keeps Laplace-smoothed prior counts and per-feature Welford accumulators
// (count, mean, M2). Variances are floored at 1e-6; an untrained model
// predicts class 0; argmax ties break toward the lower class index.
// With dim == 0 the model reduces to a majority-class predictor.
class GaussianNaiveBayes {
 public:
  explicit GaussianNaiveBayes(std::size_t dim);

  int predict(std::span<const double> features) const;

  // Streaming update with one labeled instance.
  void train(std::span<const double> features, int label);

  void reset();

  bool trained() const { return count_[0] + count_[1] > 0; }
  std::size_t dim() const { return dim_; }
  double class_count(int label) const { return count_[label != 0]; }

  static constexpr double kVarianceFloor = 1e-6;

 private:
  std::size_t dim_;
  double count_[2];
  std::vector<double> mean_[2];
  std::vector<double> m2_[2];
};

}  // namespace drift
