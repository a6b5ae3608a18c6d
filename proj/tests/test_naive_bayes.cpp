#include "drift/naive_bayes.hpp"

#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "drift/rng.hpp"

using drift::GaussianNaiveBayes;

TEST_CASE("untrained model predicts the default class") {
  GaussianNaiveBayes nb(2);
  CHECK(nb.predict(std::array{1.0, 2.0}) == 0);
}

TEST_CASE("single-class training forces that class") {
  GaussianNaiveBayes nb(1);
  for (int i = 0; i < 10; ++i) nb.train(std::array{static_cast<double>(i)}, 1);
  CHECK(nb.predict(std::array{-100.0}) == 1);
  CHECK(nb.predict(std::array{100.0}) == 1);
}

TEST_CASE("well-separated classes are classified almost perfectly") {
  GaussianNaiveBayes nb(1);
  drift::Rng rng(5);
  auto gauss = [&](double mean) {
    // Box-Muller from the deterministic uniform stream
    const double u1 = rng.uniform(1e-12, 1.0);
    const double u2 = rng.uniform();
    return mean + std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  };
  for (int i = 0; i < 500; ++i) {
    nb.train(std::array{gauss(0.0)}, 0);
    nb.train(std::array{gauss(10.0)}, 1);
  }
  int correct = 0;
  for (int i = 0; i < 1000; ++i) {
    correct += nb.predict(std::array{gauss(0.0)}) == 0;
    correct += nb.predict(std::array{gauss(10.0)}) == 1;
  }
  CHECK(correct > 1980);
}

TEST_CASE("ties break toward the lower class index") {
  GaussianNaiveBayes nb(1);
  nb.train(std::array{-1.0}, 0);
  nb.train(std::array{1.0}, 0);
  nb.train(std::array{-1.0}, 1);
  nb.train(std::array{1.0}, 1);
  CHECK(nb.predict(std::array{0.0}) == 0);
}

TEST_CASE("repeated identical instances hit the variance floor") {
  GaussianNaiveBayes nb(1);
  for (int i = 0; i < 50; ++i) nb.train(std::array{3.25}, 1);
  // mean equals the value; prediction is still well-defined
  CHECK(nb.predict(std::array{3.25}) == 1);
  CHECK(nb.class_count(1) == doctest::Approx(50.0));
}

TEST_CASE("batchwise and concatenated training agree") {
  drift::Rng rng(9);
  std::vector<std::array<double, 2>> xs;
  std::vector<int> ys;
  for (int i = 0; i < 400; ++i) {
    xs.push_back({rng.uniform(0.0, 4.0), rng.uniform(-2.0, 2.0)});
    ys.push_back(rng.bernoulli(0.4));
  }
  GaussianNaiveBayes split(2), joint(2);
  for (int i = 0; i < 200; ++i) split.train(xs[i], ys[i]);
  for (int i = 200; i < 400; ++i) split.train(xs[i], ys[i]);
  for (int i = 0; i < 400; ++i) joint.train(xs[i], ys[i]);
  drift::Rng probe(10);
  for (int i = 0; i < 100; ++i) {
    const std::array<double, 2> x{probe.uniform(0.0, 4.0), probe.uniform(-2.0, 2.0)};
    CHECK(split.predict(x) == joint.predict(x));
  }
}

TEST_CASE("zero-feature model is a majority vote") {
  GaussianNaiveBayes nb(0);
  nb.train({}, 1);
  nb.train({}, 1);
  nb.train({}, 0);
  CHECK(nb.predict({}) == 1);
  nb.train({}, 0);
  CHECK(nb.predict({}) == 0);  // tie -> lower index
}

TEST_CASE("dimensionality mismatch throws") {
  GaussianNaiveBayes nb(3);
  CHECK_THROWS_AS(nb.train(std::array{1.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(nb.predict(std::array{1.0, 2.0}), std::invalid_argument);
}
