#pragma once

#include <cstdint>
#include <random>

namespace drift {

// Seeded PRNG with an explicit uniform-double derivation so that generated
// streams are bit-identical across platforms. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; doubles are taken from the
// top 53 bits, avoiding the implementation-defined std::*_distribution
// classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace drift
