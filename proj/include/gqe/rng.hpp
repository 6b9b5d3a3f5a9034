#pragma once

#include <cstdint>

namespace gqe {

// xoshiro256++ with splitmix64 seeding. Every stochastic operation in the
// toolkit takes an explicit seed and draws from one of these, so runs are
// reproducible bit-for-bit: the generator and the uniform-double conversion
// use only integer arithmetic and exact IEEE scaling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

  // +1 or -1 with equal probability (SPSA perturbation components).
  int sign();

  // Stable seed derivation for independent streams (trials, groups, ...).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t a,
                              std::uint64_t b = 0);

 private:
  std::uint64_t s_[4];
};

}  // namespace gqe
