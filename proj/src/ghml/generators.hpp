#pragma once

#include "ghml/metric_space.hpp"
#include "ghml/partition.hpp"
#include "ghml/rational.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace ghml {

// Seeded PRNG behind all generators. mt19937_64 is fully specified by the
// standard, so a seed pins the byte-exact output stream; rejection sampling
// keeps uniform_below free of implementation-defined distribution code.
class Prng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Prng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 gen_;
};

// Random rationals are drawn from a grid of this many steps.
inline constexpr int kRationalGridDenominator = 1000;

// A space with delta > 0: pairwise distances sampled from the grid on
// [scale_hint, 2 scale_hint), resampled until all are distinct. Distances in
// that band satisfy every triangle inequality strictly.
MetricSpace gen_general_position(Prng& rng, int n, const Rational& scale_hint);
MetricSpace gen_general_position(std::uint64_t seed, int n, const Rational& scale_hint);

struct InBallSample {
  MetricSpace space;
  LabeledPartition blocks;      // the designated blocks, consecutive indices
  Rational blowup_distortion;   // distortion of the block correspondence, < epsilon
};

// A space in U_epsilon(M) with designated blocks of the given sizes. With
// beta = min(epsilon, t(M))/2, intra-block distances sit in [beta/2, beta)
// and cross-block distances are |ij|_M plus a perturbation within
// [-beta/4, beta/4] (zero when perturb_cross is false), which keeps the
// matrix a metric and the blow-up correspondence below epsilon.
InBallSample gen_in_ball(Prng& rng, const MetricSpace& m, const Rational& epsilon,
                         std::span<const int> cluster_sizes, bool perturb_cross = true);
InBallSample gen_in_ball(std::uint64_t seed, const MetricSpace& m, const Rational& epsilon,
                         std::span<const int> cluster_sizes, bool perturb_cross = true);

}  // namespace ghml
