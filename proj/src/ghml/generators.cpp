#include "ghml/generators.hpp"

#include "ghml/error.hpp"
#include "ghml/gh_solver.hpp"
#include "ghml/relation.hpp"

#include <algorithm>
#include <set>

namespace ghml {

std::uint64_t Prng::uniform_below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::internal_error, "uniform_below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

MetricSpace gen_general_position(Prng& rng, int n, const Rational& scale_hint) {
  if (n < 1) fail(Errc::invalid_argument, "point count must be at least 1");
  if (scale_hint <= 0) fail(Errc::invalid_argument, "scale_hint must be positive");
  if (n == 1) return MetricSpace::point();

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    std::set<Rational> used;
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n && distinct; ++j) {
        const auto step = rng.uniform_below(kRationalGridDenominator);
        Rational d = scale_hint + scale_hint * static_cast<int>(step) / kRationalGridDenominator;
        rows[i][j] = rows[j][i] = d;
        distinct = used.insert(d).second;
      }
    if (!distinct) continue;
    MetricSpace space = MetricSpace::validate(rows);
    if (!is_general_position(space))
      fail(Errc::internal_error, "band-sampled space is not in general position");
    return space;
  }
  fail(Errc::generation_failed, "could not sample distinct distances after 64 attempts");
}

MetricSpace gen_general_position(std::uint64_t seed, int n, const Rational& scale_hint) {
  Prng rng(seed);
  return gen_general_position(rng, n, scale_hint);
}

InBallSample gen_in_ball(Prng& rng, const MetricSpace& m, const Rational& epsilon,
                         std::span<const int> cluster_sizes, bool perturb_cross) {
  const int n = m.size();
  if (static_cast<int>(cluster_sizes.size()) != n)
    fail(Errc::invalid_cluster_spec, "need one cluster size per reference point");
  for (int size : cluster_sizes)
    if (size < 1) fail(Errc::invalid_cluster_spec, "cluster sizes must be at least 1");
  if (epsilon <= 0 || ExtendedRational(epsilon) > invariant_profile(m).s / 2)
    fail(Errc::epsilon_out_of_range, "epsilon must lie in (0, s(M)/2]");

  const ExtendedRational t = invariant_profile(m).t;
  const Rational beta = ExtendedRational::min(ExtendedRational(epsilon), t).value() / 2;
  const Rational gamma = perturb_cross ? beta / 4 : Rational(0);

  std::vector<int> owner;
  LabeledPartition blocks;
  blocks.reference_n = n;
  blocks.blocks.resize(n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < cluster_sizes[b]; ++c) {
      blocks.blocks[b].push_back(static_cast<int>(owner.size()));
      owner.push_back(b);
    }
  const int total = static_cast<int>(owner.size());

  std::vector<std::vector<Rational>> rows(total, std::vector<Rational>(total, Rational(0)));
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q) {
      if (owner[p] == owner[q]) {
        const auto step = rng.uniform_below(kRationalGridDenominator);
        rows[p][q] = beta / 2 + (beta / 2) * static_cast<int>(step) / kRationalGridDenominator;
      } else {
        Rational eta(0);
        if (gamma > 0) {
          const auto step = rng.uniform_below(kRationalGridDenominator + 1);
          eta = -gamma + 2 * gamma * static_cast<int>(step) / kRationalGridDenominator;
        }
        rows[p][q] = m.dist(owner[p], owner[q]) + eta;
      }
      rows[q][p] = rows[p][q];
    }

  InBallSample sample{MetricSpace::validate(rows), std::move(blocks), Rational(0)};

  std::vector<std::pair<int, int>> blowup;
  for (int p = 0; p < total; ++p) blowup.emplace_back(owner[p], p);
  sample.blowup_distortion = distortion(Correspondence(n, total, blowup), m, sample.space);
  if (!(sample.blowup_distortion < epsilon))
    fail(Errc::generation_failed, "blow-up correspondence distortion reached epsilon");
  if (total <= 8 && !(2 * gh_distance_exact(m, sample.space).distance < epsilon))
    fail(Errc::generation_failed, "sample fell outside the ball");
  return sample;
}

InBallSample gen_in_ball(std::uint64_t seed, const MetricSpace& m, const Rational& epsilon,
                         std::span<const int> cluster_sizes, bool perturb_cross) {
  Prng rng(seed);
  return gen_in_ball(rng, m, epsilon, cluster_sizes, perturb_cross);
}

}  // namespace ghml
