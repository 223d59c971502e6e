#pragma once

#include <vector>

#include "permorder/rational.hpp"

namespace permorder {

/// SplitMix64 (Steele, Lea, Flood 2014). The generator is part of the
/// reproducibility contract: estimates are bit-stable for a given
/// (n, m, trials, seed) across runs and worker counts.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from [0, bound), bound >= 1, by multiply-shift
  /// with rejection.
  u64 below(u64 bound);

 private:
  u64 state_;
};

/// Cycle lengths of a uniform random permutation of n points, generated
/// sequentially: the cycle containing the least remaining point is uniform
/// on {1, ..., points remaining}. Lengths are emitted in that order.
std::vector<i64> sample_cycle_lengths(i64 n, SplitMix64& rng);

struct SampleEstimate {
  i64 n = 0, m = 0;
  u64 trials = 0, hits = 0;
  u64 seed = 0;
  double estimate = 0.0;   // hits / trials
  double std_error = 0.0;  // sqrt(estimate (1 - estimate) / trials)
};

/// Monte Carlo estimate of P(n, m). Trials are processed in fixed chunks of
/// 65536 whose RNG streams derive from (seed, chunk index), so the result is
/// independent of the worker count; workers = 0 picks the environment cap.
SampleEstimate estimate(i64 n, i64 m, u64 trials, u64 seed, int workers = 0);

/// Mean number of fixed points over sampled permutations; expectation is 1
/// with variance 1 (n >= 2), so mean ~ 1 +- 1/sqrt(trials).
struct FixedPointStat {
  u64 trials = 0;
  double mean = 0.0;
  double sigma_of_mean = 0.0;
};
FixedPointStat mean_fixed_points(i64 n, u64 trials, u64 seed, int workers = 0);

}  // namespace permorder
