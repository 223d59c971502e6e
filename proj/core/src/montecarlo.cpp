#include "permorder/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "permorder/parallel.hpp"

namespace permorder {

namespace {

constexpr u64 kChunk = 1u << 16;

u64 mix64(u64 x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Stream for one chunk: decorrelated from neighbouring chunks and from the
// raw seed value by hashing both.
SplitMix64 chunk_stream(u64 seed, u64 chunk) {
  return SplitMix64(mix64(seed) ^ mix64(chunk + 0x9e3779b97f4a7c15ULL));
}

}  // namespace

u64 SplitMix64::below(u64 bound) {
  if (bound == 0) throw std::invalid_argument("below: bound >= 1 required");
  const u64 threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const u64 x = next();
    const unsigned __int128 product = static_cast<unsigned __int128>(x) * bound;
    if (static_cast<u64>(product) >= threshold) {
      return static_cast<u64>(product >> 64);
    }
  }
}

std::vector<i64> sample_cycle_lengths(i64 n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("sample_cycle_lengths: n >= 1 required");
  std::vector<i64> lengths;
  i64 remaining = n;
  while (remaining > 0) {
    const i64 len = 1 + static_cast<i64>(rng.below(static_cast<u64>(remaining)));
    lengths.push_back(len);
    remaining -= len;
  }
  return lengths;
}

SampleEstimate estimate(i64 n, i64 m, u64 trials, u64 seed, int workers) {
  if (n < 1 || m < 1) throw std::invalid_argument("estimate: n, m >= 1 required");
  if (trials < 1) throw std::invalid_argument("estimate: trials >= 1 required");

  const u64 chunks = (trials + kChunk - 1) / kChunk;
  std::vector<u64> chunk_hits(chunks, 0);
  parallel_for(0, static_cast<i64>(chunks), [&](i64 c) {
    const u64 lo = static_cast<u64>(c) * kChunk;
    const u64 hi = std::min(trials, lo + kChunk);
    SplitMix64 rng = chunk_stream(seed, static_cast<u64>(c));
    u64 hits = 0;
    for (u64 trial = lo; trial < hi; ++trial) {
      i64 remaining = n;
      bool hit = true;
      while (remaining > 0) {
        const i64 len = 1 + static_cast<i64>(rng.below(static_cast<u64>(remaining)));
        if (m % len != 0) {
          hit = false;
          break;
        }
        remaining -= len;
      }
      if (hit) ++hits;
    }
    chunk_hits[static_cast<std::size_t>(c)] = hits;
  }, workers);

  SampleEstimate est;
  est.n = n;
  est.m = m;
  est.trials = trials;
  est.seed = seed;
  for (u64 h : chunk_hits) est.hits += h;
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

FixedPointStat mean_fixed_points(i64 n, u64 trials, u64 seed, int workers) {
  if (n < 1) throw std::invalid_argument("mean_fixed_points: n >= 1 required");
  if (trials < 1) throw std::invalid_argument("mean_fixed_points: trials >= 1 required");

  const u64 chunks = (trials + kChunk - 1) / kChunk;
  std::vector<u64> chunk_fixed(chunks, 0);
  parallel_for(0, static_cast<i64>(chunks), [&](i64 c) {
    const u64 lo = static_cast<u64>(c) * kChunk;
    const u64 hi = std::min(trials, lo + kChunk);
    SplitMix64 rng = chunk_stream(seed, static_cast<u64>(c));
    u64 fixed = 0;
    for (u64 trial = lo; trial < hi; ++trial) {
      for (i64 len : sample_cycle_lengths(n, rng)) {
        if (len == 1) ++fixed;
      }
    }
    chunk_fixed[static_cast<std::size_t>(c)] = fixed;
  }, workers);

  u64 fixed_total = 0;
  for (u64 f : chunk_fixed) fixed_total += f;
  FixedPointStat stat;
  stat.trials = trials;
  stat.mean = static_cast<double>(fixed_total) / static_cast<double>(trials);
  stat.sigma_of_mean = 1.0 / std::sqrt(static_cast<double>(trials));
  return stat;
}

}  // namespace permorder
