#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "basekit/coset_action.hpp"

namespace basekit {

/// Two-sided interval [lo, hi] for a binomial proportion.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Standard normal quantile for a two-sided 99% interval.
inline constexpr double kZ99 = 2.5758293035489004;

/// p0 ± z*sqrt(p0(1-p0)/trials), clamped to [0, 1].
Interval binomial_interval(double p0, std::uint64_t trials, double z = kZ99);

/// Wilson score interval for hits out of trials.
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = kZ99);

struct SampleRun {
  std::size_t k = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
  std::string rng = "mt19937_64";
  /// First regular tuple in sampling order (0-based).
  std::optional<PointTuple> witness;
  double rate = 0.0;
  Interval rate_interval;
  /// Regular orbit count s at k, when known.
  std::optional<std::uint64_t> reg;
  /// s*|G/H_G| / n^k: the exact probability that a uniform tuple is regular.
  std::optional<double> epsilon;
  /// The weaker s / n^(k-1).
  std::optional<double> epsilon_weak;
};

struct SampleOptions {
  unsigned threads = 1;
  /// Regular orbit count at k when the caller already knows it.
  std::optional<std::uint64_t> known_reg;
  /// Scan budget for computing the count when it is not given; the
  /// epsilon fields stay empty if the scan would exceed it.
  std::uint64_t scan_budget = 10'000'000;
};

/// Draws `trials` uniform tuples from Omega^k and tests each for
/// regularity. Trials are split into fixed chunks with seeds derived from
/// (seed, chunk), so the result does not depend on the thread count.
SampleRun random_base_search(const CosetSpace& space, std::size_t k, std::uint64_t trials,
                             std::uint64_t seed, const SampleOptions& opts = {});

}  // namespace basekit
