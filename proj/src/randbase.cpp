#include "basekit/randbase.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "basekit/base_reg.hpp"
#include "basekit/error.hpp"

namespace basekit {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(splitmix64(seed) ^ chunk);
}

// Uniform value in [0, n) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

struct ChunkResult {
  std::uint64_t hits = 0;
  std::optional<PointTuple> witness;
};

ChunkResult run_chunk(const CosetSpace& space, std::size_t k, std::uint64_t seed, std::uint64_t chunk,
                      std::uint64_t count) {
  std::mt19937_64 rng(chunk_seed(seed, chunk));
  ChunkResult out;
  PointTuple t(k);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (auto& p : t) p = static_cast<Point>(uniform_below(rng, space.size()));
    if (is_regular_tuple(space, t)) {
      ++out.hits;
      if (!out.witness) out.witness = t;
    }
  }
  return out;
}

}  // namespace

Interval binomial_interval(double p0, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double half = z * std::sqrt(p0 * (1.0 - p0) / static_cast<double>(trials));
  return {std::max(0.0, p0 - half), std::min(1.0, p0 + half)};
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SampleRun random_base_search(const CosetSpace& space, std::size_t k, std::uint64_t trials,
                             std::uint64_t seed, const SampleOptions& opts) {
  if (k == 0) throw HypothesisError("random_base_search requires k >= 1");
  SampleRun run;
  run.k = k;
  run.trials = trials;
  run.seed = seed;

  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  auto work = [&](std::uint64_t c) {
    const std::uint64_t count = std::min(kChunk, trials - c * kChunk);
    results[c] = run_chunk(space, k, seed, c, count);
  };
  space.image();
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(chunks)));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += threads) work(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& r : results) {
    run.hits += r.hits;
    if (!run.witness && r.witness) run.witness = std::move(r.witness);
  }
  run.rate = trials ? static_cast<double>(run.hits) / static_cast<double>(trials) : 0.0;
  run.rate_interval = wilson_interval(run.hits, trials);

  run.reg = opts.known_reg;
  if (!run.reg) {
    try {
      ScanOptions scan;
      scan.budget = opts.scan_budget;
      scan.threads = opts.threads;
      scan.rep_cap = 0;
      run.reg = reg_count(space, k, scan).reg_count;
    } catch (const BudgetExceeded&) {
    }
  }
  if (run.reg) {
    const double n = static_cast<double>(space.size());
    const double s = static_cast<double>(*run.reg);
    const double order = static_cast<double>(space.image().order());
    run.epsilon = s * order / std::pow(n, static_cast<double>(k));
    run.epsilon_weak = s / std::pow(n, static_cast<double>(k - 1));
  }
  return run;
}

}  // namespace basekit
