#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basekit/coset_action.hpp"

namespace basekit {

struct ScanOptions {
  /// Largest nominal scan |Omega|^(k-1) accepted before BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// Maximum number of orbit representatives collected.
  std::size_t rep_cap = 20;
  /// Worker threads for the tuple scan; the result does not depend on it.
  unsigned threads = 1;
};

/// Result of a base-size or regular-orbit computation. All counts refer to
/// the faithful action of G/core(H) on Omega.
struct RegularOrbitReport {
  std::size_t k = 0;
  std::optional<std::size_t> base_size;
  std::uint64_t reg_count = 0;
  /// Number of all G-orbits on Omega^k.
  std::uint64_t total_orbits = 0;
  /// Lexicographically least tuple of each reported orbit; entries 0-based,
  /// first coordinate 0.
  std::vector<PointTuple> representatives;
  std::string method;
  double elapsed_ms = 0.0;
  /// Tuple-scan nodes visited.
  std::uint64_t budget_used = 0;
  /// |Omega| = 1: G acts trivially and the empty tuple is already a base.
  bool trivial_action = false;
};

/// No non-identity element of G/core(H) fixes every coordinate of `t`.
bool is_regular_tuple(const CosetSpace& space, std::span<const Point> t);

/// Number of regular G-orbits on Omega^k, by fixing the first coordinate to
/// point 0 and scanning all (k-1)-tuples over Omega for a trivial
/// stabilizer in H. k >= 1.
RegularOrbitReport reg_count(const CosetSpace& space, std::size_t k, const ScanOptions& opts = {});

/// Smallest k such that Omega^k has a regular point, searched upward from
/// base_lower_bound(). The report carries reg_count and representatives at
/// that k; representatives[0] is the least witness.
RegularOrbitReport base_size(const CosetSpace& space, const ScanOptions& opts = {});

/// Searches x_1 = e, x_2, ..., x_k (right coset representatives) with
/// H^x_1 ∩ ... ∩ H^x_k = core(H). Exhaustive over conjugate combinations,
/// trying smaller intersections first. k = 0 succeeds iff H = G.
std::optional<std::vector<Permutation>> base_by_intersections(const Group& g, const Group& h,
                                                              std::size_t k);

/// min{k : index^(k-1) > order_mod_core}, with the regular case
/// (order_mod_core = 1) answering 1. index >= 2.
std::size_t base_lower_bound(std::uint64_t index, std::uint64_t order_mod_core);

/// (1/|G|) * sum over g of fix(g)^k on Omega, for the faithful image.
std::uint64_t burnside_orbit_count(const CosetSpace& space, std::size_t k);

struct RegularFloorReport {
  std::size_t base = 0;
  std::size_t k = 0;
  std::uint64_t reg = 0;
  bool holds = false;
};

/// With k = max(base, 6), checks Reg(G, k) >= 5. The point stabilizer must be
/// solvable; throws HypothesisError otherwise.
RegularFloorReport regular_floor_check(const CosetSpace& space, const ScanOptions& opts = {});

/// Default worker count: BASEKIT_THREADS if set, else hardware concurrency.
unsigned default_threads();

}  // namespace basekit
