#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

/// Assignment of each point to a cell. Cells are numbered in order of first
/// appearance (cell_of[0] == 0), so equal partitions compare equal.
struct PartitionColoring {
  std::vector<std::uint8_t> cell_of;

  std::size_t degree() const noexcept { return cell_of.size(); }
  std::size_t cell_count() const;
  /// Cells as point lists, in cell order.
  std::vector<std::vector<Point>> cells() const;

  /// Renumbers cells by first appearance.
  static PartitionColoring normalized(std::vector<std::uint8_t> colors);

  friend bool operator==(const PartitionColoring&, const PartitionColoring&) = default;
};

/// p maps every cell into itself.
bool fixes_partition(const Permutation& p, const PartitionColoring& part);

/// Only the identity of `m` fixes the partition (checked on every element).
bool is_asymmetric(const Group& m, const PartitionColoring& part);

struct PartitionSearchOptions {
  /// Up to this degree the search is exhaustive and returns a minimum.
  std::size_t exhaustive_limit = 12;
  std::uint64_t random_tries = 20'000;
  std::uint64_t node_budget = 50'000'000;
  std::uint64_t seed = 1;
};

/// Backtracking over colorings with at most `max_cells` cells in first-
/// appearance form, pruning the candidate set of non-identity elements that
/// still fix every assigned constraint. Returns the first asymmetric
/// partition found, or nullopt if none exists. Throws BudgetExceeded when
/// the node budget runs out before the search completes.
std::optional<PartitionColoring> search_asymmetric_partition(const Group& m, std::size_t max_cells,
                                                            std::uint64_t node_budget);

/// Verified asymmetric partition with at most 5 cells for a solvable group.
/// Exhaustive (and minimal) up to `exhaustive_limit` points, randomized with
/// exact verification beyond that, then a budgeted exhaustive search.
/// Throws HypothesisError for non-solvable input and BudgetExceeded when no
/// certificate is found.
PartitionColoring asymmetric_partition(const Group& m, const PartitionSearchOptions& opts = {});

}  // namespace basekit
