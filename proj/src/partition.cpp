#include "basekit/partition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "basekit/error.hpp"
#include "basekit/group_struct.hpp"

namespace basekit {

std::size_t PartitionColoring::cell_count() const {
  std::uint8_t hi = 0;
  bool any = false;
  for (auto c : cell_of) {
    hi = std::max(hi, c);
    any = true;
  }
  return any ? static_cast<std::size_t>(hi) + 1 : 0;
}

std::vector<std::vector<Point>> PartitionColoring::cells() const {
  std::vector<std::vector<Point>> out(cell_count());
  for (std::size_t i = 0; i < cell_of.size(); ++i) out[cell_of[i]].push_back(static_cast<Point>(i));
  return out;
}

PartitionColoring PartitionColoring::normalized(std::vector<std::uint8_t> colors) {
  std::vector<int> remap(256, -1);
  int next = 0;
  for (auto& c : colors) {
    if (remap[c] < 0) remap[c] = next++;
    c = static_cast<std::uint8_t>(remap[c]);
  }
  return PartitionColoring{std::move(colors)};
}

bool fixes_partition(const Permutation& p, const PartitionColoring& part) {
  for (std::size_t i = 0; i < part.cell_of.size(); ++i) {
    if (part.cell_of[p[i]] != part.cell_of[i]) return false;
  }
  return true;
}

bool is_asymmetric(const Group& m, const PartitionColoring& part) {
  if (part.degree() != m.degree()) return false;
  const auto& elems = m.elements();
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (fixes_partition(elems[i], part)) return false;
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Group& m, std::size_t max_cells, std::uint64_t budget)
      : n_(m.degree()), max_cells_(max_cells), budget_(budget), colors_(n_, 0) {
    const auto& elems = m.elements();
    for (std::size_t i = 1; i < elems.size(); ++i) {
      perms_.push_back(elems[i]);
      inverses_.push_back(elems[i].inverse());
    }
  }

  std::optional<PartitionColoring> run() {
    std::vector<std::uint32_t> alive(perms_.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<std::uint32_t>(i);
    if (alive.empty()) return PartitionColoring{std::vector<std::uint8_t>(n_, 0)};
    if (assign(0, 0, alive)) return PartitionColoring::normalized(colors_);
    return std::nullopt;
  }

 private:
  // Point `x` receives a color; `used` colors are in play so far.
  bool assign(std::size_t x, std::size_t used, const std::vector<std::uint32_t>& alive) {
    if (x == n_) return false;
    const std::size_t limit = std::min(used + 1, max_cells_);
    std::vector<std::uint32_t> survivors;
    survivors.reserve(alive.size());
    for (std::size_t c = 0; c < limit; ++c) {
      if (++nodes_ > budget_) throw BudgetExceeded("asymmetric partition search exhausted its node budget");
      colors_[x] = static_cast<std::uint8_t>(c);
      survivors.clear();
      for (auto e : alive) {
        // Constraints between x and points already colored (indices <= x).
        const Point fwd = perms_[e][x];
        const Point back = inverses_[e][x];
        if (fwd <= x && colors_[fwd] != c) continue;
        if (back <= x && colors_[back] != c) continue;
        survivors.push_back(e);
      }
      if (survivors.empty()) {
        std::fill(colors_.begin() + static_cast<std::ptrdiff_t>(x) + 1, colors_.end(), 0);
        return true;
      }
      if (assign(x + 1, std::max(used, c + 1), survivors)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t max_cells_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> colors_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
};

}  // namespace

std::optional<PartitionColoring> search_asymmetric_partition(const Group& m, std::size_t max_cells,
                                                            std::uint64_t node_budget) {
  if (max_cells == 0) return std::nullopt;
  return ColoringSearch(m, std::min<std::size_t>(max_cells, 255), node_budget).run();
}

PartitionColoring asymmetric_partition(const Group& m, const PartitionSearchOptions& opts) {
  if (!is_solvable(m)) throw HypothesisError("asymmetric_partition requires a solvable group");
  const std::size_t n = m.degree();
  const std::size_t max_cells = std::min<std::size_t>(5, n);

  if (n <= opts.exhaustive_limit) {
    for (std::size_t cells = 1; cells <= max_cells; ++cells) {
      if (auto found = search_asymmetric_partition(m, cells, opts.node_budget)) {
        if (!is_asymmetric(m, *found)) throw std::logic_error("partition search returned a symmetric coloring");
        return *found;
      }
    }
    throw BudgetExceeded("no asymmetric partition with at most 5 cells exists");
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<std::uint8_t> colors(n);
  for (std::uint64_t attempt = 0; attempt < opts.random_tries; ++attempt) {
    for (auto& c : colors) c = static_cast<std::uint8_t>(rng() % max_cells);
    auto candidate = PartitionColoring::normalized(colors);
    if (is_asymmetric(m, candidate)) return candidate;
  }
  if (auto found = search_asymmetric_partition(m, max_cells, opts.node_budget)) {
    if (is_asymmetric(m, *found)) return *found;
  }
  throw BudgetExceeded("no verified asymmetric partition found within the search budget");
}

}  // namespace basekit
