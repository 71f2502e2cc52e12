#include "basekit/wreath.hpp"

#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "basekit/base_reg.hpp"
#include "basekit/error.hpp"

namespace basekit {

Group wreath_product(const Group& base, const Group& top) {
  const std::size_t m = base.degree();
  const std::size_t n = top.degree();
  std::vector<Permutation> gens;
  for (const auto& g : base.generators()) {
    std::vector<Point> images(m * n);
    for (std::size_t i = 0; i < m * n; ++i) images[i] = i < m ? g[i] : static_cast<Point>(i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : top.generators()) {
    std::vector<Point> images(m * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) images[j * m + i] = static_cast<Point>(h[j] * m + i);
    }
    gens.emplace_back(std::move(images));
  }
  return Group(m * n, std::move(gens), std::max(base.cap(), top.cap()));
}

WreathSpace::WreathSpace(CosetSpace base_space, Group top)
    : base_(std::move(base_space)), top_(std::move(top)), product_size_(1) {
  const std::uint64_t n = base_.size();
  for (std::size_t j = 0; j < copies(); ++j) {
    if (product_size_ > std::numeric_limits<Point>::max() / n) {
      throw HypothesisError("product point set too large to label");
    }
    product_size_ *= n;
  }
  moves_.resize(copies());
  moves_[0] = Permutation::identity(copies());
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t j = queue[head];
    for (const auto& h : top_.generators()) {
      const std::size_t to = h[j];
      if (!moves_[to]) {
        moves_[to] = compose(*moves_[j], h);
        queue.push_back(to);
      }
    }
  }
}

std::uint64_t WreathSpace::group_order() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t base = base_.image().order();
  std::uint64_t r = top_.order();
  for (std::size_t j = 0; j < copies(); ++j) {
    if (r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

Point WreathSpace::label(std::span<const Point> coords) const {
  if (coords.size() != copies()) throw HypothesisError("label: wrong number of coordinates");
  std::uint64_t v = 0;
  for (Point c : coords) {
    if (c >= base_points()) throw HypothesisError("label: coordinate out of range");
    v = v * base_points() + c;
  }
  return static_cast<Point>(v);
}

std::vector<Point> WreathSpace::coordinates(Point label) const {
  if (label >= product_size_) throw HypothesisError("coordinates: label out of range");
  std::vector<Point> coords(copies());
  std::uint64_t v = label;
  for (std::size_t j = copies(); j-- > 0;) {
    coords[j] = static_cast<Point>(v % base_points());
    v /= base_points();
  }
  return coords;
}

PointTuple WreathSpace::block_tuple(std::span<const Point> t, std::size_t block) const {
  PointTuple out;
  out.reserve(t.size());
  for (Point p : t) out.push_back(coordinates(p)[block]);
  return out;
}

PointTuple WreathSpace::assemble(std::span<const PointTuple> blocks) const {
  if (blocks.size() != copies()) throw HypothesisError("assemble: one base tuple per block required");
  const std::size_t k = blocks[0].size();
  PointTuple out;
  std::vector<Point> coords(copies());
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t j = 0; j < copies(); ++j) {
      if (blocks[j].size() != k) throw HypothesisError("assemble: base tuples differ in length");
      coords[j] = blocks[j][l];
    }
    out.push_back(label(coords));
  }
  return out;
}

Point WreathSpace::apply_top(Point p, const Permutation& h) const {
  const auto x = coordinates(p);
  std::vector<Point> y(copies());
  for (std::size_t j = 0; j < copies(); ++j) y[h[j]] = x[j];
  return label(y);
}

Group WreathSpace::product_action_group() const {
  std::vector<Permutation> gens;
  for (const auto& g : base_.image().group().generators()) {
    std::vector<Point> images(product_size_);
    for (Point p = 0; p < product_size_; ++p) {
      auto x = coordinates(p);
      x[0] = g[x[0]];
      images[p] = label(x);
    }
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : top_.generators()) {
    std::vector<Point> images(product_size_);
    for (Point p = 0; p < product_size_; ++p) images[p] = apply_top(p, h);
    gens.emplace_back(std::move(images));
  }
  return Group(product_size_, std::move(gens));
}

namespace {

// Canonical forms of base tuples, memoized per call site.
class CanonCache {
 public:
  explicit CanonCache(const CosetSpace& space) : space_(space) {}

  const PointTuple& operator()(const PointTuple& t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, canonical_tuple(space_, t)).first;
    return it->second;
  }

 private:
  const CosetSpace& space_;
  std::map<PointTuple, PointTuple> cache_;
};

std::vector<PointTuple> block_canons(const WreathSpace& w, std::span<const Point> t, CanonCache& canon) {
  std::vector<PointTuple> out;
  for (std::size_t j = 0; j < w.copies(); ++j) out.push_back(canon(w.block_tuple(t, j)));
  return out;
}

// Some h in M (the identity only when allow_identity) with a[j] == b[j^h].
bool matching_top_element(const Group& top, const std::vector<PointTuple>& a,
                          const std::vector<PointTuple>& b, bool allow_identity) {
  for (const auto& h : top.elements()) {
    if (!allow_identity && h.is_identity()) continue;
    bool ok = true;
    for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[j] == b[h[j]];
    if (ok) return true;
  }
  return false;
}

bool regular_with_cache(const WreathSpace& w, std::span<const Point> t, CanonCache& canon) {
  for (Point p : t) {
    if (p >= w.product_size()) throw HypothesisError("tuple entry out of range");
  }
  for (std::size_t j = 0; j < w.copies(); ++j) {
    if (!is_regular_tuple(w.base_space(), w.block_tuple(t, j))) return false;
  }
  const auto canons = block_canons(w, t, canon);
  return !matching_top_element(w.top(), canons, canons, false);
}

bool same_orbit_with_cache(const WreathSpace& w, std::span<const Point> a, std::span<const Point> b,
                           CanonCache& canon) {
  if (a.size() != b.size()) return false;
  return matching_top_element(w.top(), block_canons(w, a, canon), block_canons(w, b, canon), true);
}

void check_reps(const WreathSpace& w, std::span<const PointTuple> reps, CanonCache& canon) {
  if (reps.empty()) throw HypothesisError("at least one regular base tuple is required");
  std::set<PointTuple> seen;
  for (const auto& r : reps) {
    if (r.size() != reps[0].size()) throw HypothesisError("base tuples differ in length");
    if (!is_regular_tuple(w.base_space(), r)) throw HypothesisError("base tuple is not regular");
    if (!seen.insert(canon(r)).second) {
      throw HypothesisError("base tuples do not lie in distinct orbits");
    }
  }
}

void check_partition(const WreathSpace& w, const PartitionColoring& partition, std::size_t reps) {
  if (partition.degree() != w.copies()) throw HypothesisError("partition degree does not match the top group");
  if (!is_asymmetric(w.top(), partition)) throw HypothesisError("partition is not asymmetric for the top group");
  if (partition.cell_count() > reps) {
    throw HypothesisError("fewer distinct regular orbits than partition cells");
  }
}

PointTuple assemble_checked(const WreathSpace& w, std::span<const PointTuple> reps,
                            const PartitionColoring& partition, std::span<const std::size_t> rep_of_cell,
                            CanonCache& canon) {
  if (rep_of_cell.size() != partition.cell_count()) throw HypothesisError("one rep per cell required");
  std::set<std::size_t> distinct(rep_of_cell.begin(), rep_of_cell.end());
  if (distinct.size() != rep_of_cell.size() || *distinct.rbegin() >= reps.size()) {
    throw HypothesisError("cell to rep assignment must be injective and in range");
  }
  std::vector<PointTuple> blocks;
  for (std::size_t t = 0; t < w.copies(); ++t) blocks.push_back(reps[rep_of_cell[partition.cell_of[t]]]);
  PointTuple lifted = w.assemble(blocks);
  if (!regular_with_cache(w, lifted, canon)) {
    throw std::logic_error("lifted tuple failed the structured regularity check");
  }
  return lifted;
}

}  // namespace

bool structured_regularity_check(const WreathSpace& w, std::span<const Point> t) {
  CanonCache canon(w.base_space());
  return regular_with_cache(w, t, canon);
}

bool structured_same_orbit(const WreathSpace& w, std::span<const Point> a, std::span<const Point> b) {
  CanonCache canon(w.base_space());
  return same_orbit_with_cache(w, a, b, canon);
}

PointTuple lift_with_assignment(const WreathSpace& w, std::span<const PointTuple> reps,
                                const PartitionColoring& partition,
                                std::span<const std::size_t> rep_of_cell) {
  CanonCache canon(w.base_space());
  check_reps(w, reps, canon);
  check_partition(w, partition, reps.size());
  return assemble_checked(w, reps, partition, rep_of_cell, canon);
}

PointTuple lift_regular_point(const WreathSpace& w, std::span<const PointTuple> reps,
                              const PartitionColoring& partition) {
  std::vector<std::size_t> identity(partition.cell_count());
  for (std::size_t c = 0; c < identity.size(); ++c) identity[c] = c;
  return lift_with_assignment(w, reps, partition, identity);
}

std::vector<PointTuple> distinct_regular_lifts(const WreathSpace& w, std::span<const PointTuple> reps,
                                               const PartitionColoring& partition) {
  CanonCache canon(w.base_space());
  check_reps(w, reps, canon);
  check_partition(w, partition, reps.size());
  const std::size_t s = reps.size();
  if (s < 5) throw HypothesisError("distinct_regular_lifts needs at least 5 regular orbits");
  const std::size_t cells = partition.cell_count();

  std::vector<PointTuple> lifts;
  if (w.top().order() == 1) {
    for (const auto& r : reps) {
      std::vector<PointTuple> blocks(w.copies(), r);
      lifts.push_back(w.assemble(blocks));
    }
  } else if (s > 5) {
    std::vector<std::size_t> window(cells);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t c = 0; c < cells; ++c) window[c] = (i + 1 + c) % s;
      lifts.push_back(assemble_checked(w, reps, partition, window, canon));
    }
  } else {
    // Injective maps cell -> rep in lexicographic order.
    std::vector<std::size_t> assignment(cells);
    std::vector<bool> used(s, false);
    auto extend = [&](auto&& self, std::size_t c) -> bool {
      if (c == cells) {
        PointTuple lifted = assemble_checked(w, reps, partition, assignment, canon);
        for (const auto& kept : lifts) {
          if (same_orbit_with_cache(w, kept, lifted, canon)) return false;
        }
        lifts.push_back(std::move(lifted));
        return lifts.size() == s;
      }
      for (std::size_t r = 0; r < s; ++r) {
        if (used[r]) continue;
        used[r] = true;
        assignment[c] = r;
        if (self(self, c + 1)) return true;
        used[r] = false;
      }
      return false;
    };
    if (!extend(extend, 0)) throw std::logic_error("fewer than 5 distinct lift orbits found");
  }

  for (std::size_t i = 0; i < lifts.size(); ++i) {
    if (!regular_with_cache(w, lifts[i], canon)) throw std::logic_error("lift is not regular");
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      if (same_orbit_with_cache(w, lifts[i], lifts[j], canon)) {
        throw std::logic_error("two lifts share an orbit");
      }
    }
  }
  return lifts;
}

}  // namespace basekit
