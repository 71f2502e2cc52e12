#include "basekit/group.hpp"

#include <deque>
#include <mutex>
#include <unordered_set>

#include "basekit/error.hpp"

namespace basekit {

std::optional<std::size_t> ElementSet::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

struct Group::Cache {
  std::once_flag once;
  ElementSet set;
};

Group::Group(std::size_t degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), cap_(cap), cache_(std::make_shared<Cache>()) {
  if (degree == 0) throw HypothesisError("group degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw HypothesisError("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));
    }
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

const ElementSet& Group::elements() const { return enumerate(cap_); }

const ElementSet& Group::enumerate(std::size_t cap) const {
  std::call_once(cache_->once, [&] {
    ElementSet set;
    auto id = Permutation::identity(degree_);
    set.index_.emplace(id, 0);
    set.list_.push_back(std::move(id));
    for (std::size_t head = 0; head < set.list_.size(); ++head) {
      for (const auto& g : generators_) {
        Permutation next = compose(set.list_[head], g);
        if (set.index_.count(next)) continue;
        if (set.list_.size() >= cap) {
          throw SizeExceeded("group closure exceeded the enumeration cap of " +
                                 std::to_string(cap) + " elements",
                             set.list_.size());
        }
        set.index_.emplace(next, static_cast<std::uint32_t>(set.list_.size()));
        set.list_.push_back(std::move(next));
      }
    }
    cache_->set = std::move(set);
  });
  if (cache_->set.size() > cap) {
    throw SizeExceeded("group order exceeds the enumeration cap of " + std::to_string(cap),
                       cache_->set.size());
  }
  return cache_->set;
}

bool Group::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return elements().contains(p);
}

bool Group::is_trivial() const { return generators_.empty(); }

std::vector<Point> Group::orbit(Point point) const {
  if (point >= degree_) throw HypothesisError("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      const Point y = g[out[head]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool Group::is_transitive() const { return orbit(0).size() == degree_; }

Group Group::stabilizer(Point point) const {
  if (point >= degree_) throw HypothesisError("stabilizer: point out of range");
  // transversal[x] maps `point` to x.
  std::vector<std::optional<Permutation>> transversal(degree_);
  transversal[point] = Permutation::identity(degree_);
  std::vector<Point> queue{point};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point x = queue[head];
    for (const auto& g : generators_) {
      const Point y = g[x];
      if (!transversal[y]) {
        transversal[y] = compose(*transversal[x], g);
        queue.push_back(y);
      }
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> schreier;
  for (Point x : queue) {
    for (const auto& g : generators_) {
      Permutation s = compose(compose(*transversal[x], g), transversal[g[x]]->inverse());
      if (!s.is_identity() && seen.insert(s).second) schreier.push_back(std::move(s));
    }
  }
  return Group(degree_, std::move(schreier), cap_);
}

Group Group::with_generator(const Permutation& g) const {
  auto gens = generators_;
  gens.push_back(g);
  return Group(degree_, std::move(gens), cap_);
}

bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree()) return false;
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool same_group(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

}  // namespace basekit
