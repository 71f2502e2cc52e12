#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "basekit/permutation.hpp"

namespace basekit {

/// Full element list of a group in breadth-first discovery order, with a
/// hash index. Element 0 is always the identity.
class ElementSet {
 public:
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<Permutation>& list() const noexcept { return list_; }
  const Permutation& operator[](std::size_t i) const noexcept { return list_[i]; }
  auto begin() const noexcept { return list_.begin(); }
  auto end() const noexcept { return list_.end(); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

 private:
  friend class Group;
  std::vector<Permutation> list_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// A permutation group given by generators, with a lazily materialized
/// element set.
///
/// Groups are cheap to copy: copies share the cached closure. The closure is
/// computed at most once under std::call_once and is read-only afterwards,
/// so a Group may be queried concurrently.
class Group {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  /// An empty generator list yields the trivial group.
  Group(std::size_t degree, std::vector<Permutation> generators,
        std::size_t cap = kDefaultCap);

  static Group trivial(std::size_t degree) { return Group(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t cap() const noexcept { return cap_; }

  /// Breadth-first closure under right multiplication by the generators.
  /// Throws SizeExceeded (with the partial count) past the enumeration cap.
  const ElementSet& elements() const;

  /// Same as elements() but with an explicit cap for this call.
  const ElementSet& enumerate(std::size_t cap) const;

  std::uint64_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const;

  /// Orbit of `point` under the generators, in discovery order.
  std::vector<Point> orbit(Point point) const;
  bool is_transitive() const;

  /// Point stabilizer from Schreier generators; does not enumerate.
  Group stabilizer(Point point) const;

  /// The same group with one more generator.
  Group with_generator(const Permutation& g) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::size_t cap_;
  std::shared_ptr<Cache> cache_;
};

/// Element set equality (orders match and generators of one lie in the other).
bool same_group(const Group& a, const Group& b);

/// Every generator of `h` lies in `g`.
bool is_subgroup(const Group& h, const Group& g);

}  // namespace basekit
