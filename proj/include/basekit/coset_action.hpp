#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "basekit/bitset.hpp"
#include "basekit/group.hpp"

namespace basekit {

/// A k-tuple of point indices into a CosetSpace (0-based).
using PointTuple = std::vector<Point>;

/// Faithful image of G in Sym(Omega) together with the data the tuple scans
/// need: the image of the point stabilizer of point 0, the per-point masks of
/// its elements, and a transversal mapping 0 to each point.
class ActionImage {
 public:
  /// Image group of degree |Omega|.
  const Group& group() const noexcept { return group_; }
  std::uint64_t order() const { return group_.order(); }

  /// Elements of the stabilizer of point 0; element 0 is the identity.
  const std::vector<Permutation>& stabilizer_elements() const noexcept { return stab_; }

  /// Bit i is set iff stabilizer element i fixes `p`.
  const Bitset& stabilizer_mask(Point p) const noexcept { return masks_[p]; }

  /// An element of the image group mapping point 0 to `p`.
  const Permutation& transversal(Point p) const noexcept { return transversal_[p]; }

 private:
  friend class CosetSpace;
  explicit ActionImage(Group group);

  Group group_;
  std::vector<Permutation> stab_;
  std::vector<Bitset> masks_;
  std::vector<Permutation> transversal_;
};

/// The transitive action of G on the right cosets of H.
///
/// Point 0 is the coset H*e. Points are numbered in breadth-first discovery
/// order from H*e (see natural() for the one exception). Coset identity is
/// decided by membership of rep_a * rep_b^-1 in H.
class CosetSpace {
 public:
  /// Throws HypothesisError unless H <= G.
  static CosetSpace build(Group g, Group h);

  /// Action of a transitive group on its own points: H is the stabilizer of
  /// point 0 and point i of the space is the natural point i.
  static CosetSpace natural(Group g);

  const Group& group() const noexcept;
  const Group& subgroup() const noexcept;
  std::size_t size() const noexcept;

  /// rep(p) is a representative of coset p.
  const Permutation& rep(Point p) const noexcept;
  const std::vector<Permutation>& transversal() const noexcept;

  /// Image of point p under the generator with index `gen`.
  Point act_generator(Point p, std::size_t gen) const noexcept;

  /// Index of the coset (H rep_p) g. Throws HypothesisError unless g is in G.
  Point act(Point p, const Permutation& g) const;

  /// {g in G : act(p, g) = p}, i.e. H^rep(p).
  Group point_stabilizer(Point p) const;

  /// Action of G on Omega as a permutation group on size() points, built and
  /// cached on first use. Its kernel is the core of H.
  const ActionImage& image() const;

 private:
  struct State;
  explicit CosetSpace(std::shared_ptr<State> state) : state_(std::move(state)) {}

  Point locate(const Permutation& x) const;

  std::shared_ptr<State> state_;
};

/// Lexicographically least element of the orbit of `t` under the faithful
/// image of G acting coordinate-wise.
PointTuple canonical_tuple(const CosetSpace& space, std::span<const Point> t);

}  // namespace basekit
