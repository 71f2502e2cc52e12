#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "basekit/coset_action.hpp"
#include "basekit/group.hpp"
#include "basekit/partition.hpp"

namespace basekit {

/// G wr M in its imprimitive action on m*n points: block j is
/// {j*m, ..., j*m + m - 1}. Generators are those of G acting on block 0 and
/// those of M permuting blocks.
Group wreath_product(const Group& base, const Group& top);

/// Product action of G wr M on Omega_1^n, where G acts on Omega_1 through a
/// coset space and M <= Sym(n) permutes coordinates.
///
/// Product points are labelled block-major: the point with coordinates
/// (a_0, ..., a_{n-1}) has label a_0*N^(n-1) + a_1*N^(n-2) + ... + a_{n-1},
/// N = |Omega_1|. An element (g_0, ..., g_{n-1})h sends coordinate j to
/// position j^h after applying g_j.
class WreathSpace {
 public:
  WreathSpace(CosetSpace base_space, Group top);

  const CosetSpace& base_space() const noexcept { return base_; }
  const Group& top() const noexcept { return top_; }
  std::size_t copies() const noexcept { return top_.degree(); }
  std::size_t base_points() const noexcept { return base_.size(); }
  std::uint64_t product_size() const noexcept { return product_size_; }

  /// |G/core(H)|^n * |M|, saturating at 2^64 - 1.
  std::uint64_t group_order() const;

  Point label(std::span<const Point> coords) const;
  std::vector<Point> coordinates(Point label) const;

  /// h_j in M with 0^(h_j) = j, h_0 = e; nullopt for blocks outside the
  /// orbit of block 0.
  const std::vector<std::optional<Permutation>>& block_moves() const noexcept { return moves_; }

  /// The base tuple seen in block j: (coords(t_1)[j], ..., coords(t_k)[j]).
  PointTuple block_tuple(std::span<const Point> t, std::size_t block) const;

  /// The k-tuple of product points whose block j carries blocks[j].
  PointTuple assemble(std::span<const PointTuple> blocks) const;

  /// Explicit permutation group on the product points. Only meant for
  /// enumerable cases (test oracles, small examples).
  Group product_action_group() const;

  /// Image of a product point under the block-moving element h of M.
  Point apply_top(Point label, const Permutation& h) const;

 private:
  CosetSpace base_;
  Group top_;
  std::uint64_t product_size_;
  std::vector<std::optional<Permutation>> moves_;
};

/// Decides whether a tuple of product points has trivial stabilizer in
/// G wr M without enumerating it: every block tuple must be G-regular and no
/// non-identity h in M may map each block tuple onto a tuple in the same
/// G-orbit.
bool structured_regularity_check(const WreathSpace& w, std::span<const Point> t);

/// a and b lie in one G wr M orbit iff some h in M maps block j of a into
/// the G-orbit of block j^h of b, for every j.
bool structured_same_orbit(const WreathSpace& w, std::span<const Point> a,
                           std::span<const Point> b);

/// Places reps[i_t] in block t with i_t the cell of t, and certifies the
/// result regular. `reps` must be G-regular base tuples of one length lying
/// in pairwise distinct orbits, with at least as many reps as cells.
PointTuple lift_regular_point(const WreathSpace& w, std::span<const PointTuple> reps,
                              const PartitionColoring& partition);

/// Like lift_regular_point with an explicit injective choice of rep for
/// each cell.
PointTuple lift_with_assignment(const WreathSpace& w, std::span<const PointTuple> reps,
                                const PartitionColoring& partition,
                                std::span<const std::size_t> rep_of_cell);

/// s = reps.size() >= 5 certified regular lifts in pairwise distinct orbits.
/// Trivial M: each rep repeated across all blocks. s > 5: lift i draws its
/// reps from a cyclic window that excludes rep i. s = 5: injective cell
/// assignments in lexicographic order, keeping those in new orbits.
std::vector<PointTuple> distinct_regular_lifts(const WreathSpace& w, std::span<const PointTuple> reps,
                                               const PartitionColoring& partition);

}  // namespace basekit
