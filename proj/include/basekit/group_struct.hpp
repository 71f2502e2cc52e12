#pragma once

#include <span>
#include <vector>

#include "basekit/group.hpp"

namespace basekit {

// Structural queries on enumerable groups. Subgroups are plain Groups of the
// parent's degree; functions taking a subgroup also take the parent it is
// measured against.

struct DerivedSeriesReport {
  std::vector<Group> terms;  ///< G = G^(0) > G^(1) > ... until it stabilizes
  bool solvable = false;
};

DerivedSeriesReport derived_series(const Group& g);
bool is_solvable(const Group& g);

/// [G, G], as the normal closure of the commutators of generators.
Group commutator_subgroup(const Group& g);

/// Smallest normal subgroup of `parent` containing `seeds`.
Group normal_closure(const Group& parent, std::span<const Permutation> seeds);

/// Largest normal solvable subgroup.
Group solvable_radical(const Group& g);

/// Intersection of all conjugates of `h` in `g`.
Group core(const Group& g, const Group& h);

/// {x in within : h^x = h}.
Group normalizer(const Group& h, const Group& within);

/// True iff every x in `parent` outside `s` makes <s, x> non-solvable.
/// Throws HypothesisError if `s` is not solvable.
bool is_maximal_solvable(const Group& s, const Group& parent);

bool is_normal(const Group& n, const Group& g);

Group intersection(const Group& a, const Group& b);

/// One representative for each right coset H*x of h in g; the first is e.
std::vector<Permutation> right_transversal(const Group& g, const Group& h);

std::vector<Permutation> conjugacy_class_representatives(const Group& g);

/// Normal subgroups generated as normal closures of at most two class
/// representatives (plus the trivial group); distinct by element set.
std::vector<Group> normal_subgroups_scan(const Group& g);

}  // namespace basekit
