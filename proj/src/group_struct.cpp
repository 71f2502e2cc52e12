#include "basekit/group_struct.hpp"

#include <algorithm>

#include "basekit/error.hpp"

namespace basekit {

namespace {

// Picks generators greedily from a known element list of a subgroup.
Group subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elems,
                             std::size_t cap) {
  std::vector<Permutation> gens;
  Group current = Group::trivial(degree);
  for (const auto& x : elems) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = Group(degree, gens, cap);
  }
  return current;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

}  // namespace

Group normal_closure(const Group& parent, std::span<const Permutation> seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (!s.is_identity()) gens.push_back(s);
  }
  Group n(parent.degree(), gens, parent.cap());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : parent.generators()) {
      Permutation c = gens[i].conjugate_by(g);
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = Group(parent.degree(), gens, parent.cap());
      }
    }
  }
  return n;
}

Group commutator_subgroup(const Group& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  }
  return normal_closure(g, seeds);
}

DerivedSeriesReport derived_series(const Group& g) {
  DerivedSeriesReport report;
  report.terms.push_back(g);
  while (report.terms.back().order() > 1) {
    Group next = commutator_subgroup(report.terms.back());
    if (next.order() == report.terms.back().order()) break;
    report.terms.push_back(std::move(next));
  }
  report.solvable = report.terms.back().order() == 1;
  return report;
}

bool is_solvable(const Group& g) { return derived_series(g).solvable; }

Group solvable_radical(const Group& g) {
  if (is_solvable(g)) return g;
  const auto reps = conjugacy_class_representatives(g);
  Group radical = Group::trivial(g.degree());
  // x lies in the radical iff <radical, x^G> is solvable, so a rejected x
  // stays rejected as the radical grows.
  std::vector<bool> rejected(reps.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (rejected[i] || radical.contains(reps[i])) continue;
      std::vector<Permutation> seeds = radical.generators();
      seeds.push_back(reps[i]);
      Group candidate = normal_closure(g, seeds);
      if (is_solvable(candidate)) {
        radical = std::move(candidate);
        changed = true;
      } else {
        rejected[i] = true;
      }
    }
  }
  return radical;
}

std::vector<Permutation> right_transversal(const Group& g, const Group& h) {
  const auto& ge = g.elements();
  const auto& he = h.elements();
  std::vector<bool> covered(ge.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < ge.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(ge[i]);
    for (const auto& y : he) {
      auto idx = ge.index_of(compose(y, ge[i]));
      if (!idx) throw HypothesisError("subgroup is not contained in the group");
      covered[*idx] = true;
    }
  }
  return reps;
}

Group core(const Group& g, const Group& h) {
  const auto reps = right_transversal(g, h);
  std::vector<Permutation> inverses;
  for (const auto& r : reps) inverses.push_back(r.inverse());
  std::vector<Permutation> kept;
  for (const auto& x : h.elements()) {
    // x in h^r  <=>  r x r^-1 in h
    bool all = true;
    for (const auto& ri : inverses) {
      if (!h.contains(x.conjugate_by(ri))) {
        all = false;
        break;
      }
    }
    if (all) kept.push_back(x);
  }
  return subgroup_from_elements(g.degree(), kept, g.cap());
}

Group normalizer(const Group& h, const Group& within) {
  std::vector<Permutation> kept;
  for (const auto& x : within.elements()) {
    bool normalizes = true;
    for (const auto& y : h.generators()) {
      if (!h.contains(y.conjugate_by(x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) kept.push_back(x);
  }
  return subgroup_from_elements(within.degree(), kept, within.cap());
}

bool is_normal(const Group& n, const Group& g) {
  for (const auto& y : n.generators()) {
    for (const auto& x : g.generators()) {
      if (!n.contains(y.conjugate_by(x))) return false;
    }
  }
  return true;
}

Group intersection(const Group& a, const Group& b) {
  std::vector<Permutation> kept;
  for (const auto& x : a.elements()) {
    if (b.contains(x)) kept.push_back(x);
  }
  return subgroup_from_elements(a.degree(), kept, a.cap());
}

bool is_maximal_solvable(const Group& s, const Group& parent) {
  if (!is_solvable(s)) throw HypothesisError("is_maximal_solvable: subgroup is not solvable");
  if (!is_subgroup(s, parent)) throw HypothesisError("is_maximal_solvable: not a subgroup");
  // <S, x> = <S, s x> for s in S, so coset representatives suffice.
  const auto reps = right_transversal(parent, s);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (is_solvable(s.with_generator(reps[i]))) return false;
  }
  return true;
}

std::vector<Permutation> conjugacy_class_representatives(const Group& g) {
  const auto& ge = g.elements();
  std::vector<bool> seen(ge.size(), false);
  std::vector<Permutation> reps;
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < ge.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(ge[i]);
    seen[i] = true;
    queue.assign(1, i);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& x : g.generators()) {
        const std::size_t j = *ge.index_of(ge[queue[head]].conjugate_by(x));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

std::vector<Group> normal_subgroups_scan(const Group& g) {
  const auto reps = conjugacy_class_representatives(g);
  std::vector<Group> found{Group::trivial(g.degree())};
  auto add = [&](Group n) {
    for (const auto& f : found) {
      if (same_group(f, n)) return;
    }
    found.push_back(std::move(n));
  };
  std::vector<Group> singles;
  for (std::size_t i = 1; i < reps.size(); ++i) {
    singles.push_back(normal_closure(g, std::span(&reps[i], 1)));
    add(singles.back());
  }
  for (std::size_t i = 0; i < singles.size(); ++i) {
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      if (is_subgroup(singles[j], singles[i]) || is_subgroup(singles[i], singles[j])) continue;
      std::vector<Permutation> seeds = singles[i].generators();
      seeds.insert(seeds.end(), singles[j].generators().begin(), singles[j].generators().end());
      add(normal_closure(g, seeds));
    }
  }
  add(g);
  std::stable_sort(found.begin(), found.end(),
                   [](const Group& a, const Group& b) { return a.order() < b.order(); });
  return found;
}

}  // namespace basekit
