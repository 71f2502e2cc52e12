#include "basekit/coset_action.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "basekit/error.hpp"

namespace basekit {

struct CosetSpace::State {
  State(Group g, Group h) : group(std::move(g)), subgroup(std::move(h)) {}

  Group group;
  Group subgroup;
  std::vector<Permutation> reps;
  std::vector<Permutation> rep_inverses;
  std::size_t stride = 0;
  std::vector<Point> table;

  std::once_flag image_once;
  std::unique_ptr<ActionImage> image;
};

ActionImage::ActionImage(Group group) : group_(std::move(group)) {
  const std::size_t n = group_.degree();
  const auto& elems = group_.elements();
  transversal_.resize(n);
  std::vector<bool> have(n, false);
  for (const auto& e : elems) {
    if (e[0] == 0) stab_.push_back(e);
    if (!have[e[0]]) {
      have[e[0]] = true;
      transversal_[e[0]] = e;
    }
  }
  masks_.assign(n, Bitset(stab_.size()));
  for (std::size_t i = 0; i < stab_.size(); ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      if (stab_[i][p] == p) masks_[p].set(i);
    }
  }
}

const Group& CosetSpace::group() const noexcept { return state_->group; }
const Group& CosetSpace::subgroup() const noexcept { return state_->subgroup; }
std::size_t CosetSpace::size() const noexcept { return state_->reps.size(); }
const Permutation& CosetSpace::rep(Point p) const noexcept { return state_->reps[p]; }
const std::vector<Permutation>& CosetSpace::transversal() const noexcept { return state_->reps; }

Point CosetSpace::act_generator(Point p, std::size_t gen) const noexcept {
  return state_->table[p * state_->stride + gen];
}

Point CosetSpace::locate(const Permutation& x) const {
  const auto& s = *state_;
  const auto& h = s.subgroup.elements();
  for (std::size_t q = 0; q < s.reps.size(); ++q) {
    if (h.contains(compose(x, s.rep_inverses[q]))) return static_cast<Point>(q);
  }
  throw HypothesisError("element does not lie in any known coset");
}

CosetSpace CosetSpace::build(Group g, Group h) {
  if (!is_subgroup(h, g)) throw HypothesisError("subgroup is not contained in the group");

  auto state = std::make_shared<State>(std::move(g), std::move(h));
  CosetSpace space(state);
  const auto& gens = state->group.generators();
  state->stride = gens.size();

  auto e = Permutation::identity(state->group.degree());
  state->rep_inverses.push_back(e);
  state->reps.push_back(std::move(e));
  const auto& helems = state->subgroup.elements();

  for (std::size_t p = 0; p < state->reps.size(); ++p) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Permutation x = compose(state->reps[p], gens[j]);
      std::optional<Point> found;
      for (std::size_t q = 0; q < state->reps.size(); ++q) {
        if (helems.contains(compose(x, state->rep_inverses[q]))) {
          found = static_cast<Point>(q);
          break;
        }
      }
      if (!found) {
        found = static_cast<Point>(state->reps.size());
        state->rep_inverses.push_back(x.inverse());
        state->reps.push_back(std::move(x));
      }
      state->table.push_back(*found);
    }
  }
  return space;
}

CosetSpace CosetSpace::natural(Group g) {
  if (!g.is_transitive()) throw HypothesisError("natural action requires a transitive group");
  Group h = g.stabilizer(0);
  CosetSpace space = build(std::move(g), std::move(h));
  auto& s = *space.state_;

  // Coset H*x corresponds to the natural point 0^x.
  const std::size_t n = s.reps.size();
  std::vector<Point> relabel(n);
  for (std::size_t p = 0; p < n; ++p) relabel[p] = s.reps[p][0];

  std::vector<Permutation> reps(n), inverses(n);
  std::vector<Point> table(s.table.size());
  for (std::size_t p = 0; p < n; ++p) {
    reps[relabel[p]] = s.reps[p];
    inverses[relabel[p]] = s.rep_inverses[p];
    for (std::size_t j = 0; j < s.stride; ++j) {
      table[relabel[p] * s.stride + j] = relabel[s.table[p * s.stride + j]];
    }
  }
  s.reps = std::move(reps);
  s.rep_inverses = std::move(inverses);
  s.table = std::move(table);
  return space;
}

Point CosetSpace::act(Point p, const Permutation& g) const {
  if (p >= size()) throw HypothesisError("act: point out of range");
  if (!group().contains(g)) throw HypothesisError("act: element is not in the group");
  return locate(compose(rep(p), g));
}

Group CosetSpace::point_stabilizer(Point p) const {
  if (p >= size()) throw HypothesisError("point_stabilizer: point out of range");
  std::vector<Permutation> gens;
  for (const auto& h : subgroup().generators()) gens.push_back(h.conjugate_by(rep(p)));
  return Group(group().degree(), std::move(gens), group().cap());
}

const ActionImage& CosetSpace::image() const {
  auto& s = *state_;
  std::call_once(s.image_once, [&] {
    const std::size_t n = s.reps.size();
    std::vector<Permutation> gens;
    for (std::size_t j = 0; j < s.stride; ++j) {
      std::vector<Point> images(n);
      for (std::size_t p = 0; p < n; ++p) images[p] = s.table[p * s.stride + j];
      gens.emplace_back(std::move(images));
    }
    s.image.reset(new ActionImage(Group(n, std::move(gens), s.group.cap())));
  });
  return *s.image;
}

PointTuple canonical_tuple(const CosetSpace& space, std::span<const Point> t) {
  PointTuple best(t.begin(), t.end());
  for (const auto& g : space.image().group().elements()) {
    // Compare t^g against best lexicographically, stopping at the first difference.
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Point a = g[t[i]];
      if (a < best[i]) {
        for (std::size_t j = 0; j < t.size(); ++j) best[j] = g[t[j]];
        break;
      }
      if (a > best[i]) break;
    }
  }
  return best;
}

}  // namespace basekit
