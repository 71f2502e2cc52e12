#include <doctest.h>

#include "basekit/base_reg.hpp"
#include "basekit/catalog.hpp"
#include "basekit/error.hpp"
#include "basekit/group_struct.hpp"
#include "oracle.hpp"

using namespace basekit;

namespace {

CosetSpace make(const char* g, const char* h) {
  return h ? CosetSpace::build(catalog(g), catalog(h)) : CosetSpace::natural(catalog(g));
}

}  // namespace

TEST_CASE("reg_count and total orbits equal direct enumeration") {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"sym(5)", "stab(sym(5),5)"}, {"sym(4)", "dih(4)"}, {"dih(7)", nullptr},   {"agl(5)", nullptr},
      {"alt(5)", "dih(5)"},         {"cyc(4)", nullptr},  {"sym(6)", "young(3,3)"},
  };
  for (const auto& [gs, hs] : cases) {
    CAPTURE(gs);
    CAPTURE(hs);
    const auto space = make(gs, hs);
    const auto ref = oracle::coset_action(space.group(), space.subgroup());
    for (std::size_t k = 1; k <= 4; ++k) {
      CAPTURE(k);
      const auto r = reg_count(space, k);
      const auto o = oracle::orbits_on_tuples(ref, k);
      CHECK(r.reg_count == o.regular);
      CHECK(r.total_orbits == o.total);
      CHECK(burnside_orbit_count(space, k) == o.total);
      CHECK(r.representatives.size() == std::min<std::uint64_t>(r.reg_count, ScanOptions{}.rep_cap));
      for (const auto& t : r.representatives) {
        CHECK(t[0] == 0);
        CHECK(is_regular_tuple(space, t));
        CHECK(canonical_tuple(space, t) == t);
      }
    }
  }
}

TEST_CASE("thread count does not change results") {
  const auto space = make("sym(6)", "young(3,3)");
  ScanOptions one;
  ScanOptions many;
  many.threads = 7;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto a = reg_count(space, k, one);
    const auto b = reg_count(space, k, many);
    CHECK(a.reg_count == b.reg_count);
    CHECK(a.total_orbits == b.total_orbits);
    CHECK(a.representatives == b.representatives);
  }
}

TEST_CASE("base size is the least k with a regular tuple") {
  for (const auto& [gs, hs] : std::vector<std::pair<const char*, const char*>>{
           {"sym(5)", "stab(sym(5),5)"}, {"sym(5)", "agl(5)"}, {"alt(5)", "dih(5)"}, {"dih(8)", nullptr},
           {"cyc(6)", nullptr}, {"sym(4)", "dih(4)"}}) {
    CAPTURE(gs);
    const auto space = make(gs, hs);
    const auto ref = oracle::coset_action(space.group(), space.subgroup());
    std::size_t expected = 1;
    while (oracle::orbits_on_tuples(ref, expected).regular == 0) ++expected;
    const auto r = base_size(space);
    CHECK(r.base_size == expected);
    CHECK(r.k == expected);
    CHECK(r.reg_count == oracle::orbits_on_tuples(ref, expected).regular);
    CHECK(is_regular_tuple(space, r.representatives.at(0)));
    CHECK(base_lower_bound(space.size(), space.image().stabilizer_elements().size()) <= expected);
  }
}

TEST_CASE("intersections agree with the tuple scan") {
  for (const auto& [gs, hs] : std::vector<std::pair<const char*, const char*>>{
           {"sym(5)", "stab(sym(5),5)"}, {"sym(5)", "agl(5)"}, {"sym(6)", "young(3,3)"}, {"sym(4)", "dih(4)"}}) {
    CAPTURE(gs);
    const Group g = catalog(gs);
    const Group h = catalog(hs);
    const auto b = *base_size(CosetSpace::build(g, h)).base_size;
    CHECK_FALSE(base_by_intersections(g, h, b - 1).has_value());
    const auto w = base_by_intersections(g, h, b);
    REQUIRE(w.has_value());
    CHECK(w->size() == b);
    CHECK((*w)[0].is_identity());
    auto inter = oracle::elements_of(g);
    for (const auto& x : *w) {
      std::set<oracle::Perm> conj;
      for (const auto& y : h.elements()) {
        const auto c = y.conjugate_by(x);
        conj.emplace(c.images().begin(), c.images().end());
      }
      inter = oracle::intersect(inter, conj);
    }
    CHECK(inter == oracle::elements_of(core(g, h)));
  }
  CHECK(base_by_intersections(catalog("sym(3)"), catalog("sym(3)"), 0).has_value());
}

TEST_CASE("lower bound formula") {
  CHECK(base_lower_bound(35, 1152) == 3);
  CHECK(base_lower_bound(5, 24) == 3);
  CHECK(base_lower_bound(25, 1152) == 4);
  CHECK(base_lower_bound(7, 1) == 1);
  CHECK(base_lower_bound(2, 1) == 1);
  CHECK(base_lower_bound(2, 2) == 3);
  CHECK_THROWS_AS(base_lower_bound(1, 1), HypothesisError);
}

TEST_CASE("degenerate and guarded cases") {
  const auto trivial = make("sym(4)", "sym(4)");
  const auto r = base_size(trivial);
  CHECK(r.trivial_action);
  CHECK(r.base_size == 0u);
  CHECK(is_regular_tuple(trivial, PointTuple{}));
  const auto regular = make("cyc(5)", nullptr);
  CHECK(base_size(regular).base_size == 1u);
  CHECK(reg_count(regular, 1).reg_count == 1);
  CHECK_THROWS_AS(reg_count(regular, 0), HypothesisError);
  ScanOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(reg_count(make("sym(8)", "young-wreath(4,2)"), 3, tight), BudgetExceeded);
  CHECK_THROWS_AS(is_regular_tuple(regular, PointTuple{5}), HypothesisError);
}

TEST_CASE("Sym4 natural at k = 6 matches the closed form") {
  const auto space = make("sym(4)", nullptr);
  // Regular iff at least three of the four points occur.
  const std::uint64_t regular_tuples = 4096 - oracle::tuples_with_at_most(4, 6, 2);
  CHECK(regular_tuples == 3720);
  CHECK(reg_count(space, 6).reg_count * 24 == regular_tuples);
}

TEST_CASE("regular orbit lower bound for solvable stabilizers") {
  const auto r = regular_floor_check(make("sym(4)", nullptr));
  CHECK(r.k == 6);
  CHECK(r.reg == 155);
  CHECK(r.holds);
  CHECK_THROWS_AS(regular_floor_check(make("sym(6)", nullptr)), HypothesisError);
}
