#include <doctest.h>

#include "basekit/catalog.hpp"
#include "basekit/error.hpp"
#include "basekit/partition.hpp"
#include "oracle.hpp"

using namespace basekit;

TEST_CASE("minimum cell counts match exhaustive colorings") {
  for (const char* spec : {"sym(2)", "sym(3)", "sym(4)", "cyc(4)", "cyc(7)", "dih(5)", "dih(6)", "agl(5)",
                           "young-wreath(2,3)", "young-wreath(3,2)", "alt(4)"}) {
    CAPTURE(spec);
    const Group g = catalog(spec);
    const auto p = asymmetric_partition(g);
    CHECK(is_asymmetric(g, p));
    CHECK(p.cell_count() <= 5);
    CHECK(p.cell_of[0] == 0);
    const auto elems = oracle::elements_of(g);
    std::vector<int> colors(p.cell_of.begin(), p.cell_of.end());
    CHECK(oracle::asymmetric(elems, colors));
    CHECK(static_cast<int>(p.cell_count()) == oracle::min_asymmetric_cells(elems, g.degree(), 5));
  }
}

TEST_CASE("Sym3 needs exactly three cells") {
  CHECK(asymmetric_partition(catalog("sym(3)")).cell_count() == 3);
  CHECK_FALSE(search_asymmetric_partition(catalog("sym(3)"), 2, 1'000'000).has_value());
}

TEST_CASE("trivial group takes one cell") {
  const auto p = asymmetric_partition(Group::trivial(6));
  CHECK(p.cell_count() == 1);
}

TEST_CASE("non-solvable input is rejected") {
  CHECK_THROWS_AS(asymmetric_partition(catalog("alt(5)")), HypothesisError);
}

TEST_CASE("randomized path beyond the exhaustive limit") {
  PartitionSearchOptions opts;
  opts.exhaustive_limit = 0;
  for (const char* spec : {"cyc(12)", "dih(10)", "wreath(cyc(2),cyc(5))"}) {
    CAPTURE(spec);
    const Group g = catalog(spec);
    const auto p = asymmetric_partition(g, opts);
    CHECK(is_asymmetric(g, p));
    CHECK(p.cell_count() <= 5);
  }
}

TEST_CASE("partition helpers") {
  const auto p = PartitionColoring::normalized({3, 3, 1, 0});
  CHECK(p.cell_of == std::vector<std::uint8_t>{0, 0, 1, 2});
  CHECK(p.cells() == std::vector<std::vector<Point>>{{0, 1}, {2}, {3}});
  CHECK(fixes_partition(parse_cycles("(1 2)", 4), p));
  CHECK_FALSE(fixes_partition(parse_cycles("(2 3)", 4), p));
  CHECK_FALSE(is_asymmetric(catalog("sym(3)"), PartitionColoring::normalized({0, 0, 0, 0})));
}
