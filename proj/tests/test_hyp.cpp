#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bits.hpp"
#include "extremal.hpp"
#include "hyp.hpp"
#include "model.hpp"
#include "oracles.hpp"

using namespace sperner;

namespace {

Family subsets_family(int n, const std::vector<SetMask>& sets) {
  return Family::of_sets(GroundSet{n}, sets);
}

Family comps_family(int n, const std::vector<WeakComposition>& comps) {
  return Family::of_comps(GroundSet{n}, static_cast<int>(comps.at(0).p()), comps);
}

// verify a chain witness refers to real items and forms a strict chain
void check_chain_witness(const std::vector<SetMask>& sets, const HypothesisVerdict& v, int r) {
  REQUIRE(v.witness.has_value());
  const Witness& w = *v.witness;
  CHECK(w.kind == "chain");
  CHECK(static_cast<int>(w.items.size()) == r + 1);
  for (std::size_t i = 0; i + 1 < w.items.size(); ++i) {
    SetMask a = sets[static_cast<std::size_t>(w.items[i])];
    SetMask b = sets[static_cast<std::size_t>(w.items[i + 1])];
    CHECK(bits::proper_subset_of(a, b));
  }
}

}  // namespace

TEST_CASE("longest chain and r-chain-freeness match brute force over the [3] lattice") {
  std::vector<SetMask> all;
  for (SetMask m = 0; m < 8; ++m) all.push_back(m);
  for (std::uint32_t pick = 0; pick < 256; ++pick) {
    std::vector<SetMask> sets;
    for (int i = 0; i < 8; ++i)
      if (pick & (1u << i)) sets.push_back(all[static_cast<std::size_t>(i)]);
    int brute = oracle::longest_chain_brute(sets);
    CHECK(longest_chain(sets) == brute);
    for (int r = 1; r <= 4; ++r) {
      HypothesisVerdict v = is_r_chain_free(sets, r);
      CHECK(v.holds == (brute <= r));
      if (!v.holds) check_chain_witness(sets, v, r);
    }
    HypothesisVerdict anti = is_antichain(sets);
    CHECK(anti.holds == (brute <= 1));
  }
}

TEST_CASE("antichain witness is an oriented comparable pair") {
  std::vector<SetMask> sets = {0b011, 0b100, 0b111};
  HypothesisVerdict v = is_antichain(sets);
  REQUIRE(!v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == "comparable-pair");
  CHECK(v.witness->items == std::vector<int>{0, 2});
  CHECK(v.witness->sets == std::vector<SetMask>{0b011, 0b111});
}

TEST_CASE("duplicate sets do not create chains") {
  std::vector<SetMask> sets = {0b01, 0b01, 0b01};
  CHECK(longest_chain(sets) == 1);
  CHECK(is_antichain(sets).holds);
}

TEST_CASE("crossing is symmetric and matches its definition") {
  WeakComposition c1{{0b0011, 0b0100}};
  WeakComposition c2{{0b0110, 0b0001}};
  for (int k = 1; k <= 2; ++k) {
    bool direct1 = bits::intersects(c1.parts[static_cast<std::size_t>(k - 1)],
                                    c2.union_mask() & ~c2.parts[static_cast<std::size_t>(k - 1)]) &&
                   bits::intersects(c2.parts[static_cast<std::size_t>(k - 1)],
                                    c1.union_mask() & ~c1.parts[static_cast<std::size_t>(k - 1)]);
    CHECK(crossing(c1, c2, k) == direct1);
    CHECK(crossing(c1, c2, k) == crossing(c2, c1, k));
  }
  CHECK_THROWS_AS(crossing(c1, c2, 0), ModelError);
  CHECK_THROWS_AS(crossing(c1, c2, 3), ModelError);
}

TEST_CASE("unifying condition equals slicewise chain-freeness on full compositions") {
  // exhaustive over all subfamilies of the full-composition universes
  struct Case {
    int n, p;
  };
  for (Case c : {Case{3, 2}, Case{2, 3}}) {
    auto universe = universe_full_compositions(c.n, c.p);
    REQUIRE(universe.size() <= 9);
    for (std::uint32_t pick = 1; pick < (1u << universe.size()); ++pick) {
      std::vector<WeakComposition> comps;
      for (std::size_t i = 0; i < universe.size(); ++i)
        if (pick & (1u << i)) comps.push_back(universe[i]);
      Family f = comps_family(c.n, comps);
      for (int r = 1; r <= 3; ++r)
        CHECK(unifying_condition(f, r).holds == slices_r_chain_free(f, r, true).holds);
    }
  }
}

TEST_CASE("unifying witness is a pairwise-bad set at one coordinate") {
  // chain at coordinate 1: {0} < {0,1} < {0,1,2} as first parts of full comps
  Family f = comps_family(3, {WeakComposition{{0b001, 0b110}}, WeakComposition{{0b011, 0b100}},
                              WeakComposition{{0b111, 0}}});
  HypothesisVerdict v = unifying_condition(f, 2);
  REQUIRE(!v.holds);
  CHECK(v.witness->kind == "bad-set");
  CHECK(v.witness->coordinate == 1);
  CHECK(v.witness->items == std::vector<int>{0, 1, 2});
  CHECK(unifying_condition(f, 3).holds);
  CHECK_THROWS_AS(unifying_condition(subsets_family(3, {1}), 1), ModelError);
}

TEST_CASE("gst condition requires crosswise intersections") {
  Family good = comps_family(2, {WeakComposition{{0b01, 0b10}}, WeakComposition{{0b10, 0b01}}});
  CHECK(gst_condition(good, std::nullopt).holds);

  Family bad = comps_family(3, {WeakComposition{{0b001, 0b010}}, WeakComposition{{0b001, 0b100}}});
  HypothesisVerdict v = gst_condition(bad, std::nullopt);
  REQUIRE(!v.holds);
  CHECK(v.witness->kind == "empty-intersection");
  CHECK(v.witness->items == std::vector<int>{0, 1});

  Family big = comps_family(3, {WeakComposition{{0b011, 0b100}}});
  CHECK(gst_condition(big, std::nullopt).holds);
  HypothesisVerdict capped = gst_condition(big, 2);
  REQUIRE(!capped.holds);
  CHECK(capped.witness->kind == "size-cap");
  CHECK(capped.witness->items == std::vector<int>{0});
}

TEST_CASE("eg condition bounds cliques of non-crossing pairs") {
  Family f = comps_family(3, {WeakComposition{{0b001, 0b010}}, WeakComposition{{0b001, 0b100}},
                              WeakComposition{{0b010, 0b100}}});
  // no two of these mutually intersect crosswise
  CHECK(!eg_condition(f, 1).holds);
  CHECK(!eg_condition(f, 2).holds);
  CHECK(eg_condition(f, 3).holds);
  HypothesisVerdict v = eg_condition(f, 2);
  CHECK(v.witness->kind == "bad-set");
  CHECK(v.witness->items == std::vector<int>{0, 1, 2});
}

TEST_CASE("meshalkin condition checks fullness then per-coordinate antichains") {
  Family partial = comps_family(3, {WeakComposition{{0b001, 0b010}}});
  HypothesisVerdict v = meshalkin_condition(partial, true);
  REQUIRE(!v.holds);
  CHECK(v.witness->kind == "not-full");
  CHECK(meshalkin_condition(partial, false).holds);

  Family chained = comps_family(3, {WeakComposition{{0b001, 0b110}}, WeakComposition{{0b011, 0b100}}});
  HypothesisVerdict w = meshalkin_condition(chained, true);
  REQUIRE(!w.holds);
  CHECK(w.witness->kind == "comparable-pair");
  CHECK(w.witness->coordinate == 1);
}

TEST_CASE("slice chain-freeness dedups repeated coordinate sets") {
  // both items share the same first part, so slice 1 has one distinct set
  Family f = comps_family(4, {WeakComposition{{0b0011, 0b0100}}, WeakComposition{{0b0011, 0b1000}}});
  CHECK(slices_r_chain_free(f, 1, true).holds);
  // slice 2 of a partial family may be skipped via include_last = false
  Family g = comps_family(4, {WeakComposition{{0b0001, 0b0010}}, WeakComposition{{0b0001, 0b0110}}});
  CHECK(!slices_r_chain_free(g, 1, true).holds);
  CHECK(slices_r_chain_free(g, 1, false).holds);
}

TEST_CASE("42-item family: last slice is the only obstruction at (4,3,2)") {
  // all full 3-part compositions of [4] whose shape class is (2,1,1), plus
  // the six of shape exactly (2,2,0)
  std::vector<WeakComposition> comps;
  for (const auto& c : universe_full_compositions(4, 3)) {
    Shape s = shape_of(c);
    Shape canon = s.canonical();
    if (canon.sizes == std::vector<int>{2, 1, 1} || s.sizes == std::vector<int>{2, 2, 0})
      comps.push_back(c);
  }
  Family f = comps_family(4, comps);
  REQUIRE(f.m() == 42);
  CHECK(slices_r_chain_free(f, 2, false).holds);       // first p-1 slices pass
  HypothesisVerdict v = slices_r_chain_free(f, 2, true);
  REQUIRE(!v.holds);                                    // the last slice has a 3-chain
  CHECK(v.witness->coordinate == 3);
  CHECK(!theorem_predicate(SearchTheorem::e_m, f, 2, std::nullopt).holds);
}
