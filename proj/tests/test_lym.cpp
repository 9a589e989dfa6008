#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "bits.hpp"
#include "extremal.hpp"
#include "lym.hpp"
#include "model.hpp"
#include "oracles.hpp"

using namespace sperner;

namespace {

// itemwise reference sums computed with the oracle coefficients
BigRat brute_subsets_sum(const Family& f) {
  BigRat sum = 0;
  for (SetMask a : f.sets) sum += BigRat(1, oracle::pascal(f.ground.n, bits::count(a)));
  return sum;
}

BigRat brute_full_sum(const Family& f) {
  BigRat sum = 0;
  for (const auto& c : f.comps)
    sum += BigRat(1, oracle::multinomial_with_rest(f.ground.n, shape_of(c).sizes));
  return sum;
}

BigRat brute_partial_sum(const Family& f) {
  BigRat sum = 0;
  for (const auto& c : f.comps) sum += BigRat(1, oracle::multinomial_own_total(shape_of(c).sizes));
  return sum;
}

}  // namespace

TEST_CASE("subset sums match the oracle and the whole-lattice identity") {
  for (int n = 2; n <= 7; ++n) {
    Family mid = construct_middle_layers(n, 1);
    LymReport rep = lym_subsets(mid, 1);
    CHECK(rep.sum == 1);
    CHECK(rep.satisfied);

    std::vector<SetMask> all;
    for (SetMask m = 0; m < (SetMask{1} << n); ++m) all.push_back(m);
    Family whole = Family::of_sets(GroundSet{n}, all);
    LymReport wr = lym_subsets(whole, 1);
    CHECK(wr.sum == BigRat(n + 1));  // each layer contributes exactly 1
    CHECK(wr.sum == brute_subsets_sum(whole));
    CHECK(!wr.satisfied);
  }
}

TEST_CASE("per-shape breakdown is consistent") {
  Family f = construct_middle_layers(4, 2);
  LymReport rep = lym_subsets(f, 2);
  CHECK(rep.sum == 2);
  CHECK(rep.satisfied);
  BigRat resum = 0;
  long long items = 0;
  for (const auto& s : rep.per_shape) {
    resum += BigRat(s.count, s.coefficient);
    items += s.count;
  }
  CHECK(resum == rep.sum);
  CHECK(items == f.m());
}

TEST_CASE("full composition sums: meshalkin family reaches 1, whole universe counts shapes") {
  for (int p = 2; p <= 3; ++p)
    for (int n = 2; n <= 5; ++n) {
      Family mk = construct_meshalkin(n, p);
      LymReport rep = lym_compositions_full(mk, 1);
      CHECK(rep.sum == 1);
      CHECK(rep.satisfied);
      CHECK(rep.sum == brute_full_sum(mk));

      Family all = Family::of_comps(GroundSet{n}, p, universe_full_compositions(n, p));
      LymReport ar = lym_compositions_full(all, 1);
      CHECK(ar.sum == BigRat(oracle::pascal(n + p - 1, p - 1)));  // one per shape
      CHECK(ar.sum == brute_full_sum(all));
    }
}

TEST_CASE("full-composition sum rejects partial items") {
  Family partial =
      Family::of_comps(GroundSet{3}, 2, {WeakComposition{{0b001, 0b010}}});
  CHECK_THROWS_AS(lym_compositions_full(partial, 1), ModelError);
  CHECK_NOTHROW(lym_compositions_partial(partial, 1));
  Family subs = Family::of_sets(GroundSet{3}, {0b001});
  CHECK_THROWS_AS(lym_subsets(partial, 1), ModelError);
  CHECK_THROWS_AS(lym_compositions_partial(subs, 1), ModelError);
}

TEST_CASE("partial composition sums match the oracle over whole universes") {
  for (int p = 2; p <= 3; ++p)
    for (int n = 2; n <= 4; ++n) {
      Family all = Family::of_comps(GroundSet{n}, p, universe_partial_compositions(n, p));
      LymReport rep = lym_compositions_partial(all, 1);
      CHECK(rep.sum == brute_partial_sum(all));
      // closed reference: sum over totals t of binom(n,t) * #shapes(t,p)
      BigRat expect = 0;
      for (int t = 0; t <= n; ++t)
        expect += BigRat(oracle::pascal(n, t) * oracle::pascal(t + p - 1, p - 1));
      CHECK(rep.sum == expect);
    }
}

TEST_CASE("layered example: frozen values, divergence, agreement with the built family") {
  CHECK(lym_example_notr(2, 1, 4) == BigRat(3, 2));
  CHECK(lym_example_notr(2, 1, 5) == BigRat(2));
  CHECK(lym_example_notr(2, 1, 6) == BigRat(10, 3));
  CHECK(lym_example_notr(2, 1, 7) == BigRat(5));
  CHECK(lym_example_notr(2, 1, 8) == BigRat(35, 4));

  BigRat prev = 0;
  for (int n = 4; n <= 30; ++n) {
    BigRat v = lym_example_notr(2, 1, n);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(lym_example_notr(2, 1, 6) > 3);

  for (int p = 2; p <= 3; ++p)
    for (int r = 1; r <= 2; ++r)
      for (int n = p + 2; n <= p + 6; ++n) {
        Family f = construct_notr(n, p, r);
        LymReport rep = lym_compositions_partial(f, 1);
        CHECK(rep.sum == lym_example_notr(p, r, n));
        CHECK(rep.sum == brute_partial_sum(f));
      }

  CHECK_THROWS_AS(lym_example_notr(1, 1, 5), ModelError);
  CHECK_THROWS_AS(lym_example_notr(2, 0, 5), ModelError);
  CHECK_THROWS_AS(lym_example_notr(2, 1, 2), ModelError);
}

TEST_CASE("weighted-sum inequality holds on random valid instances") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 10000; ++trial) {
    HkrInstance inst;
    int N = 1 + static_cast<int>(rng() % 8);
    std::vector<int> vals;
    for (int i = 0; i < N; ++i) vals.push_back(static_cast<int>(rng() % 12));
    std::sort(vals.rbegin(), vals.rend());
    for (int v : vals) inst.M.push_back(v);
    inst.R = 1 + static_cast<long long>(rng() % N);
    // random q in [0,1] scaled until the budget holds
    std::vector<BigRat> q;
    BigRat qsum = 0;
    for (int i = 0; i < N; ++i) {
      BigRat qi(static_cast<long long>(rng() % 7), 6);
      q.push_back(qi);
      qsum += qi;
    }
    if (qsum > inst.R) {
      for (auto& qi : q) qi = qi * BigRat(inst.R) / qsum;
    }
    inst.q = q;
    CHECK_NOTHROW(validate_hkr(inst, true));
    HkrCheck chk = hkr_check(inst);
    CHECK(chk.holds);
    // recompute both sides directly
    BigRat lhs = 0;
    for (int i = 0; i < N; ++i) lhs += inst.q[static_cast<std::size_t>(i)] * BigRat(inst.M[static_cast<std::size_t>(i)]);
    CHECK(chk.lhs == lhs);
    BigInt rhs = 0;
    for (long long i = 0; i < inst.R; ++i) rhs += inst.M[static_cast<std::size_t>(i)];
    CHECK(chk.rhs == rhs);
  }
}

TEST_CASE("equality characterization agrees with direct equality testing") {
  std::mt19937_64 rng(999);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 1000; ++trial) {
    HkrInstance inst;
    int N = 2 + static_cast<int>(rng() % 6);
    std::vector<int> vals;
    for (int i = 0; i < N; ++i) vals.push_back(1 + static_cast<int>(rng() % 4));  // ties likely
    std::sort(vals.rbegin(), vals.rend());
    for (int v : vals) inst.M.push_back(v);
    inst.R = 1 + static_cast<long long>(rng() % (N - 1));

    int style = static_cast<int>(rng() % 3);
    BigRat budget(inst.R);
    for (int i = 0; i < N; ++i) {
      BigRat qi;
      if (style == 0) {
        qi = i < inst.R ? 1 : 0;  // engineered exact equality
      } else if (style == 1) {
        qi = BigRat(static_cast<long long>(rng() % 5), 4);
      } else {
        // top-heavy with a fractional middle
        qi = i < inst.R - 1 ? BigRat(1) : BigRat(static_cast<long long>(rng() % 5), 4);
      }
      inst.q.push_back(qi);
    }
    BigRat qsum = 0;
    for (const auto& qi : inst.q) qsum += qi;
    if (qsum > budget) continue;  // characterization requires the budget
    ++checked;

    HkrCheck chk = hkr_check(inst);
    HkrEquality eq = hkr_equality(inst);
    CHECK(eq.equality == (BigRat(chk.rhs) == chk.lhs));
    CHECK(eq.agree);
    CHECK(eq.equality == eq.characterized);
  }
  CHECK(checked == 1000);
}

TEST_CASE("equality characterization corner cases") {
  // all q at 1 on the top block
  HkrInstance top{{5, 4, 3}, {1, 1, 0}, 2};
  HkrEquality e1 = hkr_equality(top);
  CHECK(e1.equality);
  CHECK(e1.characterized);
  CHECK(e1.agree);

  // fractional middle over a tied plateau: M = (5,3,3,3), R = 2
  HkrInstance mid{{5, 3, 3, 3}, {1, BigRat(1, 2), BigRat(1, 4), BigRat(1, 4)}, 2};
  HkrEquality e2 = hkr_equality(mid);
  CHECK(e2.equality);
  CHECK(e2.characterized);
  CHECK(e2.R_prime == 1);
  CHECK(e2.R_second == 4);

  // breaking the plateau weights breaks equality
  HkrInstance off{{5, 3, 3, 3}, {1, BigRat(1, 2), BigRat(1, 4), 0}, 2};
  HkrEquality e3 = hkr_equality(off);
  CHECK(!e3.equality);
  CHECK(!e3.characterized);
  CHECK(e3.agree);

  // requires a positive M_R
  HkrInstance zero{{5, 0}, {1, 0}, 2};
  CHECK_THROWS_AS(hkr_equality(zero), ModelError);
}

TEST_CASE("validation rejects malformed instances") {
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{}, {}, 1}, false), ModelError);
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{1, 2}, {0, 0}, 1}, false), ModelError);   // ascending
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{2, 1}, {0}, 1}, false), ModelError);      // q length
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{2, 1}, {2, 0}, 1}, false), ModelError);   // q > 1
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{2, 1}, {0, 0}, 0}, false), ModelError);   // R low
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{2, 1}, {0, 0}, 3}, false), ModelError);   // R high
  CHECK_THROWS_AS(validate_hkr(HkrInstance{{2, -1}, {0, 0}, 1}, false), ModelError);  // negative
  // budget enforcement only when requested
  HkrInstance over{{2, 1}, {1, 1}, 1};
  CHECK_NOTHROW(validate_hkr(over, false));
  CHECK_THROWS_AS(validate_hkr(over, true), ModelError);
}

TEST_CASE("cardinality bound equals the coefficient sum") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 2; p <= 3; ++p)
      for (long long R : {1LL, 3LL, 100LL})
        for (ShapeScope scope : {ShapeScope::exact_total, ShapeScope::le_total})
          CHECK(cardinality_bound_from_lym(n, p, R, scope) == sum_of_largest(n, p, R, scope));
}
