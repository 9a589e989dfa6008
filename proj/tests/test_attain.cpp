#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>
#include <vector>

#include "attain.hpp"
#include "coeffs.hpp"
#include "model.hpp"
#include "oracles.hpp"

using namespace sperner;

namespace {

std::vector<BigInt> lstar_values(const FirstAppearanceTable& t) {
  std::vector<BigInt> v;
  for (const auto& e : t.Lstar) v.push_back(e.value);
  return v;
}

}  // namespace

TEST_CASE("first-appearance table for a divisible case") {
  FirstAppearanceTable t = first_appearances(6, 3);
  CHECK(t.nu == 2);
  CHECK(t.rho == 0);
  CHECK(t.L.size() == 7);
  CHECK(t.Lstar.size() == 7);
  CHECK(t.L.at(0).rank == 11);
  CHECK(t.L.at(0).value == 20);
  CHECK(t.L.at(1).rank == 2);
  CHECK(t.L.at(2).rank == 1);
  CHECK(t.L.at(2).value == 90);
  CHECK(t.L.at(3).value == 60);
  CHECK(t.L.at(4).value == 30);
  CHECK(t.L.at(5).value == 6);
  CHECK(t.L.at(6).value == 1);
  CHECK(lstar_values(t) == std::vector<BigInt>{90, 60, 60, 30, 20, 6, 1});
  CHECK(t.Lstar[0].kappa == 2);
  CHECK(t.Lstar[1].kappa == 1);
  CHECK(t.Lstar[2].kappa == 3);
}

TEST_CASE("first-appearance table at n = 10, p = 3") {
  FirstAppearanceTable t = first_appearances(10, 3);
  CHECK(t.nu == 3);
  CHECK(t.rho == 1);
  CHECK(t.L.size() == 11);
  CHECK(t.L.at(1).value == 1260);
  CHECK(t.L.at(1).rank == 16);
  CHECK(t.L.at(6).value == 1260);
  CHECK(t.L.at(6).rank == 13);
  CHECK(t.L.at(3).value == 4200);
  CHECK(t.L.at(3).rank == 1);
  CHECK(t.L.at(4).value == 4200);
  CHECK(t.L.at(10).value == 1);

  REQUIRE(t.Lstar.size() == 11);
  CHECK(t.Lstar[4].value == 1260);
  CHECK(t.Lstar[5].value == 1260);
  CHECK(t.Lstar[4].rank == 13);
  CHECK(t.Lstar[5].rank == 16);
  CHECK(lstar_values(t) ==
        std::vector<BigInt>{4200, 4200, 3150, 2520, 1260, 1260, 360, 252, 90, 10, 1});
}

TEST_CASE("table structure invariants across a grid") {
  for (int p = 2; p <= 5; ++p)
    for (int n = p; n <= 14; ++n) {
      FirstAppearanceTable t = first_appearances(n, p);
      CHECK(t.n == n);
      CHECK(t.p == p);
      CHECK(n == t.nu * p + t.rho);
      CHECK(t.rho >= 0);
      CHECK(t.rho < p);
      // every size 0..n debuts exactly once, in both views
      CHECK(t.L.size() == static_cast<std::size_t>(n + 1));
      CHECK(t.Lstar.size() == t.L.size());
      std::set<int> seen;
      for (const auto& e : t.Lstar) {
        CHECK(t.L.at(e.kappa).rank == e.rank);
        CHECK(t.L.at(e.kappa).value == e.value);
        seen.insert(e.kappa);
      }
      CHECK(seen.size() == t.Lstar.size());

      // debut order: ranks ascend weakly, values descend weakly,
      // ties are listed by ascending size
      for (std::size_t i = 0; i + 1 < t.Lstar.size(); ++i) {
        CHECK(t.Lstar[i].rank <= t.Lstar[i + 1].rank);
        CHECK(t.Lstar[i].value >= t.Lstar[i + 1].value);
        if (t.Lstar[i].rank == t.Lstar[i + 1].rank)
          CHECK(t.Lstar[i].kappa < t.Lstar[i + 1].kappa);
      }
      CHECK(t.Lstar.front().rank == 1);
      CHECK(t.Lstar.front().value == largest_multinomial(n, p));
      CHECK(t.Lstar.back().value == 1);

      // each debut value really is the coefficient at its rank
      DescendingOrder ord = descending_order(n, p, ShapeScope::exact_total);
      for (const auto& e : t.Lstar) {
        CHECK(e.value == ord.value_at(e.rank));
        // no earlier entry contains the size
        for (long long rk = 1; rk < e.rank; ++rk) {
          const auto& sizes = ord.entries[static_cast<std::size_t>(rk - 1)].form.sizes;
          CHECK(std::find(sizes.begin(), sizes.end(), e.kappa) == sizes.end());
        }
      }
    }
}

TEST_CASE("non-attainment criteria at the reference points") {
  CHECK(criterion_thm_attain(4, 3, 2));
  CHECK(criterion_cor_attain(4, 3, 2));
  CHECK(criterion_thm_attain(10, 3, 5));
  CHECK(!criterion_cor_attain(10, 3, 5));
  CHECK(!criterion_thm_attain(6, 3, 2));
  CHECK(!criterion_cor_attain(6, 3, 2));
  CHECK(!criterion_thm_attain(3, 3, 2));
  CHECK(criterion_thm_attain(3, 3, 3));
  CHECK(criterion_cor_attain(3, 3, 3));
}

TEST_CASE("the simpler criterion implies the stronger one") {
  for (int p = 3; p <= 5; ++p)
    for (int n = p; n <= 12; ++n)
      for (int r = 2; r <= 4; ++r) {
        if (static_cast<std::size_t>(r + 1) > static_cast<std::size_t>(n + 1)) continue;
        bool cor = criterion_cor_attain(n, p, r);
        bool thm = criterion_thm_attain(n, p, r);
        if (cor) CHECK(thm);
        // direct recomputation of the main criterion
        FirstAppearanceTable t = first_appearances(n, p);
        DescendingOrder ord = descending_order(n, p, ShapeScope::exact_total);
        long long R = 1;
        for (int i = 0; i < p - 1; ++i) R *= r;
        BigInt m_next = ord.value_at(R + 1);
        CHECK(thm == (t.Lstar[static_cast<std::size_t>(r - 1)].value > m_next));
        CHECK(cor == (t.Lstar[static_cast<std::size_t>(r - 1)].value >
                      t.Lstar[static_cast<std::size_t>(r)].value));
      }
}

TEST_CASE("criterion domain errors") {
  CHECK_THROWS_AS(criterion_thm_attain(4, 3, 1), ModelError);
  CHECK_THROWS_AS(criterion_thm_attain(4, 2, 2), ModelError);
  CHECK_THROWS_AS(criterion_thm_attain(2, 3, 2), ModelError);
  CHECK_THROWS_AS(criterion_cor_attain(4, 3, 20), ModelError);  // not enough entries
  CHECK_THROWS_AS(first_appearances(3, 0), ModelError);
  CHECK_THROWS_AS(first_appearances(-1, 2), ModelError);
}

TEST_CASE("supporting lemma bookkeeping") {
  AttainLemmaCheck a = attainlemma_check(6, 3, 2);
  CHECK(a.sizes == std::vector<int>{2, 1});
  CHECK(a.shape_count == 1);
  CHECK(a.total == 90);
  CHECK(a.threshold_count == 4);
  CHECK(a.threshold_total == 270);
  CHECK(a.ok);

  AttainLemmaCheck b = attainlemma_check(4, 3, 2);
  CHECK(b.sizes == std::vector<int>{1, 2});
  CHECK(b.shape_count == 3);
  CHECK(b.total == 36);
  CHECK(b.threshold_total == 42);
  CHECK(b.ok);

  AttainLemmaCheck c = attainlemma_check(10, 3, 5);
  CHECK(c.sizes == std::vector<int>{3, 4, 2, 5, 6});
  CHECK(c.shape_count == 15);
  CHECK(c.threshold_count == 25);
  CHECK(c.total == 40950);
  CHECK(c.threshold_total == 51870);
  CHECK(c.ok);

  // the comparisons are strict and recomputable
  for (int p = 3; p <= 4; ++p)
    for (int n = p; n <= 10; ++n)
      for (int r = 2; r <= 3; ++r) {
        AttainLemmaCheck l = attainlemma_check(n, p, r);
        CHECK(l.count_ok == (BigInt(l.shape_count) < l.threshold_count));
        CHECK(l.total_ok == (l.total < l.threshold_total));
        CHECK(l.ok == (l.count_ok && l.total_ok));
        CHECK(static_cast<int>(l.sizes.size()) == r);
      }
}

TEST_CASE("expected patterns for known rows") {
  CHECK(expected_pattern(6, 3, 6) == ">=>>>");
  CHECK(expected_pattern(7, 3, 6) == "=>>>>");
  CHECK(expected_pattern(10, 3, 6) == "=>>>=");  // the tied tail pair
  CHECK(expected_pattern(9, 5, 6) == "=>>=>");   // remainder p-1 with a single block
  CHECK(expected_pattern(12, 4, 6) == ">=>>>");
  CHECK(expected_pattern(6, 3, 4) == ">=>");     // truncation
}

TEST_CASE("sweep reproduces the structure claims on the whole grid") {
  auto rows = proposition_sweep(2, 5, 3, 6, 3, 20);
  CHECK(!rows.empty());
  std::size_t expected_rows = 0;
  for (int p = 3; p <= 6; ++p) expected_rows += static_cast<std::size_t>(20 - p + 1);
  CHECK(rows.size() == expected_rows);
  for (const auto& row : rows) {
    CHECK(row.pattern_match);
    CHECK(row.pattern == row.expected_pattern);
    CHECK(row.divides == (row.rho == 0));
    for (const auto& pr : row.per_r) {
      CHECK(pr.classification != "inconsistent");
      if (pr.cor == 1) CHECK(pr.thm == 1);
      if (pr.thm == 1) CHECK(pr.classification == "excluded");
      if (pr.thm == 0) CHECK(pr.classification == "undecided");
    }
  }
}

TEST_CASE("sweep rows carry the frozen reference data") {
  auto rows = proposition_sweep(2, 3, 3, 3, 3, 7);
  REQUIRE(rows.size() == 5);
  const SweepRow& r6 = rows[3];
  CHECK(r6.n == 6);
  CHECK(r6.Lstar == std::vector<BigInt>{90, 60, 60, 30, 20, 6});
  CHECK(r6.pattern == ">=>>>");
  REQUIRE(r6.per_r.size() == 2);
  CHECK(r6.per_r[0].r == 2);
  CHECK(r6.per_r[0].thm == 0);
  CHECK(r6.per_r[0].classification == "undecided");
  CHECK(r6.per_r[1].thm == 1);
  CHECK(r6.per_r[1].classification == "excluded");

  std::string csv = sweep_to_csv(rows);
  std::istringstream in(csv);
  std::string header, row1;
  std::getline(in, header);
  CHECK(header ==
        "n,p,nu,rho,divides,L1,L2,L3,L4,L5,L6,pattern,expected,match,"
        "thm_r2,cor_r2,lemma_r2,class_r2,thm_r3,cor_r3,lemma_r3,class_r3");
  std::getline(in, row1);
  CHECK(row1 == "3,3,1,0,1,6,3,3,1,,,>=>,>=>,1,0,0,1,undecided,1,1,1,excluded");
  std::string row4;
  std::getline(in, row4);
  std::getline(in, row4);
  std::getline(in, row4);
  CHECK(row4 == "6,3,2,0,1,90,60,60,30,20,6,>=>>>,>=>>>,1,0,0,1,undecided,1,1,1,excluded");
}

TEST_CASE("sweep argument validation") {
  CHECK_THROWS_AS(proposition_sweep(3, 2, 3, 3, 3, 5), ModelError);
  CHECK_THROWS_AS(proposition_sweep(2, 3, 4, 3, 3, 5), ModelError);
  CHECK_THROWS_AS(proposition_sweep(2, 3, 3, 3, 6, 5), ModelError);
}
