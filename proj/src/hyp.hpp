#pragma once

#include <optional>
#include <string>
#include <vector>

#include "model.hpp"

namespace sperner {

// Evidence for a failed hypothesis. Kinds:
//   "comparable-pair"    sets = {a,b} with a proper subset of b
//   "chain"              sets = inclusion chain of r+1 distinct sets
//   "bad-set"            items = indices of r+1 items pairwise bad (clique)
//   "empty-intersection" items = {j,k}, sets = {A_j, B_k} with A_j disjoint B_k
//   "size-cap"           items = {j}, sets = {A_j, B_j} exceeding the cap
//   "not-full"           items = {j}, item j not a full composition
// Indices are 0-based positions in the family; coordinate is 1-based (0 = n/a).
struct Witness {
  std::string kind;
  int coordinate = 0;
  std::vector<int> items;
  std::vector<SetMask> sets;
};

struct HypothesisVerdict {
  bool holds = true;
  std::optional<Witness> witness;
};

// Longest inclusion chain among distinct sets, plus one lexicographically
// smallest (by index sequence) chain achieving it.
int longest_chain(const std::vector<SetMask>& sets);

HypothesisVerdict is_antichain(const std::vector<SetMask>& sets);
HypothesisVerdict is_r_chain_free(const std::vector<SetMask>& sets, int r);

// Part k of c1 meets the union of the other parts of c2 and vice versa.
bool crossing(const WeakComposition& c1, const WeakComposition& c2, int k);

// Per coordinate, among every r+1 items two must agree on the coordinate or
// cross there; equivalently no r+1 pairwise-bad items exist.
HypothesisVerdict unifying_condition(const Family& f, int r);

// p = 2: every part-1 set meets every other item's part-2 set; optional cap
// on |A_j| + |B_j|.
HypothesisVerdict gst_condition(const Family& f, std::optional<int> size_cap);

// p = 2: among every r+1 items some two mutually intersect crosswise.
HypothesisVerdict eg_condition(const Family& f, int r);

// Every coordinate slice (dedup) is an antichain; optionally all items full.
HypothesisVerdict meshalkin_condition(const Family& f, bool require_full);

// Coordinate slices 1..p (or 1..p-1 when include_last is false) r-chain-free.
HypothesisVerdict slices_r_chain_free(const Family& f, int r, bool include_last);

}  // namespace sperner
