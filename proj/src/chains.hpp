#pragma once

#include <cstdint>
#include <vector>

#include "coeffs.hpp"
#include "model.hpp"

namespace sperner {

// A maximal chain in the subset lattice of [n], i.e. the permutation listing
// the order elements enter: order[i] is the element added at step i+1.
struct MaximalChain {
  std::vector<int> order;

  int n() const { return static_cast<int>(order.size()); }
  static MaximalChain identity(int n);
  bool valid(int n) const;
};

// The chain separates a composition when its nonempty parts appear as
// consecutive disjoint position blocks in part order: every element of a
// nonempty part precedes every element of the next nonempty part.
bool separates(const MaximalChain& chain, const WeakComposition& c);

// Number of maximal chains of [n] separating any fixed composition of the
// given shape: binom(n, sum a_i) * prod a_i! * (n - sum a_i)!.
BigInt count_separating(int n, const Shape& s);

enum class ChainScanMode { all_chains, sampled };

struct SeparationScan {
  int max_separated = 0;
  MaximalChain witness;     // lexicographically smallest argmax inspected
  ChainScanMode mode = ChainScanMode::all_chains;
  std::uint64_t inspected = 0;
  std::uint64_t seed = 0;   // sampled mode only
};

// Maximum, over inspected maximal chains, of the number of family items the
// chain separates. All-chains mode needs n <= 8.
SeparationScan max_separated_all(const Family& f);
SeparationScan max_separated_sampled(const Family& f, std::uint64_t samples, std::uint64_t seed);

int count_separated_items(const MaximalChain& chain, const Family& f);

}  // namespace sperner
