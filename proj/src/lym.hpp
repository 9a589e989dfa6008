#pragma once

#include <map>
#include <vector>

#include "coeffs.hpp"
#include "model.hpp"

namespace sperner {

struct ShapeOccupancy {
  Shape shape;      // ordered part sizes (single size for subset families)
  long long count;  // items of that shape
  BigInt coefficient;
};

struct LymReport {
  BigRat sum;    // always reduced (cpp_rational normalizes)
  BigRat bound;
  bool satisfied = false;  // sum <= bound
  std::vector<ShapeOccupancy> per_shape;  // ascending by shape
};

// Subset families: sum of 1/binom(n,|A|) against the given bound.
LymReport lym_subsets(const Family& f, const BigRat& bound);

// Full compositions: sum of 1/multinomial(n; sizes); errors if any item is
// not a full composition of the ground set.
LymReport lym_compositions_full(const Family& f, const BigRat& bound);

// Weak partial compositions: denominator is the multinomial with the item's
// own total on top.
LymReport lym_compositions_partial(const Family& f, const BigRat& bound);

// Closed form for the layered example family (middle layers in the first
// part, fixed singleton tail): sum over the r chosen layers j of
// binom(n-p+1, j) * j! / (j+p-1)!.
BigRat lym_example_notr(int p, int r, int n);

// Weighted-sum instance: M_1 >= ... >= M_N >= 0, q_k in [0,1], 1 <= R <= N.
struct HkrInstance {
  std::vector<BigInt> M;
  std::vector<BigRat> q;
  long long R = 1;
};

struct HkrCheck {
  BigRat lhs;   // sum q_k M_k
  BigInt rhs;   // sum of the first R values
  bool holds = false;  // lhs <= rhs
};

void validate_hkr(const HkrInstance& inst, bool require_q_budget);
HkrCheck hkr_check(const HkrInstance& inst);

// Equality characterization; requires M_R > 0 and sum q_k <= R.
struct HkrEquality {
  bool equality = false;        // lhs == rhs
  bool characterized = false;   // q matches the structural description
  bool agree = false;           // the two coincide (must always be true)
  long long R_prime = 0;        // last index with M_k > M_R (0 if none)
  long long R_second = 0;       // last index with M_k == M_R
};
HkrEquality hkr_equality(const HkrInstance& inst);

// Count of shapes in scope, capped bound via the weighted-sum lemma.
BigInt cardinality_bound_from_lym(int n, int p, const BigInt& R, ShapeScope scope);

}  // namespace sperner
