#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "model.hpp"

namespace sperner {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Which shapes participate in an ordering: totals exactly n, or totals <= n.
enum class ShapeScope { exact_total, le_total };

BigInt binomial(int n, int k);            // 0 outside 0 <= k <= n
BigInt factorial(int n);
BigInt multinomial(int n, const Shape& s);  // 0 unless s.total() == n, sizes >= 0
BigInt multinomial(const Shape& s);         // total taken from the shape

// The balanced shape maximizing the p-part multinomial for n, descending order.
Shape balanced_shape(int n, int p);
BigInt largest_multinomial(int n, int p);

struct CoeffEntry {
  Shape shape;   // ordered part sizes
  Shape form;    // shape sorted descending
  BigInt value;  // multinomial coefficient
};

// All p-part shapes in scope, ranked by value descending; ties broken by form
// lexicographically descending, then raw shape lexicographically descending.
// Entry i has rank i+1.
struct DescendingOrder {
  int n = 0;
  int p = 0;
  ShapeScope scope = ShapeScope::exact_total;
  std::vector<CoeffEntry> entries;

  // 1-based M_k; zero beyond the end.
  BigInt value_at(long long rank) const;
};

DescendingOrder descending_order(int n, int p, ShapeScope scope);

// Sum of the R largest values in scope, zero-padded past the end.
BigInt sum_of_largest(int n, int p, const BigInt& R, ShapeScope scope);

// Ordered shape lists (enumeration order: lexicographic ascending).
std::vector<Shape> shapes_exact_total(int n, int p);
std::vector<Shape> shapes_le_total(int n, int p);

}  // namespace sperner
