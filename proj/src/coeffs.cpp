#include "coeffs.hpp"

#include <algorithm>

namespace sperner {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is binom(n-k+i, i) after this step
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt multinomial(int n, const Shape& s) {
  int left = n;
  BigInt r = 1;
  for (int a : s.sizes) {
    if (a < 0 || a > left) return 0;
    r *= binomial(left, a);
    left -= a;
  }
  return left == 0 ? r : 0;
}

BigInt multinomial(const Shape& s) { return multinomial(s.total(), s); }

Shape balanced_shape(int n, int p) {
  if (p < 1) throw ModelError("need p >= 1");
  if (n < 0) throw ModelError("need n >= 0");
  int q = n / p, rho = n - p * q;
  Shape s;
  s.sizes.assign(static_cast<size_t>(p), q);
  for (int i = 0; i < rho; ++i) s.sizes[static_cast<size_t>(i)] = q + 1;
  return s;
}

BigInt largest_multinomial(int n, int p) { return multinomial(n, balanced_shape(n, p)); }

namespace {

void emit_shapes(int total, int p, std::vector<int>& cur, std::vector<Shape>& out) {
  if (p == 1) {
    cur.push_back(total);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    emit_shapes(total - a, p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Shape> shapes_exact_total(int n, int p) {
  if (p < 1) throw ModelError("need p >= 1");
  if (n < 0) throw ModelError("need n >= 0");
  std::vector<Shape> out;
  std::vector<int> cur;
  emit_shapes(n, p, cur, out);
  return out;
}

std::vector<Shape> shapes_le_total(int n, int p) {
  std::vector<Shape> out;
  for (int t = 0; t <= n; ++t) {
    auto part = shapes_exact_total(t, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) { return a.sizes < b.sizes; });
  return out;
}

DescendingOrder descending_order(int n, int p, ShapeScope scope) {
  DescendingOrder ord;
  ord.n = n;
  ord.p = p;
  ord.scope = scope;
  auto shapes = scope == ShapeScope::exact_total ? shapes_exact_total(n, p) : shapes_le_total(n, p);
  ord.entries.reserve(shapes.size());
  for (auto& s : shapes) {
    CoeffEntry e;
    e.value = multinomial(s.total(), s);
    e.form = s.canonical();
    e.shape = std::move(s);
    ord.entries.push_back(std::move(e));
  }
  std::stable_sort(ord.entries.begin(), ord.entries.end(),
                   [](const CoeffEntry& a, const CoeffEntry& b) {
                     if (a.value != b.value) return a.value > b.value;
                     if (a.form != b.form) return a.form.sizes > b.form.sizes;
                     return a.shape.sizes > b.shape.sizes;
                   });
  return ord;
}

BigInt DescendingOrder::value_at(long long rank) const {
  if (rank < 1 || rank > static_cast<long long>(entries.size())) return 0;
  return entries[static_cast<size_t>(rank - 1)].value;
}

BigInt sum_of_largest(int n, int p, const BigInt& R, ShapeScope scope) {
  if (R < 0) throw ModelError("need R >= 0");
  auto ord = descending_order(n, p, scope);
  BigInt take = R;
  if (take > static_cast<long long>(ord.entries.size()))
    take = static_cast<long long>(ord.entries.size());
  BigInt sum = 0;
  long long t = take.convert_to<long long>();
  for (long long i = 0; i < t; ++i) sum += ord.entries[static_cast<size_t>(i)].value;
  return sum;
}

}  // namespace sperner
