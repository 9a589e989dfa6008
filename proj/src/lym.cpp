#include "lym.hpp"

#include <algorithm>
#include <functional>

namespace sperner {

namespace {

int ceil_div2(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

LymReport finish(std::map<Shape, long long>& tally, const BigRat& bound,
                 const std::function<BigInt(const Shape&)>& coeff) {
  LymReport rep;
  rep.bound = bound;
  rep.sum = 0;
  for (auto& [shape, count] : tally) {
    BigInt c = coeff(shape);
    rep.sum += BigRat(count) / BigRat(c);
    rep.per_shape.push_back({shape, count, c});
  }
  rep.satisfied = rep.sum <= rep.bound;
  return rep;
}

}  // namespace

LymReport lym_subsets(const Family& f, const BigRat& bound) {
  if (f.kind != FamilyKind::subsets) throw ModelError("lym_subsets needs a subset family");
  std::map<Shape, long long> tally;
  for (SetMask m : f.sets) tally[Shape{{bits::count(m)}}]++;
  int n = f.ground.n;
  return finish(tally, bound, [n](const Shape& s) { return binomial(n, s.sizes[0]); });
}

LymReport lym_compositions_full(const Family& f, const BigRat& bound) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("lym_compositions_full needs a composition family");
  std::map<Shape, long long> tally;
  for (const auto& c : f.comps) {
    if (!c.is_full(f.ground)) throw ModelError("item is not a full composition of the ground set");
    tally[c.shape()]++;
  }
  int n = f.ground.n;
  return finish(tally, bound, [n](const Shape& s) { return multinomial(n, s); });
}

LymReport lym_compositions_partial(const Family& f, const BigRat& bound) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("lym_compositions_partial needs a composition family");
  std::map<Shape, long long> tally;
  for (const auto& c : f.comps) tally[c.shape()]++;
  return finish(tally, bound, [](const Shape& s) { return multinomial(s.total(), s); });
}

BigRat lym_example_notr(int p, int r, int n) {
  if (p < 2) throw ModelError("need p >= 2");
  if (r < 1) throw ModelError("need r >= 1");
  if (n <= p) throw ModelError("need n > p");
  int np = n - p + 1;  // layer universe size
  int start = ceil_div2(np - r);
  if (start < 0 || start + r - 1 > np) throw ModelError("layer window out of range");
  BigRat sum = 0;
  for (int j = start; j <= start + r - 1; ++j)
    sum += BigRat(binomial(np, j) * factorial(j), factorial(j + p - 1));
  return sum;
}

void validate_hkr(const HkrInstance& inst, bool require_q_budget) {
  size_t N = inst.M.size();
  if (N == 0) throw ModelError("weighted-sum instance needs at least one value");
  if (inst.q.size() != N) throw ModelError("q length must match M length");
  for (size_t i = 0; i < N; ++i) {
    if (inst.M[i] < 0) throw ModelError("values must be nonnegative");
    if (i + 1 < N && inst.M[i] < inst.M[i + 1]) throw ModelError("values must be sorted descending");
    if (inst.q[i] < 0 || inst.q[i] > 1) throw ModelError("weights must lie in [0,1]");
  }
  if (inst.R < 1 || inst.R > static_cast<long long>(N))
    throw ModelError("R out of range [1,N]");
  if (require_q_budget) {
    BigRat s = 0;
    for (const auto& w : inst.q) s += w;
    if (s > inst.R) throw ModelError("sum of weights exceeds R");
  }
}

HkrCheck hkr_check(const HkrInstance& inst) {
  validate_hkr(inst, false);
  HkrCheck out;
  out.lhs = 0;
  for (size_t i = 0; i < inst.M.size(); ++i) out.lhs += inst.q[i] * BigRat(inst.M[i]);
  out.rhs = 0;
  for (long long i = 0; i < inst.R; ++i) out.rhs += inst.M[static_cast<size_t>(i)];
  out.holds = out.lhs <= BigRat(out.rhs);
  return out;
}

HkrEquality hkr_equality(const HkrInstance& inst) {
  validate_hkr(inst, true);
  size_t N = inst.M.size();
  const BigInt& MR = inst.M[static_cast<size_t>(inst.R - 1)];
  if (MR <= 0) throw ModelError("equality characterization needs M_R > 0");

  auto chk = hkr_check(inst);
  HkrEquality out;
  out.equality = chk.lhs == BigRat(chk.rhs);

  long long Rp = 0, Rs = 0;
  for (size_t i = 0; i < N; ++i) {
    if (inst.M[i] > MR) Rp = static_cast<long long>(i) + 1;
    if (inst.M[i] >= MR) Rs = static_cast<long long>(i) + 1;
  }
  out.R_prime = Rp;
  out.R_second = Rs;

  bool ok = true;
  BigRat middle = 0;
  for (size_t i = 0; i < N; ++i) {
    if (inst.M[i] > MR) {
      if (inst.q[i] != 1) ok = false;
    } else if (inst.M[i] < MR) {
      if (inst.q[i] != 0) ok = false;
    } else {
      middle += inst.q[i];
    }
  }
  if (middle != BigRat(inst.R - Rp)) ok = false;
  out.characterized = ok;
  out.agree = out.equality == out.characterized;
  return out;
}

BigInt cardinality_bound_from_lym(int n, int p, const BigInt& R, ShapeScope scope) {
  auto shapes = scope == ShapeScope::exact_total ? shapes_exact_total(n, p) : shapes_le_total(n, p);
  BigInt N = static_cast<long long>(shapes.size());
  BigInt capped = R < N ? R : N;
  return sum_of_largest(n, p, capped, scope);
}

}  // namespace sperner
