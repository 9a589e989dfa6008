#include "chains.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace sperner {

MaximalChain MaximalChain::identity(int n) {
  MaximalChain c;
  c.order.resize(static_cast<size_t>(n));
  std::iota(c.order.begin(), c.order.end(), 0);
  return c;
}

bool MaximalChain::valid(int n) const {
  if (static_cast<int>(order.size()) != n) return false;
  SetMask seen = 0;
  for (int e : order) {
    if (e < 0 || e >= n) return false;
    SetMask bit = SetMask{1} << e;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool separates(const MaximalChain& chain, const WeakComposition& c) {
  int n = chain.n();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(chain.order[static_cast<size_t>(i)])] = i;

  int prev_max = -1;
  for (SetMask part : c.parts) {
    if (part == 0) continue;
    int lo = n, hi = -1;
    for (int e : bits::elements(part)) {
      lo = std::min(lo, pos[static_cast<size_t>(e)]);
      hi = std::max(hi, pos[static_cast<size_t>(e)]);
    }
    if (lo <= prev_max) return false;
    prev_max = hi;
  }
  return true;
}

BigInt count_separating(int n, const Shape& s) {
  int total = s.total();
  for (int a : s.sizes)
    if (a < 0) throw ModelError("shape sizes must be nonnegative");
  if (total > n) throw ModelError("shape total exceeds ground set size");
  BigInt r = binomial(n, total) * factorial(n - total);
  for (int a : s.sizes) r *= factorial(a);
  return r;
}

int count_separated_items(const MaximalChain& chain, const Family& f) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("separation scan needs a composition family");
  int c = 0;
  for (const auto& item : f.comps)
    if (separates(chain, item)) ++c;
  return c;
}

namespace {

void consider(const MaximalChain& chain, const Family& f, SeparationScan& scan) {
  int c = count_separated_items(chain, f);
  ++scan.inspected;
  if (c > scan.max_separated ||
      (c == scan.max_separated && (scan.inspected == 1 || chain.order < scan.witness.order))) {
    scan.max_separated = c;
    scan.witness = chain;
  }
}

}  // namespace

SeparationScan max_separated_all(const Family& f) {
  int n = f.ground.n;
  if (n > 8) throw ModelError("all-chains scan needs n <= 8");
  SeparationScan scan;
  scan.mode = ChainScanMode::all_chains;
  scan.max_separated = -1;
  MaximalChain chain = MaximalChain::identity(n);
  do {
    consider(chain, f, scan);
  } while (std::next_permutation(chain.order.begin(), chain.order.end()));
  return scan;
}

SeparationScan max_separated_sampled(const Family& f, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw ModelError("need at least one sample");
  SeparationScan scan;
  scan.mode = ChainScanMode::sampled;
  scan.seed = seed;
  scan.max_separated = -1;
  int n = f.ground.n;
  std::mt19937_64 rng(seed);
  MaximalChain chain = MaximalChain::identity(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // explicit Fisher-Yates with modulo indexing: reproducible across
    // platforms for a fixed seed (mt19937_64 output is pinned by the standard)
    std::iota(chain.order.begin(), chain.order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(chain.order[static_cast<size_t>(i)], chain.order[static_cast<size_t>(j)]);
    }
    consider(chain, f, scan);
  }
  return scan;
}

}  // namespace sperner
