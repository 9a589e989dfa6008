#include "extremal.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace sperner {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t max_universe = 1u << 20;
constexpr std::uint64_t max_adjacency_universe = 4096;

struct Deadline {
  bool limited = false;
  Clock::time_point at{};
  std::uint64_t tick = 0;

  void arm(long long ms) {
    if (ms > 0) {
      limited = true;
      at = Clock::now() + std::chrono::milliseconds(ms);
    }
  }
  void check() {
    if (!limited) return;
    if ((++tick & 511) != 0) return;
    if (Clock::now() > at) throw BudgetExceeded{};
  }
};

int ceil_div2(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

// One coordinate's multiset of parts with longest-chain bookkeeping.
struct SliceState {
  std::map<SetMask, int> count;
  std::vector<SetMask> keys;
  std::vector<int> down, up;

  void recompute() {
    size_t k = keys.size();
    std::vector<size_t> order(k);
    for (size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return bits::count(keys[a]) < bits::count(keys[b]); });
    down.assign(k, 1);
    up.assign(k, 1);
    for (size_t oi : order)
      for (size_t j = 0; j < k; ++j)
        if (bits::proper_subset_of(keys[j], keys[oi]))
          down[oi] = std::max(down[oi], down[j] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      for (size_t j = 0; j < k; ++j)
        if (bits::proper_subset_of(keys[*it], keys[j]))
          up[*it] = std::max(up[*it], up[j] + 1);
  }

  bool would_fit(SetMask x, int r) const {
    if (count.count(x)) return true;
    int dx = 1, ux = 1;
    for (size_t j = 0; j < keys.size(); ++j) {
      if (bits::proper_subset_of(keys[j], x)) dx = std::max(dx, down[j] + 1);
      if (bits::proper_subset_of(x, keys[j])) ux = std::max(ux, up[j] + 1);
    }
    return dx + ux - 1 <= r;
  }

  void add(SetMask x) {
    if (count[x]++ == 0) {
      keys.push_back(x);
      recompute();
    }
  }
  void remove(SetMask x) {
    auto it = count.find(x);
    if (--it->second == 0) {
      count.erase(it);
      assert(!keys.empty() && keys.back() == x);
      keys.pop_back();
      recompute();
    }
  }
};

class Checker {
 public:
  virtual ~Checker() = default;
  virtual bool can_add(int idx) = 0;
  virtual void push(int idx) = 0;
  virtual void pop(int idx) = 0;  // reverse of the matching push
};

// Constrained coordinates must stay r-chain-free (r = 1 gives antichains).
class CoordChainFreeChecker : public Checker {
 public:
  CoordChainFreeChecker(const std::vector<WeakComposition>& uni, std::vector<int> coords, int r)
      : uni_(uni), coords_(std::move(coords)), r_(r), slices_(coords_.size()) {}

  bool can_add(int idx) override {
    const auto& c = uni_[static_cast<size_t>(idx)];
    for (size_t s = 0; s < coords_.size(); ++s)
      if (!slices_[s].would_fit(c.parts[static_cast<size_t>(coords_[s])], r_)) return false;
    return true;
  }
  void push(int idx) override {
    const auto& c = uni_[static_cast<size_t>(idx)];
    for (size_t s = 0; s < coords_.size(); ++s)
      slices_[s].add(c.parts[static_cast<size_t>(coords_[s])]);
  }
  void pop(int idx) override {
    const auto& c = uni_[static_cast<size_t>(idx)];
    for (size_t s = coords_.size(); s-- > 0;)
      slices_[s].remove(c.parts[static_cast<size_t>(coords_[s])]);
  }

 private:
  const std::vector<WeakComposition>& uni_;
  std::vector<int> coords_;
  int r_;
  std::vector<SliceState> slices_;
};

// Bad-pair graphs (one per constrained coordinate, or a single graph) must
// stay free of (r+1)-cliques among chosen items.
class BadGraphChecker : public Checker {
 public:
  // graphs[g] is a u*u adjacency matrix of "bad" pairs.
  BadGraphChecker(std::vector<std::vector<char>> graphs, size_t u, int r)
      : graphs_(std::move(graphs)), u_(u), r_(r) {}

  bool can_add(int idx) override {
    for (const auto& g : graphs_) {
      bad_.clear();
      for (int c : chosen_)
        if (g[static_cast<size_t>(idx) * u_ + static_cast<size_t>(c)]) bad_.push_back(c);
      if (static_cast<int>(bad_.size()) >= r_ && has_clique(g, bad_, r_)) return false;
    }
    return true;
  }
  void push(int idx) override { chosen_.push_back(idx); }
  void pop(int idx) override {
    assert(!chosen_.empty() && chosen_.back() == idx);
    (void)idx;
    chosen_.pop_back();
  }

 private:
  bool has_clique(const std::vector<char>& g, const std::vector<int>& cand, int need) const {
    if (need == 0) return true;
    if (static_cast<int>(cand.size()) < need) return false;
    for (size_t i = 0; static_cast<int>(cand.size() - i) >= need; ++i) {
      std::vector<int> next;
      for (size_t j = i + 1; j < cand.size(); ++j)
        if (g[static_cast<size_t>(cand[i]) * u_ + static_cast<size_t>(cand[j])])
          next.push_back(cand[j]);
      if (has_clique(g, next, need - 1)) return true;
    }
    return false;
  }

  std::vector<std::vector<char>> graphs_;
  size_t u_;
  int r_;
  std::vector<int> chosen_;
  std::vector<int> bad_;
};

bool good_pair_unifying(const WeakComposition& a, const WeakComposition& b, int k) {
  return a.parts[static_cast<size_t>(k - 1)] == b.parts[static_cast<size_t>(k - 1)] ||
         crossing(a, b, k);
}

bool good_pair_mutual(const WeakComposition& a, const WeakComposition& b) {
  return bits::intersects(a.parts[0], b.parts[1]) && bits::intersects(b.parts[0], a.parts[1]);
}

struct TheoremTraits {
  bool subsets = false;         // universe of subsets (1-part items)
  bool full = false;            // full compositions only
  bool pairs = false;           // p forced to 2
  bool lym_available = true;
};

TheoremTraits traits_of(SearchTheorem t) {
  switch (t) {
    case SearchTheorem::sperner:
    case SearchTheorem::erdos:
      return {true, false, false, true};
    case SearchTheorem::meshalkin:
    case SearchTheorem::e_m:
      return {false, true, false, true};
    case SearchTheorem::gst:
    case SearchTheorem::e_g:
      return {false, false, true, true};
    case SearchTheorem::unifying:
    case SearchTheorem::m_g:
      return {false, false, false, true};
    case SearchTheorem::rfamily:
      return {false, false, false, false};
  }
  throw ModelError("unknown theorem");
}

int effective_r(SearchTheorem t, int r) {
  switch (t) {
    case SearchTheorem::sperner:
    case SearchTheorem::meshalkin:
    case SearchTheorem::gst:
    case SearchTheorem::m_g:
      return 1;
    default:
      return r;
  }
}

std::vector<WeakComposition> assignments_to_comps(int n, int p, bool allow_unassigned) {
  int choices = p + (allow_unassigned ? 1 : 0);
  double size_est = 1;
  for (int i = 0; i < n; ++i) size_est *= choices;
  if (size_est > static_cast<double>(max_universe)) throw ModelError("universe too large");
  std::vector<WeakComposition> out;
  std::vector<int> assign(static_cast<size_t>(n), 0);
  while (true) {
    WeakComposition c;
    c.parts.assign(static_cast<size_t>(p), 0);
    for (int e = 0; e < n; ++e)
      if (assign[static_cast<size_t>(e)] < p)
        c.parts[static_cast<size_t>(assign[static_cast<size_t>(e)])] |= SetMask{1} << e;
    out.push_back(std::move(c));
    int i = 0;
    while (i < n && assign[static_cast<size_t>(i)] == choices - 1) assign[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    ++assign[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end(),
            [](const WeakComposition& a, const WeakComposition& b) { return a.parts < b.parts; });
  return out;
}

struct LymData {
  bool enabled = false;
  BigRat bound;
  std::vector<BigRat> class_cost;
  std::vector<int> class_of;
  std::vector<int> class_order;  // ascending by cost
};

LymData build_lym(SearchTheorem t, const std::vector<WeakComposition>& uni, int n, int p, int r,
                  bool want) {
  LymData d;
  auto tr = traits_of(t);
  if (!want || !tr.lym_available) return d;
  d.enabled = true;
  switch (t) {
    case SearchTheorem::sperner:
    case SearchTheorem::meshalkin:
    case SearchTheorem::gst:
    case SearchTheorem::m_g:
      d.bound = 1;
      break;
    case SearchTheorem::erdos:
    case SearchTheorem::e_g:
      d.bound = r;
      break;
    case SearchTheorem::e_m:
      d.bound = BigRat(boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(p - 1)));
      break;
    case SearchTheorem::unifying:
      d.bound = BigRat(boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(p)));
      break;
    case SearchTheorem::rfamily:
      break;
  }
  std::map<Shape, int> classes;
  d.class_of.resize(uni.size());
  for (size_t i = 0; i < uni.size(); ++i) {
    Shape s = tr.subsets ? Shape{{bits::count(uni[i].parts[0])}} : uni[i].shape();
    auto [it, fresh] = classes.emplace(s, static_cast<int>(classes.size()));
    if (fresh) {
      BigInt denom = tr.subsets ? binomial(n, s.sizes[0]) : multinomial(s.total(), s);
      d.class_cost.push_back(BigRat(1) / BigRat(denom));
    }
    d.class_of[i] = it->second;
  }
  d.class_order.resize(d.class_cost.size());
  for (size_t i = 0; i < d.class_order.size(); ++i) d.class_order[i] = static_cast<int>(i);
  std::sort(d.class_order.begin(), d.class_order.end(),
            [&](int a, int b) { return d.class_cost[static_cast<size_t>(a)] < d.class_cost[static_cast<size_t>(b)]; });
  return d;
}

struct Searcher {
  const std::vector<WeakComposition>& uni;
  Checker& chk;
  const LymData& lym;
  Deadline dl;
  int best = -1;
  std::vector<int> best_set;
  std::vector<int> chosen;
  BigRat sigma = 0;
  std::uint64_t nodes = 0;

  void do_push(int v) {
    chk.push(v);
    chosen.push_back(v);
    if (lym.enabled) sigma += lym.class_cost[static_cast<size_t>(lym.class_of[static_cast<size_t>(v)])];
  }
  void do_pop(int v) {
    chk.pop(v);
    chosen.pop_back();
    if (lym.enabled) sigma -= lym.class_cost[static_cast<size_t>(lym.class_of[static_cast<size_t>(v)])];
  }

  // Max further items admitted by the lym budget assuming cheapest first.
  long long lym_extra(const std::vector<int>& cands) {
    std::vector<long long> cnt(lym.class_cost.size(), 0);
    for (int v : cands) ++cnt[static_cast<size_t>(lym.class_of[static_cast<size_t>(v)])];
    BigRat slack = lym.bound - sigma;
    long long extra = 0;
    for (int c : lym.class_order) {
      long long avail = cnt[static_cast<size_t>(c)];
      if (avail == 0) continue;
      if (slack <= 0) break;
      const BigRat& w = lym.class_cost[static_cast<size_t>(c)];
      BigInt fit = (boost::multiprecision::numerator(slack) * boost::multiprecision::denominator(w)) /
                   (boost::multiprecision::denominator(slack) * boost::multiprecision::numerator(w));
      long long take = fit >= avail ? avail : fit.convert_to<long long>();
      extra += take;
      slack -= w * take;
      if (take < avail) break;
    }
    return extra;
  }

  void dfs(const std::vector<int>& cands) {
    ++nodes;
    dl.check();
    if (static_cast<int>(chosen.size()) > best) {
      best = static_cast<int>(chosen.size());
      best_set = chosen;
    }
    if (static_cast<int>(chosen.size() + cands.size()) <= best) return;
    if (lym.enabled &&
        static_cast<long long>(chosen.size()) + lym_extra(cands) <= best)
      return;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (static_cast<int>(chosen.size() + (cands.size() - i)) <= best) break;
      int v = cands[i];
      do_push(v);
      std::vector<int> next;
      next.reserve(cands.size() - i - 1);
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (chk.can_add(cands[j])) next.push_back(cands[j]);
      dfs(next);
      do_pop(v);
    }
  }

  bool feasible(const std::vector<int>& cands, int need) {
    ++nodes;
    dl.check();
    if (need == 0) return true;
    if (static_cast<int>(cands.size()) < need) return false;
    if (lym.enabled && lym_extra(cands) < need) return false;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (static_cast<int>(cands.size() - i) < need) break;
      int v = cands[i];
      do_push(v);
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (chk.can_add(cands[j])) next.push_back(cands[j]);
      bool ok = feasible(next, need - 1);
      do_pop(v);
      if (ok) return true;
    }
    return false;
  }

  // Lexicographically smallest family of the target size, canonical order.
  std::vector<int> lexmin_witness(int target, const std::vector<int>& all) {
    std::vector<int> result;
    std::vector<int> cands = all;
    int need = target;
    while (need > 0) {
      bool advanced = false;
      for (size_t i = 0; i < cands.size(); ++i) {
        if (static_cast<int>(cands.size() - i) < need) break;
        int v = cands[i];
        do_push(v);
        std::vector<int> next;
        for (size_t j = i + 1; j < cands.size(); ++j)
          if (chk.can_add(cands[j])) next.push_back(cands[j]);
        if (feasible(next, need - 1)) {
          result.push_back(v);
          cands = std::move(next);
          --need;
          advanced = true;
          break;
        }
        do_pop(v);
      }
      if (!advanced) throw ModelError("internal: witness reconstruction failed");
    }
    return result;
  }
};

Family family_from_indices(const SearchProblem& prob, const std::vector<WeakComposition>& uni,
                           const std::vector<int>& idxs) {
  auto tr = traits_of(prob.theorem);
  GroundSet g(prob.n);
  if (tr.subsets) {
    std::vector<SetMask> sets;
    sets.reserve(idxs.size());
    for (int i : idxs) sets.push_back(uni[static_cast<size_t>(i)].parts[0]);
    return Family::of_sets(g, std::move(sets));
  }
  int p = tr.pairs ? 2 : prob.p;
  std::vector<WeakComposition> comps;
  comps.reserve(idxs.size());
  for (int i : idxs) comps.push_back(uni[static_cast<size_t>(i)]);
  return Family::of_comps(g, p, std::move(comps));
}

void hereditary_spot_check(const SearchProblem& prob, const std::vector<WeakComposition>& uni) {
  size_t u = uni.size();
  if (u == 0) return;
  std::mt19937_64 rng(0x5EED5EEDull);
  int r = effective_r(prob.theorem, prob.r);
  for (int trial = 0; trial < 24; ++trial) {
    size_t sz = 1 + rng() % std::min<size_t>(6, u);
    std::set<int> pick;
    while (pick.size() < sz) pick.insert(static_cast<int>(rng() % u));
    std::vector<int> idxs(pick.begin(), pick.end());
    Family fam = family_from_indices(prob, uni, idxs);
    if (!theorem_predicate(prob.theorem, fam, r, prob.size_cap).holds) continue;
    for (size_t drop = 0; drop < idxs.size(); ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < idxs.size(); ++i)
        if (i != drop) sub.push_back(idxs[i]);
      Family subfam = family_from_indices(prob, uni, sub);
      if (!theorem_predicate(prob.theorem, subfam, r, prob.size_cap).holds)
        throw ModelError("search constraint is not hereditary");
    }
  }
}

std::unique_ptr<Checker> make_checker(const SearchProblem& prob,
                                      const std::vector<WeakComposition>& uni, int p, int r) {
  switch (prob.theorem) {
    case SearchTheorem::sperner:
    case SearchTheorem::erdos:
      return std::make_unique<CoordChainFreeChecker>(uni, std::vector<int>{0}, r);
    case SearchTheorem::meshalkin:
    case SearchTheorem::e_m:
    case SearchTheorem::rfamily: {
      std::vector<int> coords(static_cast<size_t>(p));
      for (int k = 0; k < p; ++k) coords[static_cast<size_t>(k)] = k;
      return std::make_unique<CoordChainFreeChecker>(uni, coords, r);
    }
    case SearchTheorem::gst:
    case SearchTheorem::e_g: {
      if (uni.size() > max_adjacency_universe) throw ModelError("universe too large");
      size_t u = uni.size();
      std::vector<std::vector<char>> graphs(1, std::vector<char>(u * u, 0));
      for (size_t i = 0; i < u; ++i)
        for (size_t j = i + 1; j < u; ++j) {
          char bad = good_pair_mutual(uni[i], uni[j]) ? 0 : 1;
          graphs[0][i * u + j] = bad;
          graphs[0][j * u + i] = bad;
        }
      return std::make_unique<BadGraphChecker>(std::move(graphs), u, r);
    }
    case SearchTheorem::unifying:
    case SearchTheorem::m_g: {
      if (uni.size() > max_adjacency_universe) throw ModelError("universe too large");
      size_t u = uni.size();
      std::vector<std::vector<char>> graphs(static_cast<size_t>(p), std::vector<char>(u * u, 0));
      for (int k = 1; k <= p; ++k)
        for (size_t i = 0; i < u; ++i)
          for (size_t j = i + 1; j < u; ++j) {
            char bad = good_pair_unifying(uni[i], uni[j], k) ? 0 : 1;
            graphs[static_cast<size_t>(k - 1)][i * u + j] = bad;
            graphs[static_cast<size_t>(k - 1)][j * u + i] = bad;
          }
      return std::make_unique<BadGraphChecker>(std::move(graphs), u, r);
    }
  }
  throw ModelError("unknown theorem");
}

}  // namespace

const char* theorem_name(SearchTheorem t) {
  switch (t) {
    case SearchTheorem::sperner: return "sperner";
    case SearchTheorem::erdos: return "erdos";
    case SearchTheorem::meshalkin: return "meshalkin";
    case SearchTheorem::e_m: return "e-m";
    case SearchTheorem::gst: return "gst";
    case SearchTheorem::e_g: return "e-g";
    case SearchTheorem::unifying: return "unifying";
    case SearchTheorem::m_g: return "m-g";
    case SearchTheorem::rfamily: return "rfamily";
  }
  return "?";
}

std::optional<SearchTheorem> theorem_from_name(const std::string& name) {
  for (SearchTheorem t :
       {SearchTheorem::sperner, SearchTheorem::erdos, SearchTheorem::meshalkin, SearchTheorem::e_m,
        SearchTheorem::gst, SearchTheorem::e_g, SearchTheorem::unifying, SearchTheorem::m_g,
        SearchTheorem::rfamily})
    if (name == theorem_name(t)) return t;
  return std::nullopt;
}

std::vector<SetMask> universe_subset_masks(int n) {
  GroundSet g(n);
  if (n > 20) throw ModelError("universe too large");
  std::vector<SetMask> out;
  out.reserve(size_t{1} << n);
  for (SetMask m = 0; m <= g.universe(); ++m) {
    out.push_back(m);
    if (m == g.universe()) break;
  }
  return out;
}

std::vector<WeakComposition> universe_full_compositions(int n, int p) {
  GroundSet g(n);
  if (p < 1) throw ModelError("need p >= 1");
  return assignments_to_comps(n, p, false);
}

std::vector<WeakComposition> universe_partial_compositions(int n, int p) {
  GroundSet g(n);
  if (p < 1) throw ModelError("need p >= 1");
  return assignments_to_comps(n, p, true);
}

BigInt theorem_bound(SearchTheorem t, int n, int p, int r) {
  using boost::multiprecision::pow;
  switch (t) {
    case SearchTheorem::sperner: return binomial(n, n / 2);
    case SearchTheorem::erdos: return sum_of_largest(n, 2, r, ShapeScope::exact_total);
    case SearchTheorem::meshalkin: return largest_multinomial(n, p);
    case SearchTheorem::e_m:
      return sum_of_largest(n, p, pow(BigInt(r), static_cast<unsigned>(p - 1)),
                            ShapeScope::exact_total);
    case SearchTheorem::gst: return binomial(n, n / 2);
    case SearchTheorem::e_g: return sum_of_largest(n, 2, r, ShapeScope::le_total);
    case SearchTheorem::unifying:
      return sum_of_largest(n, p, pow(BigInt(r), static_cast<unsigned>(p)), ShapeScope::le_total);
    case SearchTheorem::m_g: return largest_multinomial(n, p);
    case SearchTheorem::rfamily:
      return sum_of_largest(n, p + 1, pow(BigInt(r), static_cast<unsigned>(p)),
                            ShapeScope::exact_total);
  }
  throw ModelError("unknown theorem");
}

HypothesisVerdict theorem_predicate(SearchTheorem t, const Family& f, int r,
                                    std::optional<int> size_cap) {
  switch (t) {
    case SearchTheorem::sperner:
      if (f.kind != FamilyKind::subsets) throw ModelError("needs a subset family");
      return is_antichain(f.sets);
    case SearchTheorem::erdos:
      if (f.kind != FamilyKind::subsets) throw ModelError("needs a subset family");
      return is_r_chain_free(f.sets, r);
    case SearchTheorem::meshalkin:
      return meshalkin_condition(f, true);
    case SearchTheorem::e_m: {
      for (int j = 0; j < f.m(); ++j)
        if (!f.comps[static_cast<size_t>(j)].is_full(f.ground)) {
          Witness w;
          w.kind = "not-full";
          w.items = {j};
          return {false, w};
        }
      return slices_r_chain_free(f, r, true);
    }
    case SearchTheorem::gst:
      return gst_condition(f, size_cap ? size_cap : std::optional<int>(f.ground.n));
    case SearchTheorem::e_g:
      return eg_condition(f, r);
    case SearchTheorem::unifying:
      return unifying_condition(f, r);
    case SearchTheorem::m_g:
      return unifying_condition(f, 1);
    case SearchTheorem::rfamily:
      return slices_r_chain_free(f, r, true);
  }
  throw ModelError("unknown theorem");
}

SearchResult max_family_search(const SearchProblem& prob) {
  GroundSet g(prob.n);
  auto tr = traits_of(prob.theorem);
  int p = tr.subsets ? 1 : (tr.pairs ? 2 : prob.p);
  if (!tr.subsets && p < 2) throw ModelError("need p >= 2");
  int r = effective_r(prob.theorem, prob.r);
  if (r < 1) throw ModelError("need r >= 1");

  std::vector<WeakComposition> uni;
  if (tr.subsets) {
    for (SetMask m : universe_subset_masks(prob.n)) uni.push_back(WeakComposition{{m}});
  } else if (tr.full) {
    uni = universe_full_compositions(prob.n, p);
  } else {
    uni = universe_partial_compositions(prob.n, p);
  }
  if (prob.theorem == SearchTheorem::gst && prob.size_cap) {
    std::erase_if(uni, [&](const WeakComposition& c) {
      return bits::count(c.parts[0]) + bits::count(c.parts[1]) > *prob.size_cap;
    });
  }

  if (prob.check_hereditary) hereditary_spot_check(prob, uni);

  auto checker = make_checker(prob, uni, p, r);
  LymData lym = build_lym(prob.theorem, uni, prob.n, p, r, prob.lym_prune);

  // Branch order: descending pairwise-compatibility degree, index ascending.
  size_t u = uni.size();
  std::vector<int> degree(u, 0);
  for (size_t i = 0; i < u; ++i) {
    checker->push(static_cast<int>(i));
    for (size_t j = 0; j < u; ++j)
      if (j != i && checker->can_add(static_cast<int>(j))) ++degree[i];
    checker->pop(static_cast<int>(i));
  }
  std::vector<int> branch(u);
  for (size_t i = 0; i < u; ++i) branch[i] = static_cast<int>(i);
  std::stable_sort(branch.begin(), branch.end(),
                   [&](int a, int b) { return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)]; });

  Searcher s{uni, *checker, lym};
  s.dl.arm(prob.budget_ms);

  SearchResult res;
  res.universe_size = u;
  bool exhausted = true;
  try {
    s.dfs(branch);
  } catch (const BudgetExceeded&) {
    exhausted = false;
  }
  res.optimum = std::max(s.best, 0);
  res.nodes = s.nodes;

  std::vector<int> witness_set = s.best_set;
  if (exhausted && res.optimum > 0) {
    std::vector<int> all(u);
    for (size_t i = 0; i < u; ++i) all[i] = static_cast<int>(i);
    try {
      witness_set = s.lexmin_witness(res.optimum, all);
    } catch (const BudgetExceeded&) {
      exhausted = false;
    }
  }
  res.exhausted = exhausted;
  res.nodes = s.nodes;
  std::sort(witness_set.begin(), witness_set.end());
  res.witness = family_from_indices(prob, uni, witness_set);
  if (!theorem_predicate(prob.theorem, res.witness, r, prob.size_cap).holds)
    throw ModelError("internal: search witness fails the hypothesis");

  res.bound = theorem_bound(prob.theorem, prob.n, p, prob.r);
  res.attained = res.exhausted && BigInt(res.optimum) == res.bound;
  return res;
}

Family construct_middle_layers(int n, int r) {
  GroundSet g(n);
  if (r < 1 || r > n + 1) throw ModelError("need 1 <= r <= n+1");
  int start = ceil_div2(n - r);
  std::vector<SetMask> sets;
  for (int k = start; k <= start + r - 1; ++k)
    for (SetMask m : bits::combinations(n, k)) sets.push_back(m);
  return Family::of_sets(g, std::move(sets));
}

namespace {

// All subsets of the mask with exactly k elements, ascending mask order.
std::vector<SetMask> subsets_of_mask(SetMask mask, int k) {
  auto elems = bits::elements(mask);
  std::vector<SetMask> out;
  for (SetMask comb : bits::combinations(static_cast<int>(elems.size()), k)) {
    SetMask m = 0;
    for (int b : bits::elements(comb)) m |= SetMask{1} << elems[static_cast<size_t>(b)];
    out.push_back(m);
  }
  return out;
}

void comps_of_shape(const Shape& shape, size_t part, SetMask remaining, WeakComposition& cur,
                    std::vector<WeakComposition>& out) {
  if (part == shape.sizes.size()) {
    out.push_back(cur);
    return;
  }
  for (SetMask m : subsets_of_mask(remaining, shape.sizes[part])) {
    cur.parts[part] = m;
    comps_of_shape(shape, part + 1, remaining & ~m, cur, out);
  }
}

}  // namespace

Family construct_meshalkin(int n, int p) {
  GroundSet g(n);
  Shape shape = balanced_shape(n, p);
  std::vector<WeakComposition> comps;
  WeakComposition cur;
  cur.parts.assign(static_cast<size_t>(p), 0);
  comps_of_shape(shape, 0, g.universe(), cur, comps);
  std::sort(comps.begin(), comps.end(),
            [](const WeakComposition& a, const WeakComposition& b) { return a.parts < b.parts; });
  return Family::of_comps(g, p, std::move(comps));
}

Family construct_eg_pairs(int n, int r) {
  GroundSet g(n);
  Family layers = construct_middle_layers(n, r);
  std::vector<WeakComposition> comps;
  comps.reserve(layers.sets.size());
  for (SetMask m : layers.sets) comps.push_back(WeakComposition{{m, g.universe() & ~m}});
  std::sort(comps.begin(), comps.end(),
            [](const WeakComposition& a, const WeakComposition& b) { return a.parts < b.parts; });
  return Family::of_comps(g, 2, std::move(comps));
}

Family construct_notr(int n, int p, int r) {
  GroundSet g(n);
  if (p < 2) throw ModelError("need p >= 2");
  if (r < 1) throw ModelError("need r >= 1");
  if (n <= p) throw ModelError("need n > p");
  int np = n - p + 1;
  int start = ceil_div2(np - r);
  if (start < 0 || start + r - 1 > np) throw ModelError("layer window out of range");
  SetMask head_universe = bits::full_mask(np);
  std::vector<WeakComposition> comps;
  for (int k = start; k <= start + r - 1; ++k)
    for (SetMask a : bits::combinations(np, k)) {
      WeakComposition c;
      c.parts.reserve(static_cast<size_t>(p));
      c.parts.push_back(a & head_universe);
      for (int j = 2; j <= p; ++j) c.parts.push_back(SetMask{1} << (n - j + 1));
      comps.push_back(std::move(c));
    }
  std::sort(comps.begin(), comps.end(),
            [](const WeakComposition& a, const WeakComposition& b) { return a.parts < b.parts; });
  return Family::of_comps(g, p, std::move(comps));
}

SharpStructureReport verify_sharp_structure(const Family& f, int r) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("sharp structure needs a composition family");
  if (r < 1) throw ModelError("need r >= 1");
  for (const auto& c : f.comps)
    if (!c.is_full(f.ground)) throw ModelError("sharp structure needs full compositions");

  int n = f.ground.n, p = f.p;
  auto ord = descending_order(n, p, ShapeScope::exact_total);
  BigInt R = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(p - 1));
  BigInt count = static_cast<long long>(ord.entries.size());
  if (R > count) R = count;
  long long Rll = R.convert_to<long long>();

  SharpStructureReport rep;
  rep.R = R;
  rep.M_R = ord.value_at(Rll);
  rep.M_R1 = ord.value_at(Rll + 1);

  std::map<Shape, long long> present;
  for (const auto& c : f.comps) present[c.shape()]++;

  rep.ok = true;
  for (const auto& e : ord.entries) {
    ShapeStructure s;
    s.shape = e.shape;
    s.coefficient = e.value;
    s.total = e.value;
    auto it = present.find(e.shape);
    s.present = it == present.end() ? 0 : it->second;
    s.required_full = e.value > rep.M_R1;
    s.forbidden = e.value < rep.M_R;
    s.ok = (!s.required_full || BigInt(s.present) == e.value) && (!s.forbidden || s.present == 0);
    rep.ok = rep.ok && s.ok;
    rep.shapes.push_back(std::move(s));
  }
  return rep;
}

}  // namespace sperner
