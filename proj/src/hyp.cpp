#include "hyp.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sperner {

namespace {

// Distinct sets with the index of their first occurrence.
struct Dedup {
  std::vector<SetMask> sets;
  std::vector<int> first_index;
};

Dedup dedup_indexed(const std::vector<SetMask>& v) {
  Dedup d;
  std::map<SetMask, int> seen;
  for (size_t i = 0; i < v.size(); ++i) {
    if (seen.emplace(v[i], static_cast<int>(i)).second) {
      d.sets.push_back(v[i]);
      d.first_index.push_back(static_cast<int>(i));
    }
  }
  return d;
}

// up[i] = longest chain among d.sets starting at set i and going upward.
std::vector<int> up_heights(const Dedup& d) {
  size_t m = d.sets.size();
  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return bits::count(d.sets[a]) > bits::count(d.sets[b]);
  });
  std::vector<int> up(m, 1);
  for (size_t oi : order)
    for (size_t j = 0; j < m; ++j)
      if (bits::proper_subset_of(d.sets[oi], d.sets[j]))
        up[oi] = std::max(up[oi], 1 + up[j]);
  return up;
}

// Lexicographically smallest index sequence (i_1 < chain order, not index
// order) forming an inclusion chain of the given length.
std::vector<size_t> smallest_chain(const Dedup& d, const std::vector<int>& up, int length) {
  std::vector<size_t> chain;
  size_t m = d.sets.size();
  for (int need = length; need > 0; --need) {
    SetMask below = chain.empty() ? 0 : d.sets[chain.back()];
    bool have_below = !chain.empty();
    size_t pick = m;
    for (size_t i = 0; i < m; ++i) {
      if (have_below && !bits::proper_subset_of(below, d.sets[i])) continue;
      if (up[i] >= need) {
        pick = i;
        break;
      }
    }
    if (pick == m) return {};  // caller guaranteed existence
    chain.push_back(pick);
  }
  return chain;
}

Witness chain_witness(const Dedup& d, int length) {
  auto up = up_heights(d);
  auto chain = smallest_chain(d, up, length);
  Witness w;
  w.kind = "chain";
  for (size_t i : chain) {
    w.items.push_back(d.first_index[i]);
    w.sets.push_back(d.sets[i]);
  }
  return w;
}

// Lexicographically smallest clique of the target size in the graph given by
// adj (symmetric, no self loops); empty if none.
std::vector<int> smallest_clique(int m, const std::vector<std::vector<char>>& adj, int size) {
  std::vector<int> clique;
  std::vector<int> cands(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) cands[static_cast<size_t>(i)] = i;
  std::vector<int> best;

  std::function<bool(std::vector<int>&)> dfs = [&](std::vector<int>& cur_cands) -> bool {
    if (static_cast<int>(clique.size()) == size) {
      best = clique;
      return true;
    }
    int need = size - static_cast<int>(clique.size());
    if (static_cast<int>(cur_cands.size()) < need) return false;
    for (size_t idx = 0; idx < cur_cands.size(); ++idx) {
      if (static_cast<int>(cur_cands.size() - idx) < need) break;
      int v = cur_cands[idx];
      std::vector<int> next;
      for (size_t j = idx + 1; j < cur_cands.size(); ++j)
        if (adj[static_cast<size_t>(v)][static_cast<size_t>(cur_cands[j])])
          next.push_back(cur_cands[j]);
      clique.push_back(v);
      if (dfs(next)) return true;
      clique.pop_back();
    }
    return false;
  };
  dfs(cands);
  return best;
}

void require_pairs(const Family& f, const char* what) {
  if (f.kind != FamilyKind::compositions || f.p != 2)
    throw ModelError(std::string(what) + " needs a 2-part composition family");
}

}  // namespace

int longest_chain(const std::vector<SetMask>& sets) {
  auto d = dedup_indexed(sets);
  auto up = up_heights(d);
  int best = 0;
  for (int u : up) best = std::max(best, u);
  return best;
}

HypothesisVerdict is_antichain(const std::vector<SetMask>& sets) {
  auto d = dedup_indexed(sets);
  for (size_t i = 0; i < d.sets.size(); ++i)
    for (size_t j = i + 1; j < d.sets.size(); ++j) {
      if (bits::proper_subset_of(d.sets[i], d.sets[j]) ||
          bits::proper_subset_of(d.sets[j], d.sets[i])) {
        Witness w;
        w.kind = "comparable-pair";
        size_t lo = bits::proper_subset_of(d.sets[i], d.sets[j]) ? i : j;
        size_t hi = lo == i ? j : i;
        w.items = {d.first_index[i], d.first_index[j]};
        w.sets = {d.sets[lo], d.sets[hi]};
        return {false, w};
      }
    }
  return {true, std::nullopt};
}

HypothesisVerdict is_r_chain_free(const std::vector<SetMask>& sets, int r) {
  if (r < 1) throw ModelError("need r >= 1");
  auto d = dedup_indexed(sets);
  auto up = up_heights(d);
  int best = 0;
  for (int u : up) best = std::max(best, u);
  if (best <= r) return {true, std::nullopt};
  return {false, chain_witness(d, r + 1)};
}

bool crossing(const WeakComposition& c1, const WeakComposition& c2, int k) {
  if (c1.p() != c2.p()) throw ModelError("crossing needs equal part counts");
  if (k < 1 || k > c1.p()) throw ModelError("coordinate out of range");
  size_t ki = static_cast<size_t>(k - 1);
  SetMask others1 = c1.union_mask() & ~c1.parts[ki];
  SetMask others2 = c2.union_mask() & ~c2.parts[ki];
  return bits::intersects(c1.parts[ki], others2) && bits::intersects(c2.parts[ki], others1);
}

HypothesisVerdict unifying_condition(const Family& f, int r) {
  if (r < 1) throw ModelError("need r >= 1");
  if (f.kind != FamilyKind::compositions)
    throw ModelError("unifying condition needs a composition family");
  int m = f.m();
  for (int k = 1; k <= f.p; ++k) {
    std::vector<std::vector<char>> bad(static_cast<size_t>(m),
                                       std::vector<char>(static_cast<size_t>(m), 0));
    size_t ki = static_cast<size_t>(k - 1);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const auto& ci = f.comps[static_cast<size_t>(i)];
        const auto& cj = f.comps[static_cast<size_t>(j)];
        bool good = ci.parts[ki] == cj.parts[ki] || crossing(ci, cj, k);
        bad[static_cast<size_t>(i)][static_cast<size_t>(j)] = !good;
        bad[static_cast<size_t>(j)][static_cast<size_t>(i)] = !good;
      }
    auto clique = smallest_clique(m, bad, r + 1);
    if (!clique.empty()) {
      Witness w;
      w.kind = "bad-set";
      w.coordinate = k;
      w.items = clique;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

HypothesisVerdict gst_condition(const Family& f, std::optional<int> size_cap) {
  require_pairs(f, "gst condition");
  int m = f.m();
  if (size_cap) {
    for (int j = 0; j < m; ++j) {
      const auto& c = f.comps[static_cast<size_t>(j)];
      if (bits::count(c.parts[0]) + bits::count(c.parts[1]) > *size_cap) {
        Witness w;
        w.kind = "size-cap";
        w.items = {j};
        w.sets = {c.parts[0], c.parts[1]};
        return {false, w};
      }
    }
  }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if (j == k) continue;
      SetMask a = f.comps[static_cast<size_t>(j)].parts[0];
      SetMask b = f.comps[static_cast<size_t>(k)].parts[1];
      if (!bits::intersects(a, b)) {
        Witness w;
        w.kind = "empty-intersection";
        w.items = {j, k};
        w.sets = {a, b};
        return {false, w};
      }
    }
  return {true, std::nullopt};
}

HypothesisVerdict eg_condition(const Family& f, int r) {
  if (r < 1) throw ModelError("need r >= 1");
  require_pairs(f, "eg condition");
  int m = f.m();
  std::vector<std::vector<char>> bad(static_cast<size_t>(m),
                                     std::vector<char>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& ci = f.comps[static_cast<size_t>(i)];
      const auto& cj = f.comps[static_cast<size_t>(j)];
      bool good = bits::intersects(ci.parts[0], cj.parts[1]) &&
                  bits::intersects(cj.parts[0], ci.parts[1]);
      bad[static_cast<size_t>(i)][static_cast<size_t>(j)] = !good;
      bad[static_cast<size_t>(j)][static_cast<size_t>(i)] = !good;
    }
  auto clique = smallest_clique(m, bad, r + 1);
  if (!clique.empty()) {
    Witness w;
    w.kind = "bad-set";
    w.items = clique;
    return {false, w};
  }
  return {true, std::nullopt};
}

HypothesisVerdict meshalkin_condition(const Family& f, bool require_full) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("meshalkin condition needs a composition family");
  if (require_full) {
    for (int j = 0; j < f.m(); ++j)
      if (!f.comps[static_cast<size_t>(j)].is_full(f.ground)) {
        Witness w;
        w.kind = "not-full";
        w.items = {j};
        return {false, w};
      }
  }
  for (int k = 1; k <= f.p; ++k) {
    auto slice = coordinate_slice(f, k);
    auto v = is_antichain(slice.occurrences);
    if (!v.holds) {
      v.witness->coordinate = k;
      return v;
    }
  }
  return {true, std::nullopt};
}

HypothesisVerdict slices_r_chain_free(const Family& f, int r, bool include_last) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("slice condition needs a composition family");
  int last = include_last ? f.p : f.p - 1;
  for (int k = 1; k <= last; ++k) {
    auto slice = coordinate_slice(f, k);
    auto v = is_r_chain_free(slice.occurrences, r);
    if (!v.holds) {
      v.witness->coordinate = k;
      return v;
    }
  }
  return {true, std::nullopt};
}

}  // namespace sperner
