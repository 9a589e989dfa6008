#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coeffs.hpp"
#include "hyp.hpp"
#include "model.hpp"

namespace sperner {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

// Which extremal problem to solve: the universe, the hereditary constraint
// and the theorem bound all follow from this and (n, p, r).
enum class SearchTheorem { sperner, erdos, meshalkin, e_m, gst, e_g, unifying, m_g, rfamily };

const char* theorem_name(SearchTheorem t);
std::optional<SearchTheorem> theorem_from_name(const std::string& name);

struct SearchProblem {
  SearchTheorem theorem = SearchTheorem::sperner;
  int n = 0;
  int p = 2;
  int r = 1;
  long long budget_ms = 0;        // 0 = no limit
  bool lym_prune = true;
  bool check_hereditary = true;
  std::optional<int> size_cap;    // gst pairs only
};

struct SearchResult {
  int optimum = 0;        // proven maximum when exhausted, else best found
  bool exhausted = false;
  Family witness;         // lexicographically smallest maximum family when exhausted
  std::uint64_t nodes = 0;
  std::uint64_t universe_size = 0;
  BigInt bound;           // the theorem's closed-form upper bound
  bool attained = false;  // exhausted and optimum == bound
};

SearchResult max_family_search(const SearchProblem& prob);

// Extremal constructions.
Family construct_middle_layers(int n, int r);   // r consecutive layers, ties to smaller sizes
Family construct_meshalkin(int n, int p);       // all full compositions of balanced shape
Family construct_eg_pairs(int n, int r);        // (A, complement) over r middle layers
Family construct_notr(int n, int p, int r);     // layered first part, singleton tail

// Universe enumerations in canonical (lexicographic) order.
std::vector<SetMask> universe_subset_masks(int n);
std::vector<WeakComposition> universe_full_compositions(int n, int p);
std::vector<WeakComposition> universe_partial_compositions(int n, int p);

// Necessary structure for attaining the sum-of-R-largest bound (R = r^(p-1))
// by a family of full compositions: shapes with coefficient above M_{R+1}
// must be fully present, shapes below M_R absent.
struct ShapeStructure {
  Shape shape;
  BigInt coefficient;
  long long present = 0;
  BigInt total = 0;        // compositions of this exact shape
  bool required_full = false;
  bool forbidden = false;
  bool ok = true;
};

struct SharpStructureReport {
  BigInt R;      // effective rank r^(p-1), capped at the number of shapes
  BigInt M_R;    // 0 when absent
  BigInt M_R1;
  bool ok = false;
  std::vector<ShapeStructure> shapes;  // descending-order rank order
};

SharpStructureReport verify_sharp_structure(const Family& f, int r);

// Theorem bound used by search and the bound command.
BigInt theorem_bound(SearchTheorem t, int n, int p, int r);

// Full (non-incremental) predicate for a candidate family under the theorem's
// hypothesis; used to cross-check search results and hereditarity.
HypothesisVerdict theorem_predicate(SearchTheorem t, const Family& f, int r,
                                    std::optional<int> size_cap);

}  // namespace sperner
