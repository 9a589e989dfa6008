#pragma once

#include <map>
#include <string>
#include <vector>

#include "coeffs.hpp"

namespace sperner {

// Where each part size first shows up while scanning the exact-total
// descending order. Several sizes debuting in one entry are listed by
// ascending size.
struct FirstAppearance {
  int kappa = 0;        // the part size
  long long rank = 0;   // 1-based rank of the entry where it debuts
  BigInt value;         // that entry's coefficient
};

struct FirstAppearanceTable {
  int n = 0, p = 0;
  int nu = 0, rho = 0;  // n = nu*p + rho
  std::map<int, FirstAppearance> L;   // by size
  std::vector<FirstAppearance> Lstar; // debut order; Lstar[k-1] is the k-th
};

FirstAppearanceTable first_appearances(int n, int p);

// Non-attainment of the sum-of-r^(p-1)-largest bound; needs r >= 2, p >= 3,
// n >= p and existing table entries.
bool criterion_thm_attain(int n, int p, int r);   // Lstar_r > M_{r^{p-1}+1}
bool criterion_cor_attain(int n, int p, int r);   // Lstar_r > Lstar_{r+1}

// Bookkeeping behind the lemma feeding the criteria: shapes drawn from the
// first r debut sizes are few and small in total.
struct AttainLemmaCheck {
  std::vector<int> sizes;   // first r debut sizes
  long long shape_count = 0;  // exact-total shapes with sizes among them
  BigInt total;               // their coefficient sum
  BigInt threshold_count;     // r^(p-1)
  BigInt threshold_total;     // sum of the r^(p-1) largest
  bool count_ok = false;
  bool total_ok = false;
  bool ok = false;
};

AttainLemmaCheck attainlemma_check(int n, int p, int r);

// One sweep row per (n, p): the debut-value pattern and per-r criteria.
struct SweepRow {
  int n = 0, p = 0, nu = 0, rho = 0;
  bool divides = false;
  std::vector<BigInt> Lstar;     // up to first six debut values
  std::string pattern;           // relations between consecutive values, e.g. ">==>>"
  std::string expected_pattern;  // from the structure claims, same length
  bool pattern_match = false;
  struct PerR {
    int r = 0;
    int thm = -1;        // 1/0, -1 when out of domain
    int cor = -1;
    int lemma_ok = -1;
    std::string classification;  // "excluded" | "undecided" | "open"
  };
  std::vector<PerR> per_r;
};

std::vector<SweepRow> proposition_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo,
                                        int n_hi);

// Expected relation pattern between consecutive debut values for (n, p),
// truncated to the available entries.
std::string expected_pattern(int n, int p, size_t entries);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace sperner
