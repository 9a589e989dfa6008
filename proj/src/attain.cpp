#include "attain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "model.hpp"

namespace sperner {

FirstAppearanceTable first_appearances(int n, int p) {
  if (p < 1) throw ModelError("need p >= 1");
  if (n < 0) throw ModelError("need n >= 0");
  FirstAppearanceTable t;
  t.n = n;
  t.p = p;
  t.nu = n / p;
  t.rho = n % p;
  auto ord = descending_order(n, p, ShapeScope::exact_total);
  std::set<int> seen;
  for (size_t i = 0; i < ord.entries.size(); ++i) {
    const auto& e = ord.entries[i];
    std::set<int> fresh;
    for (int a : e.shape.sizes)
      if (!seen.count(a)) fresh.insert(a);
    for (int a : fresh) {  // ascending within one entry
      seen.insert(a);
      FirstAppearance fa;
      fa.kappa = a;
      fa.rank = static_cast<long long>(i) + 1;
      fa.value = e.value;
      t.L.emplace(a, fa);
      t.Lstar.push_back(fa);
    }
  }
  return t;
}

namespace {

void check_criterion_domain(int n, int p, int r) {
  if (r < 2) throw ModelError("need r >= 2");
  if (p < 3) throw ModelError("need p >= 3");
  if (n < p) throw ModelError("need n >= p");
}

BigInt pow_int(int base, int exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace

bool criterion_thm_attain(int n, int p, int r) {
  check_criterion_domain(n, p, r);
  auto t = first_appearances(n, p);
  if (static_cast<size_t>(r) > t.Lstar.size())
    throw ModelError("fewer than r first-appearance entries");
  const BigInt& Lr = t.Lstar[static_cast<size_t>(r - 1)].value;
  auto ord = descending_order(n, p, ShapeScope::exact_total);
  BigInt rank = pow_int(r, p - 1) + 1;
  BigInt M = 0;
  if (rank <= static_cast<long long>(ord.entries.size()))
    M = ord.value_at(rank.convert_to<long long>());
  return Lr > M;
}

bool criterion_cor_attain(int n, int p, int r) {
  check_criterion_domain(n, p, r);
  auto t = first_appearances(n, p);
  if (static_cast<size_t>(r + 1) > t.Lstar.size())
    throw ModelError("fewer than r+1 first-appearance entries");
  return t.Lstar[static_cast<size_t>(r - 1)].value > t.Lstar[static_cast<size_t>(r)].value;
}

AttainLemmaCheck attainlemma_check(int n, int p, int r) {
  if (r < 1) throw ModelError("need r >= 1");
  if (p < 1) throw ModelError("need p >= 1");
  auto t = first_appearances(n, p);
  if (static_cast<size_t>(r) > t.Lstar.size())
    throw ModelError("fewer than r first-appearance entries");
  AttainLemmaCheck out;
  std::set<int> allowed;
  for (int i = 0; i < r; ++i) {
    out.sizes.push_back(t.Lstar[static_cast<size_t>(i)].kappa);
    allowed.insert(t.Lstar[static_cast<size_t>(i)].kappa);
  }
  auto ord = descending_order(n, p, ShapeScope::exact_total);
  out.total = 0;
  for (const auto& e : ord.entries) {
    bool drawn = std::all_of(e.shape.sizes.begin(), e.shape.sizes.end(),
                             [&](int a) { return allowed.count(a) > 0; });
    if (drawn) {
      ++out.shape_count;
      out.total += e.value;
    }
  }
  out.threshold_count = pow_int(r, p - 1);
  out.threshold_total = sum_of_largest(n, p, out.threshold_count, ShapeScope::exact_total);
  out.count_ok = BigInt(out.shape_count) < out.threshold_count;
  out.total_ok = out.total < out.threshold_total;
  out.ok = out.count_ok && out.total_ok;
  return out;
}

std::string expected_pattern(int n, int p, size_t entries) {
  int nu = n / p, rho = n % p;
  std::string full;
  if (rho == 0) {
    full = ">=>>>";
  } else {
    full = "=>>";
    full += (rho == p - 1 && p >= 4 && nu == 1) ? '=' : '>';
    full += (p == 3 && nu == 3 && rho == 1) ? '=' : '>';
  }
  size_t rel = entries > 0 ? entries - 1 : 0;
  if (rel > 5) rel = 5;
  return full.substr(0, rel);
}

std::vector<SweepRow> proposition_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo,
                                        int n_hi) {
  if (r_lo > r_hi || p_lo > p_hi || n_lo > n_hi) throw ModelError("empty sweep range");
  std::vector<SweepRow> rows;
  for (int p = p_lo; p <= p_hi; ++p) {
    for (int n = std::max(n_lo, p); n <= n_hi; ++n) {
      SweepRow row;
      row.n = n;
      row.p = p;
      auto t = first_appearances(n, p);
      row.nu = t.nu;
      row.rho = t.rho;
      row.divides = t.rho == 0;
      size_t lim = std::min<size_t>(6, t.Lstar.size());
      for (size_t i = 0; i < lim; ++i) row.Lstar.push_back(t.Lstar[i].value);
      for (size_t i = 0; i + 1 < lim; ++i)
        row.pattern += row.Lstar[i] > row.Lstar[i + 1] ? '>' : '=';
      row.expected_pattern = expected_pattern(n, p, lim);
      row.pattern_match = row.pattern == row.expected_pattern;

      for (int r = r_lo; r <= r_hi; ++r) {
        SweepRow::PerR pr;
        pr.r = r;
        bool dom = r >= 2 && p >= 3 && n >= p;
        if (dom && static_cast<size_t>(r) <= t.Lstar.size())
          pr.thm = criterion_thm_attain(n, p, r) ? 1 : 0;
        if (dom && static_cast<size_t>(r + 1) <= t.Lstar.size())
          pr.cor = criterion_cor_attain(n, p, r) ? 1 : 0;
        if (static_cast<size_t>(r) <= t.Lstar.size())
          pr.lemma_ok = attainlemma_check(n, p, r).ok ? 1 : 0;
        if (pr.thm == 1)
          pr.classification = "excluded";
        else if (pr.thm == 0)
          pr.classification = pr.cor == 0 ? "undecided" : "inconsistent";
        else
          pr.classification = "n/a";
        row.per_r.push_back(std::move(pr));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  int r_lo = 0, r_hi = -1;
  if (!rows.empty() && !rows[0].per_r.empty()) {
    r_lo = rows[0].per_r.front().r;
    r_hi = rows[0].per_r.back().r;
  }
  out << "n,p,nu,rho,divides,L1,L2,L3,L4,L5,L6,pattern,expected,match";
  for (int r = r_lo; r <= r_hi; ++r)
    out << ",thm_r" << r << ",cor_r" << r << ",lemma_r" << r << ",class_r" << r;
  out << "\n";
  auto flag = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
  for (const auto& row : rows) {
    out << row.n << ',' << row.p << ',' << row.nu << ',' << row.rho << ','
        << (row.divides ? 1 : 0);
    for (size_t i = 0; i < 6; ++i) {
      out << ',';
      if (i < row.Lstar.size()) out << row.Lstar[i].str();
    }
    out << ',' << row.pattern << ',' << row.expected_pattern << ','
        << (row.pattern_match ? 1 : 0);
    for (const auto& pr : row.per_r)
      out << ',' << flag(pr.thm) << ',' << flag(pr.cor) << ',' << flag(pr.lemma_ok) << ','
          << pr.classification;
    out << "\n";
  }
  return out.str();
}

}  // namespace sperner
