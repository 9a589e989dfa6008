// Command-line front end for the sperner shared library. Talks only to the
// C API in sperner/sperner.h and renders the JSON reports as plain tables
// unless --format json is requested.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sperner/sperner.h"

namespace {

using nlohmann::json;

std::string take(char* text) {
  std::string s = text ? text : "";
  spn_string_free(text);
  return s;
}

int usage_error() {
  std::cerr << "error: " << spn_last_error() << '\n';
  return 2;
}

struct FamilyGuard {
  spn_family* fam = nullptr;
  FamilyGuard() = default;
  FamilyGuard(const FamilyGuard&) = delete;
  FamilyGuard& operator=(const FamilyGuard&) = delete;
  ~FamilyGuard() { spn_family_free(fam); }
};

std::string join_ints(const json& arr, const char* sep) {
  std::string s;
  for (const auto& e : arr) {
    if (!s.empty()) s += sep;
    s += std::to_string(e.get<long long>());
  }
  return s;
}

std::string set_str(const json& arr) { return "{" + join_ints(arr, ",") + "}"; }

std::string comp_str(const json& parts) {
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += " | ";
    s += set_str(parts[k]);
  }
  return s + ")";
}

void print_family_members(const json& fam) {
  if (fam["kind"] == "subsets")
    for (const auto& a : fam["sets"]) std::cout << "  " << set_str(a) << '\n';
  else
    for (const auto& c : fam["compositions"]) std::cout << "  " << comp_str(c) << '\n';
}

void print_witness(const json& w) {
  if (w.is_null()) return;
  std::cout << "  witness: " << w["kind"].get<std::string>();
  if (w.contains("coordinate")) std::cout << " at coordinate " << w["coordinate"].get<int>();
  if (!w["items"].empty()) std::cout << ", items " << join_ints(w["items"], " ");
  std::cout << '\n';
  if (!w["sets"].empty()) {
    std::cout << "  sets:";
    for (const auto& s : w["sets"]) std::cout << ' ' << set_str(s);
    std::cout << '\n';
  }
}

void render_bound(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "bound " << p["theorem"].get<std::string>() << " n=" << p["n"].get<int>();
  if (!p["p"].is_null()) std::cout << " p=" << p["p"].get<int>();
  if (!p["r"].is_null()) std::cout << " r=" << p["r"].get<int>();
  std::cout << ": " << r["bound"].get<std::string>() << "  (sum of "
            << r["terms"].get<std::string>() << " largest coefficients, "
            << r["parts"].get<int>() << " parts, " << r["scope"].get<std::string>() << ")\n";
}

void render_check(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "check " << p["theorem"].get<std::string>() << " r=" << p["r"].get<int>()
            << " on " << p["family"]["kind"].get<std::string>() << " family n="
            << p["family"]["n"].get<int>() << " m=" << p["family"]["m"].get<int>() << ": "
            << (r["holds"].get<bool>() ? "holds" : "violated") << '\n';
  print_witness(r["witness"]);
}

void render_lym(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "lym " << p["theorem"].get<std::string>() << " on family m="
            << p["family"]["m"].get<int>() << ": sum = " << r["sum"].get<std::string>()
            << ", bound = " << r["bound"].get<std::string>() << ", "
            << (r["satisfied"].get<bool>() ? "satisfied" : "exceeded") << '\n';
  for (const auto& e : r["per_shape"])
    std::cout << "  shape (" << join_ints(e["shape"], ",") << "): count "
              << e["count"].get<int>() << ", coefficient " << e["coefficient"].get<std::string>()
              << '\n';
}

void render_search(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "search " << p["theorem"].get<std::string>() << " n=" << p["n"].get<int>();
  if (!p["p"].is_null()) std::cout << " p=" << p["p"].get<int>();
  if (!p["r"].is_null()) std::cout << " r=" << p["r"].get<int>();
  std::cout << ": optimum = " << r["optimum"].get<int>() << ", bound = "
            << r["bound"].get<std::string>() << ", "
            << (r["attained"].get<bool>() ? "attained" : "not attained") << '\n';
  std::cout << "  " << (r["exhausted"].get<bool>() ? "search exhausted" : "budget ran out")
            << ", nodes " << r["nodes"].get<long long>() << ", universe "
            << r["universe"].get<long long>() << '\n';
  std::cout << "  witness:\n";
  print_family_members(r["witness"]);
}

void render_separate_count(const json& doc) {
  const json& p = doc["parameters"];
  std::cout << "maximal chains of [" << p["n"].get<int>() << "] separating shape ("
            << join_ints(p["shape"], ",") << "): " << doc["results"]["count"].get<std::string>()
            << '\n';
}

void render_separate_max(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "separate-max on family m=" << p["family"]["m"].get<int>() << " ("
            << p["mode"].get<std::string>() << ", inspected " << r["inspected"].get<long long>()
            << "): max separated = " << r["max_separated"].get<int>() << '\n';
  std::cout << "  chain: " << join_ints(r["witness_chain"], " ") << '\n';
}

void render_attain(const json& doc) {
  const json& p = doc["parameters"];
  const json& r = doc["results"];
  std::cout << "attain n=" << p["n"].get<int>() << " p=" << p["p"].get<int>()
            << ": nu=" << r["nu"].get<int>() << " rho=" << r["rho"].get<int>() << '\n';
  std::map<int, json> by_size;
  for (const auto& [key, e] : r["L"].items()) by_size[std::stoi(key)] = e;
  for (const auto& [size, e] : by_size)
    std::cout << "  L[" << size << "]: rank " << e["rank"].get<int>() << ", value "
              << e["value"].get<std::string>() << '\n';
  int idx = 1;
  for (const auto& e : r["Lstar"])
    std::cout << "  Lstar[" << idx++ << "]: kappa " << e["kappa"].get<int>() << ", rank "
              << e["rank"].get<int>() << ", value " << e["value"].get<std::string>() << '\n';
  const json& crit = r["criteria"];
  if (crit.is_null()) return;
  bool thm = crit["thm"].get<bool>();
  std::cout << "  criteria at r=" << p["r"].get<int>() << ": thm="
            << (thm ? "yes" : "no") << " cor=" << (crit["cor"].get<bool>() ? "yes" : "no")
            << "  -> " << (thm ? "bound not attained" : "inconclusive") << '\n';
  const json& lem = crit["lemma"];
  std::cout << "  lemma: sizes {" << join_ints(lem["sizes"], ",") << "}, shapes "
            << lem["shape_count"].get<long long>() << " (bound "
            << lem["count_bound"].get<std::string>() << "), total "
            << lem["total"].get<std::string>() << " (bound "
            << lem["total_bound"].get<std::string>() << "), "
            << (lem["ok"].get<bool>() ? "ok" : "failed") << '\n';
}

int dispatch(const std::string& format, spn_status st, int verdict, char* text,
             void (*render)(const json&)) {
  std::string body = take(text);
  if (st != SPN_OK) return usage_error();
  if (format == "json" || !render)
    std::cout << body;
  else
    render(json::parse(body));
  return verdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bounds, hypothesis checks, and searches for chain-restricted families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spn_version()));

  std::string theorem, family_path, scope, kind, format = "table", mode = "all";
  int n = 0, p = 0, r = 0;
  long long budget_ms = 0;
  std::uint64_t samples = 4096, seed = 0;
  std::vector<int> shape;
  bool sweep = false;
  int r_lo = 2, r_hi = 5, p_lo = 3, p_hi = 6, n_lo = 3, n_hi = 20;

  const std::vector<std::string> theorems = {"sperner", "erdos", "meshalkin", "e-m",
                                             "gst",     "e-g",   "unifying",  "m-g",
                                             "rfamily"};
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* cb = app.add_subcommand("bound", "closed-form maximum family size");
  cb->add_option("--theorem", theorem, "bound to evaluate")
      ->required()
      ->check(CLI::IsMember(theorems));
  cb->add_option("--n", n, "ground set size")->required();
  cb->add_option("--p", p, "number of parts");
  cb->add_option("--r", r, "chain length parameter");
  cb->add_option("--scope", scope, "coefficient pool: exact-total or le-total")
      ->check(CLI::IsMember({"exact-total", "le-total"}));
  add_format(cb);

  CLI::App* cc = app.add_subcommand("check", "verify a family against a hypothesis");
  cc->add_option("--family", family_path, "family JSON file")->required();
  cc->add_option("--theorem", theorem, "hypothesis to check")
      ->required()
      ->check(CLI::IsMember(theorems));
  cc->add_option("--r", r, "chain length parameter");
  add_format(cc);

  CLI::App* cl = app.add_subcommand("lym", "evaluate the weighted-sum inequality");
  cl->add_option("--family", family_path, "family JSON file")->required();
  cl->add_option("--theorem", theorem, "inequality to evaluate")
      ->required()
      ->check(CLI::IsMember(theorems));
  cl->add_option("--r", r, "chain length parameter");
  add_format(cl);

  CLI::App* cs = app.add_subcommand("search", "exact maximum family size by branch and bound");
  cs->add_option("--theorem", theorem, "constraint to search under")
      ->required()
      ->check(CLI::IsMember(theorems));
  cs->add_option("--n", n, "ground set size")->required();
  cs->add_option("--p", p, "number of parts");
  cs->add_option("--r", r, "chain length parameter");
  cs->add_option("--budget-ms", budget_ms, "time budget in milliseconds (0 = none)");
  add_format(cs);

  CLI::App* cg = app.add_subcommand("construct", "emit a standard extremal family");
  cg->add_option("--kind", kind, "construction kind")
      ->required()
      ->check(CLI::IsMember({"middle-layers", "sperner", "erdos", "meshalkin", "m-g",
                             "eg-pairs", "gst", "e-g", "notr"}));
  cg->add_option("--n", n, "ground set size")->required();
  cg->add_option("--p", p, "number of parts");
  cg->add_option("--r", r, "chain length parameter");

  CLI::App* csep = app.add_subcommand("separate", "maximal chain separation diagnostics");
  csep->require_subcommand(1);
  CLI::App* cnt = csep->add_subcommand("count", "count chains separating one composition shape");
  cnt->add_option("--n", n, "ground set size")->required();
  cnt->add_option("--shape", shape, "comma-separated part sizes")->required()->delimiter(',');
  add_format(cnt);
  CLI::App* mx = csep->add_subcommand("max", "most members any one chain separates");
  mx->add_option("--family", family_path, "family JSON file")->required();
  mx->add_option("--mode", mode, "all or sampled")->check(CLI::IsMember({"all", "sampled"}));
  mx->add_option("--samples", samples, "chains to sample in sampled mode");
  mx->add_option("--seed", seed, "sampling seed");
  add_format(mx);

  CLI::App* ca = app.add_subcommand("attain", "first-appearance tables and attainability");
  ca->add_option("--n", n, "ground set size");
  ca->add_option("--p", p, "number of parts");
  ca->add_option("--r", r, "evaluate criteria at this chain length");
  ca->add_flag("--sweep", sweep, "emit a CSV sweep over parameter ranges");
  ca->add_option("--r-lo", r_lo, "sweep: smallest r");
  ca->add_option("--r-hi", r_hi, "sweep: largest r");
  ca->add_option("--p-lo", p_lo, "sweep: smallest p");
  ca->add_option("--p-hi", p_hi, "sweep: largest p");
  ca->add_option("--n-lo", n_lo, "sweep: smallest n");
  ca->add_option("--n-hi", n_hi, "sweep: largest n");
  add_format(ca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* text = nullptr;
  if (cb->parsed()) {
    spn_status st = spn_bound(theorem.c_str(), n, p, r, scope.c_str(), &text);
    return dispatch(format, st, 0, text, render_bound);
  }
  if (cc->parsed() || cl->parsed()) {
    FamilyGuard g;
    if (spn_family_load(family_path.c_str(), &g.fam) != SPN_OK) return usage_error();
    int verdict = 0;
    spn_status st = cc->parsed() ? spn_check(g.fam, theorem.c_str(), r, &verdict, &text)
                                 : spn_lym(g.fam, theorem.c_str(), r, &verdict, &text);
    return dispatch(format, st, verdict, text, cc->parsed() ? render_check : render_lym);
  }
  if (cs->parsed()) {
    int verdict = 0;
    spn_status st = spn_search(theorem.c_str(), n, p, r, budget_ms, &verdict, &text);
    return dispatch(format, st, verdict, text, render_search);
  }
  if (cg->parsed()) {
    spn_status st = spn_construct(kind.c_str(), n, p, r, &text);
    std::string body = take(text);
    if (st != SPN_OK) return usage_error();
    std::cout << body;
    return 0;
  }
  if (cnt->parsed()) {
    spn_status st = spn_separate_count(n, shape.data(), static_cast<int>(shape.size()), &text);
    return dispatch(format, st, 0, text, render_separate_count);
  }
  if (mx->parsed()) {
    FamilyGuard g;
    if (spn_family_load(family_path.c_str(), &g.fam) != SPN_OK) return usage_error();
    spn_status st = spn_separate_max(g.fam, mode == "sampled" ? 1 : 0, samples, seed, &text);
    return dispatch(format, st, 0, text, render_separate_max);
  }
  if (ca->parsed()) {
    if (sweep) {
      spn_status st = spn_attain_sweep(r_lo, r_hi, p_lo, p_hi, n_lo, n_hi, &text);
      std::string body = take(text);
      if (st != SPN_OK) return usage_error();
      std::cout << body;
      return 0;
    }
    if (n < 1 || p < 1) {
      std::cerr << "error: attain needs --n and --p (or --sweep)\n";
      return 2;
    }
    int verdict = 0;
    spn_status st = spn_attain(n, p, r, &verdict, &text);
    return dispatch(format, st, verdict, text, render_attain);
  }
  return 2;
}
