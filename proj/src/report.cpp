#include "report.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sperner {

using nlohmann::json;

namespace {

std::string big_str(const BigInt& v) { return v.str(); }
std::string rat_str(const BigRat& v) { return v.str(); }

json shape_json(const Shape& s) {
  json arr = json::array();
  for (int a : s.sizes) arr.push_back(a);
  return arr;
}

}  // namespace

json json_of_mask(SetMask m) {
  json arr = json::array();
  for (int e : bits::elements(m)) arr.push_back(e);
  return arr;
}

json json_of_family_summary(const Family& f) {
  json j;
  j["n"] = f.ground.n;
  j["kind"] = f.kind == FamilyKind::subsets ? "subsets" : "compositions";
  if (f.kind == FamilyKind::compositions) j["p"] = f.p;
  j["m"] = f.m();
  return j;
}

json json_of_witness(const HypothesisVerdict& v) {
  if (v.holds || !v.witness) return nullptr;
  const Witness& w = *v.witness;
  json j;
  j["kind"] = w.kind;
  if (w.coordinate > 0) j["coordinate"] = w.coordinate;
  json items = json::array();
  for (int i : w.items) items.push_back(i);
  j["items"] = items;
  json sets = json::array();
  for (SetMask m : w.sets) sets.push_back(json_of_mask(m));
  j["sets"] = sets;
  return j;
}

json json_of_lym(const LymReport& rep) {
  json j;
  j["sum"] = rat_str(rep.sum);
  j["bound"] = rat_str(rep.bound);
  j["satisfied"] = rep.satisfied;
  json per = json::array();
  for (const auto& s : rep.per_shape) {
    json e;
    e["shape"] = shape_json(s.shape);
    e["count"] = s.count;
    e["coefficient"] = big_str(s.coefficient);
    per.push_back(e);
  }
  j["per_shape"] = per;
  return j;
}

json json_of_family(const Family& f) { return json::parse(family_to_json(f)); }

std::string envelope(const std::string& command, json parameters, json results) {
  json doc;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["results"] = std::move(results);
  doc["provenance"] = {{"tool", "sperner"}, {"version", tool_version}};
  return doc.dump(2) + "\n";
}

namespace {

SearchTheorem need_theorem(const std::string& name) {
  auto t = theorem_from_name(name);
  if (!t) throw ModelError("unknown theorem name: " + name);
  return *t;
}

void need_r(const std::string& theorem, int r) {
  if (r < 1) throw ModelError("theorem " + theorem + " needs --r >= 1");
}

void need_p(const std::string& theorem, int p) {
  if (p < 1) throw ModelError("theorem " + theorem + " needs --p >= 1");
}

}  // namespace

CmdOutcome cmd_bound(const std::string& theorem, int n, int p, int r,
                     const std::string& scope_override) {
  using boost::multiprecision::pow;
  GroundSet g(n);
  SearchTheorem t = need_theorem(theorem);
  int parts = 2;
  BigInt R = 1;
  ShapeScope scope = ShapeScope::exact_total;
  switch (t) {
    case SearchTheorem::sperner:
    case SearchTheorem::gst:
      break;
    case SearchTheorem::erdos:
      need_r(theorem, r);
      R = r;
      break;
    case SearchTheorem::meshalkin:
      need_p(theorem, p);
      parts = p;
      break;
    case SearchTheorem::m_g:
      need_p(theorem, p);
      parts = p;
      scope = ShapeScope::le_total;
      break;
    case SearchTheorem::e_m:
      need_p(theorem, p);
      need_r(theorem, r);
      parts = p;
      R = pow(BigInt(r), static_cast<unsigned>(p - 1));
      break;
    case SearchTheorem::e_g:
      need_r(theorem, r);
      R = r;
      scope = ShapeScope::le_total;
      break;
    case SearchTheorem::unifying:
      need_p(theorem, p);
      need_r(theorem, r);
      parts = p;
      R = pow(BigInt(r), static_cast<unsigned>(p));
      scope = ShapeScope::le_total;
      break;
    case SearchTheorem::rfamily:
      need_p(theorem, p);
      need_r(theorem, r);
      parts = p + 1;
      R = pow(BigInt(r), static_cast<unsigned>(p));
      break;
  }
  if (scope_override == "exact-total")
    scope = ShapeScope::exact_total;
  else if (scope_override == "le-total")
    scope = ShapeScope::le_total;
  else if (!scope_override.empty())
    throw ModelError("scope must be exact-total or le-total");

  BigInt value = sum_of_largest(n, parts, R, scope);

  json params;
  params["theorem"] = theorem;
  params["n"] = n;
  params["p"] = p > 0 ? json(p) : json(nullptr);
  params["r"] = r > 0 ? json(r) : json(nullptr);
  json results;
  results["bound"] = value.str();
  results["terms"] = R.str();
  results["parts"] = parts;
  results["scope"] = scope == ShapeScope::exact_total ? "exact-total" : "le-total";
  return {envelope("bound", params, results), 0};
}

CmdOutcome cmd_check(const Family& f, const std::string& theorem, int r) {
  SearchTheorem t = need_theorem(theorem);
  switch (t) {
    case SearchTheorem::erdos:
    case SearchTheorem::e_m:
    case SearchTheorem::e_g:
    case SearchTheorem::unifying:
    case SearchTheorem::rfamily:
      need_r(theorem, r);
      break;
    default:
      r = 1;
      break;
  }
  HypothesisVerdict v = theorem_predicate(t, f, r, std::nullopt);
  json params;
  params["theorem"] = theorem;
  params["r"] = r;
  params["family"] = json_of_family_summary(f);
  json results;
  results["holds"] = v.holds;
  results["witness"] = json_of_witness(v);
  return {envelope("check", params, results), v.holds ? 0 : 1};
}

CmdOutcome cmd_lym(const Family& f, const std::string& theorem, int r) {
  using boost::multiprecision::pow;
  SearchTheorem t = need_theorem(theorem);
  LymReport rep;
  switch (t) {
    case SearchTheorem::sperner:
      rep = lym_subsets(f, 1);
      break;
    case SearchTheorem::erdos:
      need_r(theorem, r);
      rep = lym_subsets(f, r);
      break;
    case SearchTheorem::meshalkin:
      rep = lym_compositions_full(f, 1);
      break;
    case SearchTheorem::e_m:
      need_r(theorem, r);
      rep = lym_compositions_full(
          f, BigRat(pow(BigInt(r), static_cast<unsigned>(f.p > 1 ? f.p - 1 : 0))));
      break;
    case SearchTheorem::gst:
      if (f.p != 2) throw ModelError("theorem gst needs p = 2");
      rep = lym_compositions_partial(f, 1);
      break;
    case SearchTheorem::e_g:
      need_r(theorem, r);
      if (f.p != 2) throw ModelError("theorem e-g needs p = 2");
      rep = lym_compositions_partial(f, r);
      break;
    case SearchTheorem::unifying:
      need_r(theorem, r);
      rep = lym_compositions_partial(f,
                                     BigRat(pow(BigInt(r), static_cast<unsigned>(f.p))));
      break;
    case SearchTheorem::m_g:
      rep = lym_compositions_partial(f, 1);
      break;
    case SearchTheorem::rfamily:
      throw ModelError("no lym inequality is associated with rfamily");
  }
  json params;
  params["theorem"] = theorem;
  params["r"] = r;
  params["family"] = json_of_family_summary(f);
  return {envelope("lym", params, json_of_lym(rep)), rep.satisfied ? 0 : 1};
}

CmdOutcome cmd_construct(const std::string& kind, int n, int p, int r) {
  Family f;
  if (kind == "middle-layers" || kind == "sperner" || kind == "erdos") {
    f = construct_middle_layers(n, kind == "sperner" ? 1 : std::max(r, 1));
  } else if (kind == "meshalkin" || kind == "m-g") {
    need_p(kind, p);
    f = construct_meshalkin(n, p);
  } else if (kind == "eg-pairs" || kind == "gst" || kind == "e-g") {
    f = construct_eg_pairs(n, kind == "gst" ? 1 : std::max(r, 1));
  } else if (kind == "notr") {
    need_p(kind, p);
    need_r(kind, r);
    f = construct_notr(n, p, r);
  } else {
    throw ModelError("unknown construction: " + kind);
  }
  return {family_to_json(f, 2) + "\n", 0};
}

CmdOutcome cmd_search(const std::string& theorem, int n, int p, int r, long long budget_ms) {
  SearchProblem prob;
  prob.theorem = need_theorem(theorem);
  prob.n = n;
  prob.p = p;
  prob.r = r;
  prob.budget_ms = budget_ms;
  SearchResult res = max_family_search(prob);

  json params;
  params["theorem"] = theorem;
  params["n"] = n;
  params["p"] = p > 0 ? json(p) : json(nullptr);
  params["r"] = r > 0 ? json(r) : json(nullptr);
  params["budget_ms"] = budget_ms;
  json results;
  results["optimum"] = res.optimum;
  results["exhausted"] = res.exhausted;
  results["nodes"] = res.nodes;
  results["universe"] = res.universe_size;
  results["bound"] = res.bound.str();
  results["attained"] = res.attained;
  results["witness"] = json_of_family(res.witness);
  int verdict = !res.exhausted ? 3 : (res.attained ? 0 : 1);
  return {envelope("search", params, results), verdict};
}

CmdOutcome cmd_separate_count(int n, const std::vector<int>& shape) {
  GroundSet g(n);
  Shape s{shape};
  BigInt c = count_separating(n, s);
  json params;
  params["n"] = n;
  params["shape"] = json::array();
  for (int a : shape) params["shape"].push_back(a);
  json results;
  results["count"] = c.str();
  return {envelope("separate-count", params, results), 0};
}

CmdOutcome cmd_separate_max(const Family& f, bool sampled, std::uint64_t samples,
                            std::uint64_t seed) {
  SeparationScan scan =
      sampled ? max_separated_sampled(f, samples, seed) : max_separated_all(f);
  json params;
  params["family"] = json_of_family_summary(f);
  params["mode"] = sampled ? "sampled" : "all-chains";
  if (sampled) {
    params["samples"] = samples;
    params["seed"] = seed;
  }
  json results;
  results["max_separated"] = scan.max_separated;
  results["inspected"] = scan.inspected;
  json chain = json::array();
  for (int e : scan.witness.order) chain.push_back(e);
  results["witness_chain"] = chain;
  return {envelope("separate-max", params, results), 0};
}

CmdOutcome cmd_attain(int n, int p, int r) {
  auto t = first_appearances(n, p);
  json params;
  params["n"] = n;
  params["p"] = p;
  params["r"] = r > 0 ? json(r) : json(nullptr);
  json results;
  results["nu"] = t.nu;
  results["rho"] = t.rho;
  json L = json::object();
  for (const auto& [size, fa] : t.L) {
    json e;
    e["rank"] = fa.rank;
    e["value"] = fa.value.str();
    L[std::to_string(size)] = e;
  }
  results["L"] = L;
  json Lstar = json::array();
  for (const auto& fa : t.Lstar) {
    json e;
    e["kappa"] = fa.kappa;
    e["rank"] = fa.rank;
    e["value"] = fa.value.str();
    Lstar.push_back(e);
  }
  results["Lstar"] = Lstar;

  int verdict = 0;
  if (r > 0) {
    bool thm = criterion_thm_attain(n, p, r);
    bool cor = criterion_cor_attain(n, p, r);
    auto lem = attainlemma_check(n, p, r);
    json crit;
    crit["thm"] = thm;
    crit["cor"] = cor;
    json lj;
    lj["sizes"] = json::array();
    for (int s : lem.sizes) lj["sizes"].push_back(s);
    lj["shape_count"] = lem.shape_count;
    lj["total"] = lem.total.str();
    lj["count_bound"] = lem.threshold_count.str();
    lj["total_bound"] = lem.threshold_total.str();
    lj["ok"] = lem.ok;
    crit["lemma"] = lj;
    results["criteria"] = crit;
    verdict = thm ? 1 : 0;  // proven unattainable -> 1
  } else {
    results["criteria"] = nullptr;
  }
  return {envelope("attain", params, results), verdict};
}

CmdOutcome cmd_attain_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo, int n_hi) {
  auto rows = proposition_sweep(r_lo, r_hi, p_lo, p_hi, n_lo, n_hi);
  return {sweep_to_csv(rows), 0};
}

}  // namespace sperner
