#include "model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sperner {

using nlohmann::json;

int Shape::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

Shape Shape::canonical() const {
  Shape c = *this;
  std::sort(c.sizes.begin(), c.sizes.end(), std::greater<int>());
  return c;
}

SetMask WeakComposition::union_mask() const {
  SetMask u = 0;
  for (SetMask m : parts) u |= m;
  return u;
}

Shape WeakComposition::shape() const {
  Shape s;
  s.sizes.reserve(parts.size());
  for (SetMask m : parts) s.sizes.push_back(bits::count(m));
  return s;
}

bool Family::all_full() const {
  if (kind != FamilyKind::compositions) return false;
  return std::all_of(comps.begin(), comps.end(),
                     [&](const WeakComposition& c) { return c.is_full(ground); });
}

void validate_composition(const GroundSet& g, const WeakComposition& c) {
  if (c.parts.empty()) throw ModelError("composition needs at least one part");
  SetMask seen = 0;
  for (SetMask m : c.parts) {
    if (m & ~g.universe()) throw ModelError("element index outside ground set");
    if (m & seen) throw ModelError("overlapping parts in composition");
    seen |= m;
  }
}

Family Family::of_sets(GroundSet g, std::vector<SetMask> sets) {
  Family f;
  f.ground = g;
  f.kind = FamilyKind::subsets;
  f.p = 0;
  for (SetMask m : sets)
    if (m & ~g.universe()) throw ModelError("element index outside ground set");
  std::set<SetMask> dis(sets.begin(), sets.end());
  if (dis.size() != sets.size()) throw ModelError("duplicate item in family");
  f.sets = std::move(sets);
  return f;
}

Family Family::of_comps(GroundSet g, int p, std::vector<WeakComposition> comps) {
  if (p < 1) throw ModelError("composition family needs p >= 1");
  Family f;
  f.ground = g;
  f.kind = FamilyKind::compositions;
  f.p = p;
  for (const auto& c : comps) {
    if (c.p() != p) throw ModelError("mixed part counts in one family");
    validate_composition(g, c);
  }
  std::set<WeakComposition> dis(comps.begin(), comps.end());
  if (dis.size() != comps.size()) throw ModelError("duplicate item in family");
  f.comps = std::move(comps);
  return f;
}

namespace {

SetMask mask_from_list(const json& arr, int n) {
  if (!arr.is_array()) throw ModelError("set must be an array of element indices");
  SetMask m = 0;
  for (const auto& e : arr) {
    if (!e.is_number_integer()) throw ModelError("element index must be an integer");
    long long v = e.get<long long>();
    if (v < 0 || v >= n) throw ModelError("element index outside ground set");
    SetMask bit = SetMask{1} << v;
    if (m & bit) throw ModelError("repeated element in set");
    m |= bit;
  }
  return m;
}

json list_from_mask(SetMask m) {
  json arr = json::array();
  for (int e : bits::elements(m)) arr.push_back(e);
  return arr;
}

}  // namespace

Family parse_family(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("family document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ModelError("missing integer field 'n'");
  long long n_raw = doc["n"].get<long long>();
  if (n_raw < 0 || n_raw > bits::max_ground)
    throw ModelError("ground set size out of range [0,64]: " + std::to_string(n_raw));
  GroundSet g(static_cast<int>(n_raw));

  std::string kind = doc.value("kind", std::string{});
  if (kind == "subsets") {
    if (doc.contains("p")) throw ModelError("subset family must not carry 'p'");
    if (!doc.contains("sets") || !doc["sets"].is_array())
      throw ModelError("subset family needs array field 'sets'");
    std::vector<SetMask> sets;
    sets.reserve(doc["sets"].size());
    for (const auto& s : doc["sets"]) sets.push_back(mask_from_list(s, g.n));
    return Family::of_sets(g, std::move(sets));
  }
  if (kind == "compositions") {
    if (!doc.contains("p") || !doc["p"].is_number_integer())
      throw ModelError("composition family needs integer field 'p'");
    int p = doc["p"].get<int>();
    if (p < 1) throw ModelError("composition family needs p >= 1");
    if (!doc.contains("compositions") || !doc["compositions"].is_array())
      throw ModelError("composition family needs array field 'compositions'");
    std::vector<WeakComposition> comps;
    comps.reserve(doc["compositions"].size());
    for (const auto& c : doc["compositions"]) {
      if (!c.is_array() || static_cast<int>(c.size()) != p)
        throw ModelError("each composition must list exactly p parts");
      WeakComposition wc;
      wc.parts.reserve(static_cast<size_t>(p));
      for (const auto& part : c) wc.parts.push_back(mask_from_list(part, g.n));
      comps.push_back(std::move(wc));
    }
    return Family::of_comps(g, p, std::move(comps));
  }
  throw ModelError("field 'kind' must be \"subsets\" or \"compositions\"");
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

std::string family_to_json(const Family& f, int indent) {
  json doc;
  doc["n"] = f.ground.n;
  if (f.kind == FamilyKind::subsets) {
    doc["kind"] = "subsets";
    json sets = json::array();
    for (SetMask m : f.sets) sets.push_back(list_from_mask(m));
    doc["sets"] = sets;
  } else {
    doc["kind"] = "compositions";
    doc["p"] = f.p;
    json comps = json::array();
    for (const auto& c : f.comps) {
      json parts = json::array();
      for (SetMask m : c.parts) parts.push_back(list_from_mask(m));
      comps.push_back(parts);
    }
    doc["compositions"] = comps;
  }
  return doc.dump(indent);
}

Shape shape_of(const WeakComposition& c) { return c.shape(); }

std::vector<SetMask> dedup_preserve_order(const std::vector<SetMask>& v) {
  std::vector<SetMask> out;
  std::set<SetMask> seen;
  for (SetMask m : v)
    if (seen.insert(m).second) out.push_back(m);
  return out;
}

CoordinateSlice coordinate_slice(const Family& f, int k) {
  if (f.kind != FamilyKind::compositions)
    throw ModelError("coordinate_slice needs a composition family");
  if (k < 1 || k > f.p) throw ModelError("coordinate out of range");
  CoordinateSlice s;
  s.occurrences.reserve(f.comps.size());
  for (const auto& c : f.comps) s.occurrences.push_back(c.parts[static_cast<size_t>(k - 1)]);
  s.distinct = dedup_preserve_order(s.occurrences);
  return s;
}

}  // namespace sperner
