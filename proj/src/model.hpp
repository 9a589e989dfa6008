#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bits.hpp"

namespace sperner {

// Thrown for malformed family documents and out-of-domain parameters.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validated ground set {0,...,n-1}.
struct GroundSet {
  int n = 0;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 0 || n > bits::max_ground)
      throw ModelError("ground set size out of range [0,64]: " + std::to_string(n));
  }
  SetMask universe() const { return bits::full_mask(n); }
};

// Ordered list of part sizes; zero parts allowed.
struct Shape {
  std::vector<int> sizes;

  Shape() = default;
  explicit Shape(std::vector<int> s) : sizes(std::move(s)) {}

  int parts() const { return static_cast<int>(sizes.size()); }
  int total() const;
  // Sizes sorted descending: the form of the shape.
  Shape canonical() const;

  auto operator<=>(const Shape&) const = default;
};

// Sequence of pairwise disjoint subsets; union need not cover the ground set.
struct WeakComposition {
  std::vector<SetMask> parts;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<SetMask> p) : parts(std::move(p)) {}

  int p() const { return static_cast<int>(parts.size()); }
  SetMask union_mask() const;
  Shape shape() const;
  bool is_full(const GroundSet& g) const { return union_mask() == g.universe(); }

  auto operator<=>(const WeakComposition&) const = default;
};

enum class FamilyKind { subsets, compositions };

// A finite list of pairwise distinct items over one ground set.
struct Family {
  GroundSet ground{0};
  FamilyKind kind = FamilyKind::subsets;
  int p = 0;  // parts per composition; 0 for subset families
  std::vector<SetMask> sets;            // kind == subsets
  std::vector<WeakComposition> comps;   // kind == compositions

  int m() const {
    return static_cast<int>(kind == FamilyKind::subsets ? sets.size() : comps.size());
  }
  bool all_full() const;

  static Family of_sets(GroundSet g, std::vector<SetMask> sets);
  static Family of_comps(GroundSet g, int p, std::vector<WeakComposition> comps);
};

// JSON document surface (the only persistence format).
Family parse_family(const std::string& json_text);
Family load_family(const std::string& path);
std::string family_to_json(const Family& f, int indent = -1);

Shape shape_of(const WeakComposition& c);

// Parts occupying coordinate k (1-based) in item order, plus the dedup set
// in first-occurrence order.
struct CoordinateSlice {
  std::vector<SetMask> occurrences;
  std::vector<SetMask> distinct;
};
CoordinateSlice coordinate_slice(const Family& f, int k);

// First-occurrence dedup preserving order.
std::vector<SetMask> dedup_preserve_order(const std::vector<SetMask>& v);

void validate_composition(const GroundSet& g, const WeakComposition& c);

}  // namespace sperner
