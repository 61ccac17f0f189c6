#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlsa {

using Element = int;
inline constexpr int kNoSet = -1;

// Sorted, duplicate-free list of ground-set elements.
using ElementSet = std::vector<Element>;

// Weight of a set under the hereditary objective, w(s) = |s| - 1.
inline int set_weight(const ElementSet& s) { return static_cast<int>(s.size()) - 1; }

ElementSet make_element_set(std::vector<Element> elements);

// Hereditary set family over 0..ground_size-1, represented by its
// inclusion-wise maximal sets. Subsets are never materialized here.
class SetFamily {
 public:
  SetFamily() = default;

  int ground_size() const { return ground_size_; }
  const std::vector<ElementSet>& maximal_sets() const { return maximal_sets_; }
  int num_maximal_sets() const { return static_cast<int>(maximal_sets_.size()); }
  int k_bound() const { return k_bound_; }
  bool empty() const { return maximal_sets_.empty(); }

  // True iff s is nonempty and contained in some maximal set.
  bool contains(const ElementSet& s) const;

  // Index of the first maximal set (in stored order) containing s.
  std::optional<int> first_superset(const ElementSet& s) const;

 private:
  friend SetFamily family_from_sets(int ground_size, std::vector<ElementSet> raw_sets);

  int ground_size_ = 0;
  int k_bound_ = 0;
  std::vector<ElementSet> maximal_sets_;
  std::vector<std::vector<int>> sets_by_element_;
};

// Keeps the inclusion-wise maximal members of raw_sets (duplicates removed),
// preserving the order of first occurrence. Throws kElementOutOfRange.
SetFamily family_from_sets(int ground_size, std::vector<ElementSet> raw_sets);

// Disjoint collection of sets of cardinality >= 2 with an element -> set
// owner map and cached weight / weight-2 count. Removal moves the last set
// into the freed slot, so indices are only stable between mutations;
// version() changes on every mutation.
class Packing {
 public:
  Packing() = default;
  explicit Packing(int ground_size) : owner_(ground_size, kNoSet) {}

  int ground_size() const { return static_cast<int>(owner_.size()); }
  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& set(int index) const { return sets_[index]; }
  int owner(Element e) const { return owner_[e]; }
  long long weight() const { return weight_; }
  int two_count() const { return two_count_; }
  unsigned long long version() const { return version_; }

  // Throws kOverlap when s meets a packed set, kInfeasible when |s| < 2 and
  // kElementOutOfRange for elements outside the ground set.
  int add(ElementSet s);
  void remove(int index);

  // Recomputes owner map, weight and two_count from scratch.
  bool caches_consistent() const;

  // Sets sorted lexicographically; a canonical form for comparisons.
  std::vector<ElementSet> canonical_sets() const;

 private:
  std::vector<ElementSet> sets_;
  std::vector<int> owner_;
  long long weight_ = 0;
  int two_count_ = 0;
  unsigned long long version_ = 0;
};

// Builds a packing from raw sets; throws kInfeasible naming "disjointness"
// if two sets overlap.
Packing packing_from_sets(int ground_size, const std::vector<ElementSet>& sets);

// Empty optional iff every packed set is a member of f and f's ground set
// matches.
std::optional<std::string> check_packing(const SetFamily& f, const Packing& a);

// Indices of sets of a meeting the union of x, ascending.
std::vector<int> neighborhood(std::span<const ElementSet> x, const Packing& a);

struct ConflictEdge {
  int a_index;
  int b_index;
  int multiplicity;  // |a ∩ b|

  friend bool operator==(const ConflictEdge&, const ConflictEdge&) = default;
};

// Bipartite multigraph between two packings over the same ground set.
struct ConflictGraph {
  std::vector<ElementSet> a_side;
  std::vector<ElementSet> b_side;
  std::vector<ConflictEdge> edges;  // sorted by (a_index, b_index)

  int degree_a(int i) const;
  int degree_b(int j) const;
};

ConflictGraph build_conflict_graph(const Packing& a, const Packing& b);

}  // namespace mlsa
