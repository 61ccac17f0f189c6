#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mlsa/packing.hpp"

namespace mlsa {

// A member of the hereditary closure with weight 1 or 2.
struct Candidate {
  std::array<Element, 3> elements{};
  int size = 0;

  int weight() const { return size - 1; }
  ElementSet as_set() const { return ElementSet(elements.begin(), elements.begin() + size); }
};

enum class SeedOrder {
  kSorted,  // lexicographic by element list
  kInput,   // as generated from the maximal sets in family order
};

// All 2- and 3-element subsets of the maximal sets of a family with
// k_bound <= 3, deduplicated, with per-element incidence lists.
class CandidateUniverse {
 public:
  // Throws kKBoundExceeded if some maximal set has more than 3 elements.
  static CandidateUniverse enumerate(const SetFamily& f, SeedOrder order = SeedOrder::kSorted);

  int size() const { return static_cast<int>(candidates_.size()); }
  int ground_size() const { return static_cast<int>(containing_.size()); }
  const Candidate& operator[](int id) const { return candidates_[id]; }
  // Candidate ids containing e, ascending.
  const std::vector<int>& containing(Element e) const { return containing_[e]; }
  std::optional<int> find(const ElementSet& s) const;

 private:
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> containing_;
  std::unordered_map<std::uint64_t, int> index_;
};

std::vector<ElementSet> enumerate_candidates(const SetFamily& f);

// Lexicographic objective: weight first, then the number of weight-2 sets.
inline bool is_improving(long long delta_w, long long delta_two) {
  return delta_w > 0 || (delta_w == 0 && delta_two > 0);
}

struct Improvement {
  std::vector<ElementSet> add;
  std::vector<int> remove;  // N(add, A) as ascending packing indices
  int delta_w = 0;
  int delta_two = 0;
  unsigned long long packing_version = 0;
};

enum class SearchMode {
  // X grown one set at a time, each new set sharing a packed neighbor with
  // the sets chosen so far.
  kConnected,
  // Every disjoint collection; small instances only.
  kExhaustive,
};

struct SearchStats {
  long long iterations = 0;
  long long weight_increases = 0;
  long long plateau_moves = 0;
  long long candidates_examined = 0;
  long long max_plateau_run = 0;
  int num_candidates = 0;
};

struct SearchOptions {
  int max_size = 10;
  SeedOrder seed_order = SeedOrder::kSorted;
  SearchMode mode = SearchMode::kConnected;
};

struct SearchResult {
  Packing packing;
  SearchStats stats;
};

// Smallest improvement first; within one size the first one in canonical
// candidate order. `examined` accumulates visited search nodes.
std::optional<Improvement> find_improvement(const CandidateUniverse& universe, const Packing& a,
                                            int max_size, SearchMode mode = SearchMode::kConnected,
                                            long long* examined = nullptr);

std::optional<Improvement> find_improvement(const SetFamily& f, const Packing& a, int max_size,
                                            SearchMode mode = SearchMode::kConnected);

// A <- (A \ N(X, A)) ∪ X. Throws kStaleImprovement if a changed since the
// improvement was computed or the improvement does not match a.
void apply(Packing& a, const Improvement& imp);

// Local search from `start` (empty packing by default) until no improvement
// of size <= options.max_size exists.
SearchResult run(const SetFamily& f, const SearchOptions& options = {},
                 std::optional<Packing> start = std::nullopt);

// Upper bound on swaps used as a termination guard.
long long iteration_guard(int num_candidates);

}  // namespace mlsa
