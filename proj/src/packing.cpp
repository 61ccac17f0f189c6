#include "mlsa/packing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "mlsa/error.hpp"

namespace mlsa {

namespace {

std::string format_set(const ElementSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

bool is_subset(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

ElementSet make_element_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

SetFamily family_from_sets(int ground_size, std::vector<ElementSet> raw_sets) {
  if (ground_size < 0) throw Error(ErrorKind::kElementOutOfRange, "negative ground size");
  for (auto& s : raw_sets) {
    s = make_element_set(std::move(s));
    if (s.empty()) throw Error(ErrorKind::kInvalidInstance, "family contains an empty set");
    if (s.front() < 0 || s.back() >= ground_size) {
      throw Error(ErrorKind::kElementOutOfRange,
                  "set " + format_set(s) + " leaves ground set of size " +
                      std::to_string(ground_size));
    }
  }

  // Larger sets first; a set is absorbed if some kept set sharing its first
  // element contains it. Stable order keeps the first of equal duplicates.
  std::vector<int> order(raw_sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return raw_sets[lhs].size() > raw_sets[rhs].size();
  });
  std::vector<std::vector<int>> kept_by_element(ground_size);
  std::vector<bool> keep(raw_sets.size(), false);
  for (int idx : order) {
    const ElementSet& s = raw_sets[idx];
    const bool absorbed =
        std::any_of(kept_by_element[s.front()].begin(), kept_by_element[s.front()].end(),
                    [&](int other) { return is_subset(s, raw_sets[other]); });
    if (absorbed) continue;
    keep[idx] = true;
    for (Element e : s) kept_by_element[e].push_back(idx);
  }

  SetFamily f;
  f.ground_size_ = ground_size;
  f.sets_by_element_.assign(ground_size, {});
  for (std::size_t idx = 0; idx < raw_sets.size(); ++idx) {
    if (!keep[idx]) continue;
    const int id = static_cast<int>(f.maximal_sets_.size());
    for (Element e : raw_sets[idx]) f.sets_by_element_[e].push_back(id);
    f.k_bound_ = std::max(f.k_bound_, static_cast<int>(raw_sets[idx].size()));
    f.maximal_sets_.push_back(std::move(raw_sets[idx]));
  }
  return f;
}

std::optional<int> SetFamily::first_superset(const ElementSet& s) const {
  if (s.empty() || s.front() < 0 || s.back() >= ground_size_) return std::nullopt;
  for (int id : sets_by_element_[s.front()]) {
    if (is_subset(s, maximal_sets_[id])) return id;
  }
  return std::nullopt;
}

bool SetFamily::contains(const ElementSet& s) const { return first_superset(s).has_value(); }

int Packing::add(ElementSet s) {
  if (s.size() < 2) {
    throw Error(ErrorKind::kInfeasible, "packing sets need at least two elements, got " +
                                            format_set(s));
  }
  for (Element e : s) {
    if (e < 0 || e >= ground_size()) {
      throw Error(ErrorKind::kElementOutOfRange, "set " + format_set(s) + " leaves ground set");
    }
    if (owner_[e] != kNoSet) {
      throw Error(ErrorKind::kOverlap, "set " + format_set(s) + " overlaps packed set " +
                                           format_set(sets_[owner_[e]]));
    }
  }
  const int index = size();
  for (Element e : s) owner_[e] = index;
  weight_ += set_weight(s);
  if (set_weight(s) == 2) ++two_count_;
  sets_.push_back(std::move(s));
  ++version_;
  return index;
}

void Packing::remove(int index) {
  const ElementSet& s = sets_[index];
  for (Element e : s) owner_[e] = kNoSet;
  weight_ -= set_weight(s);
  if (set_weight(s) == 2) --two_count_;
  const int last = size() - 1;
  if (index != last) {
    sets_[index] = std::move(sets_[last]);
    for (Element e : sets_[index]) owner_[e] = index;
  }
  sets_.pop_back();
  ++version_;
}

bool Packing::caches_consistent() const {
  std::vector<int> owner(owner_.size(), kNoSet);
  long long weight = 0;
  int twos = 0;
  for (int i = 0; i < size(); ++i) {
    if (sets_[i].size() < 2) return false;
    for (Element e : sets_[i]) {
      if (owner[e] != kNoSet) return false;
      owner[e] = i;
    }
    weight += set_weight(sets_[i]);
    if (set_weight(sets_[i]) == 2) ++twos;
  }
  return owner == owner_ && weight == weight_ && twos == two_count_;
}

std::vector<ElementSet> Packing::canonical_sets() const {
  std::vector<ElementSet> sorted = sets_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Packing packing_from_sets(int ground_size, const std::vector<ElementSet>& sets) {
  Packing a(ground_size);
  for (const auto& raw : sets) {
    ElementSet s = make_element_set(raw);
    if (s.size() != raw.size()) {
      throw Error(ErrorKind::kInfeasible, "set " + format_set(raw) + " repeats an element");
    }
    try {
      a.add(std::move(s));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kOverlap) throw;
      throw Error(ErrorKind::kInfeasible, std::string("disjointness violated: ") + err.what());
    }
  }
  return a;
}

std::optional<std::string> check_packing(const SetFamily& f, const Packing& a) {
  if (a.ground_size() != f.ground_size()) {
    return "ground set mismatch: packing over " + std::to_string(a.ground_size()) +
           " elements, family over " + std::to_string(f.ground_size());
  }
  for (const auto& s : a.sets()) {
    if (!f.contains(s)) return "set " + format_set(s) + " is not a member of the family";
  }
  if (!a.caches_consistent()) return "packing caches inconsistent";
  return std::nullopt;
}

std::vector<int> neighborhood(std::span<const ElementSet> x, const Packing& a) {
  std::vector<int> result;
  for (const auto& s : x) {
    for (Element e : s) {
      if (e < 0 || e >= a.ground_size()) continue;
      if (int owner = a.owner(e); owner != kNoSet) result.push_back(owner);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

int ConflictGraph::degree_a(int i) const {
  int degree = 0;
  for (const auto& edge : edges) {
    if (edge.a_index == i) degree += edge.multiplicity;
  }
  return degree;
}

int ConflictGraph::degree_b(int j) const {
  int degree = 0;
  for (const auto& edge : edges) {
    if (edge.b_index == j) degree += edge.multiplicity;
  }
  return degree;
}

ConflictGraph build_conflict_graph(const Packing& a, const Packing& b) {
  ConflictGraph graph{a.sets(), b.sets(), {}};
  for (int j = 0; j < b.size(); ++j) {
    std::vector<int> owners;
    for (Element e : b.set(j)) {
      if (e < a.ground_size() && a.owner(e) != kNoSet) owners.push_back(a.owner(e));
    }
    std::sort(owners.begin(), owners.end());
    for (std::size_t i = 0; i < owners.size();) {
      std::size_t run = i;
      while (run < owners.size() && owners[run] == owners[i]) ++run;
      graph.edges.push_back({owners[i], j, static_cast<int>(run - i)});
      i = run;
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& lhs, const auto& rhs) {
    return std::tie(lhs.a_index, lhs.b_index) < std::tie(rhs.a_index, rhs.b_index);
  });
  return graph;
}

}  // namespace mlsa
