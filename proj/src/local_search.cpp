#include "mlsa/local_search.hpp"

#include <algorithm>
#include <numeric>

#include "mlsa/error.hpp"

namespace mlsa {

namespace {

std::uint64_t set_key(const Element* begin, int size) {
  std::uint64_t key = static_cast<std::uint64_t>(size);
  for (int i = 0; i < size; ++i) key = (key << 21) | static_cast<std::uint64_t>(begin[i] + 1);
  return key;
}

// Shared state of one improvement search against a fixed packing.
class ImprovementSearch {
 public:
  ImprovementSearch(const CandidateUniverse& universe, const Packing& a)
      : universe_(universe),
        a_(a),
        packed_(universe.size(), false),
        touching_(a.size()),
        touch_count_(a.size(), 0),
        element_used_(universe.ground_size(), false),
        esu_mark_(universe.size(), 0),
        stamp_(universe.size(), 0) {
    for (int i = 0; i < a.size(); ++i) {
      if (auto id = universe.find(a.set(i))) packed_[*id] = true;
    }
    for (int i = 0; i < a.size(); ++i) {
      auto& list = touching_[i];
      for (Element e : a.set(i)) {
        for (int c : universe.containing(e)) {
          if (!packed_[c]) list.push_back(c);
        }
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::optional<Improvement> connected(int max_size) {
    const int size_cap = std::min(max_size, universe_.ground_size() / 2);
    for (int limit = 1; limit <= size_cap; ++limit) {
      limit_ = limit;
      reached_limit_ = false;
      pruned_ = false;
      for (int seed = 0; seed < universe_.size(); ++seed) {
        if (packed_[seed]) continue;
        std::vector<int> ext;
        for (int u : neighbors(seed)) {
          if (u > seed) ext.push_back(u);
        }
        push(seed);
        const bool found = extend(ext, seed);
        pop(seed);
        if (found) return std::move(result_);
      }
      // Every connected collection was already smaller than `limit`.
      if (!reached_limit_ && !pruned_) break;
    }
    return std::nullopt;
  }

  std::optional<Improvement> exhaustive(int max_size) {
    const int size_cap = std::min(max_size, universe_.ground_size() / 2);
    std::vector<int> pool;
    for (int c = 0; c < universe_.size(); ++c) {
      if (!packed_[c]) pool.push_back(c);
    }
    for (int limit = 1; limit <= size_cap; ++limit) {
      limit_ = limit;
      if (combinations(pool, 0)) return std::move(result_);
    }
    return std::nullopt;
  }

  long long examined() const { return examined_; }

 private:
  bool conflicts(int c) const {
    const Candidate& cand = universe_[c];
    for (int i = 0; i < cand.size; ++i) {
      if (element_used_[cand.elements[i]]) return true;
    }
    return false;
  }

  // Candidates sharing a packed neighbor with c, excluding c.
  std::vector<int> neighbors(int c) {
    ++stamp_gen_;
    stamp_[c] = stamp_gen_;
    std::vector<int> result;
    const Candidate& cand = universe_[c];
    for (int i = 0; i < cand.size; ++i) {
      const int owner = a_.owner(cand.elements[i]);
      if (owner == kNoSet) continue;
      for (int u : touching_[owner]) {
        if (stamp_[u] != stamp_gen_) {
          stamp_[u] = stamp_gen_;
          result.push_back(u);
        }
      }
    }
    return result;
  }

  void push(int c) {
    const Candidate& cand = universe_[c];
    chosen_.push_back(c);
    delta_w_ += cand.weight();
    if (cand.weight() == 2) ++delta_two_;
    for (int i = 0; i < cand.size; ++i) {
      const Element e = cand.elements[i];
      element_used_[e] = true;
      const int owner = a_.owner(e);
      if (owner != kNoSet && touch_count_[owner]++ == 0) {
        const int w = set_weight(a_.set(owner));
        delta_w_ -= w;
        if (w == 2) --delta_two_;
      }
    }
  }

  void pop(int c) {
    const Candidate& cand = universe_[c];
    chosen_.pop_back();
    delta_w_ -= cand.weight();
    if (cand.weight() == 2) --delta_two_;
    for (int i = 0; i < cand.size; ++i) {
      const Element e = cand.elements[i];
      element_used_[e] = false;
      const int owner = a_.owner(e);
      if (owner != kNoSet && --touch_count_[owner] == 0) {
        const int w = set_weight(a_.set(owner));
        delta_w_ += w;
        if (w == 2) ++delta_two_;
      }
    }
  }

  void mark(int c, const std::vector<int>& nbrs, int by) {
    esu_mark_[c] += by;
    for (int u : nbrs) esu_mark_[u] += by;
  }

  bool check() {
    if (!is_improving(delta_w_, delta_two_)) return false;
    Improvement imp;
    for (int c : chosen_) imp.add.push_back(universe_[c].as_set());
    for (int i = 0; i < a_.size(); ++i) {
      if (touch_count_[i] > 0) imp.remove.push_back(i);
    }
    imp.delta_w = delta_w_;
    imp.delta_two = delta_two_;
    imp.packing_version = a_.version();
    result_ = std::move(imp);
    return true;
  }

  // Each connected collection containing `seed` as its smallest id is
  // reached exactly once: ext holds the admissible extensions, and a new
  // vertex only contributes neighbors not adjacent to the current
  // collection.
  bool extend(const std::vector<int>& ext, int seed) {
    ++examined_;
    const int size = static_cast<int>(chosen_.size());
    if (size == limit_) {
      reached_limit_ = true;
      return check();
    }
    // Each further set adds at most weight 2.
    if (delta_w_ + 2 * (limit_ - size) < 0) {
      pruned_ = true;
      return false;
    }
    if (size == 1) mark(chosen_.front(), neighbors(chosen_.front()), +1);
    bool found = false;
    for (std::size_t i = 0; i < ext.size() && !found; ++i) {
      const int w = ext[i];
      if (conflicts(w)) continue;
      const std::vector<int> nbrs = neighbors(w);
      std::vector<int> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
      for (int u : nbrs) {
        if (u > seed && esu_mark_[u] == 0) next.push_back(u);
      }
      mark(w, nbrs, +1);
      push(w);
      found = extend(next, seed);
      pop(w);
      mark(w, nbrs, -1);
    }
    if (size == 1) mark(chosen_.front(), neighbors(chosen_.front()), -1);
    return found;
  }

  bool combinations(const std::vector<int>& pool, std::size_t from) {
    ++examined_;
    if (static_cast<int>(chosen_.size()) == limit_) return check();
    for (std::size_t i = from; i < pool.size(); ++i) {
      const int c = pool[i];
      if (conflicts(c)) continue;
      push(c);
      const bool found = combinations(pool, i + 1);
      pop(c);
      if (found) return true;
    }
    return false;
  }

  const CandidateUniverse& universe_;
  const Packing& a_;
  std::vector<bool> packed_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> touch_count_;
  std::vector<bool> element_used_;
  std::vector<int> esu_mark_;
  std::vector<int> stamp_;
  int stamp_gen_ = 0;

  std::vector<int> chosen_;
  long long delta_w_ = 0;
  long long delta_two_ = 0;
  int limit_ = 0;
  bool reached_limit_ = false;
  bool pruned_ = false;
  long long examined_ = 0;
  std::optional<Improvement> result_;
};

}  // namespace

CandidateUniverse CandidateUniverse::enumerate(const SetFamily& f, SeedOrder order) {
  if (f.k_bound() > 3) {
    throw Error(ErrorKind::kKBoundExceeded,
                "local search needs sets of size <= 3, family has k = " +
                    std::to_string(f.k_bound()));
  }
  CandidateUniverse u;
  auto insert = [&u](std::initializer_list<Element> elements) {
    Candidate c;
    std::copy(elements.begin(), elements.end(), c.elements.begin());
    c.size = static_cast<int>(elements.size());
    if (u.index_.emplace(set_key(c.elements.data(), c.size), 0).second) {
      u.candidates_.push_back(c);
    }
  };
  for (const auto& s : f.maximal_sets()) {
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        insert({s[i], s[j]});
        for (int k = j + 1; k < n; ++k) insert({s[i], s[j], s[k]});
      }
    }
  }
  if (order == SeedOrder::kSorted) {
    std::sort(u.candidates_.begin(), u.candidates_.end(), [](const auto& lhs, const auto& rhs) {
      return std::lexicographical_compare(lhs.elements.begin(), lhs.elements.begin() + lhs.size,
                                          rhs.elements.begin(), rhs.elements.begin() + rhs.size);
    });
  }
  u.containing_.assign(f.ground_size(), {});
  u.index_.clear();
  for (int id = 0; id < u.size(); ++id) {
    const Candidate& c = u.candidates_[id];
    u.index_[set_key(c.elements.data(), c.size)] = id;
    for (int i = 0; i < c.size; ++i) u.containing_[c.elements[i]].push_back(id);
  }
  return u;
}

std::optional<int> CandidateUniverse::find(const ElementSet& s) const {
  if (s.size() < 2 || s.size() > 3) return std::nullopt;
  auto it = index_.find(set_key(s.data(), static_cast<int>(s.size())));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementSet> enumerate_candidates(const SetFamily& f) {
  const auto universe = CandidateUniverse::enumerate(f);
  std::vector<ElementSet> result;
  result.reserve(universe.size());
  for (int id = 0; id < universe.size(); ++id) result.push_back(universe[id].as_set());
  return result;
}

std::optional<Improvement> find_improvement(const CandidateUniverse& universe, const Packing& a,
                                            int max_size, SearchMode mode, long long* examined) {
  if (max_size < 1) return std::nullopt;
  ImprovementSearch search(universe, a);
  auto result = mode == SearchMode::kConnected ? search.connected(max_size)
                                               : search.exhaustive(max_size);
  if (examined != nullptr) *examined += search.examined();
  return result;
}

std::optional<Improvement> find_improvement(const SetFamily& f, const Packing& a, int max_size,
                                            SearchMode mode) {
  return find_improvement(CandidateUniverse::enumerate(f), a, max_size, mode);
}

void apply(Packing& a, const Improvement& imp) {
  if (imp.packing_version != a.version()) {
    throw Error(ErrorKind::kStaleImprovement, "packing changed since the improvement was found");
  }
  if (neighborhood(imp.add, a) != imp.remove) {
    throw Error(ErrorKind::kStaleImprovement, "improvement does not remove N(X, A)");
  }
  const long long weight_before = a.weight();
  const int twos_before = a.two_count();
  for (auto it = imp.remove.rbegin(); it != imp.remove.rend(); ++it) a.remove(*it);
  for (const auto& s : imp.add) a.add(s);
  if (a.weight() - weight_before != imp.delta_w || a.two_count() - twos_before != imp.delta_two ||
      !is_improving(imp.delta_w, imp.delta_two)) {
    throw Error(ErrorKind::kStaleImprovement, "improvement deltas do not match the packing");
  }
}

long long iteration_guard(int num_candidates) {
  const long long c = num_candidates;
  return (2 * (2 * c) + 1) * (c + 1);
}

SearchResult run(const SetFamily& f, const SearchOptions& options, std::optional<Packing> start) {
  const auto universe = CandidateUniverse::enumerate(f, options.seed_order);
  SearchResult result{start ? std::move(*start) : Packing(f.ground_size()), {}};
  if (auto problem = check_packing(f, result.packing)) {
    throw Error(ErrorKind::kInfeasible, "start packing infeasible: " + *problem);
  }
  SearchStats& stats = result.stats;
  stats.num_candidates = universe.size();
  const long long guard = iteration_guard(universe.size());
  long long plateau_run = 0;
  while (auto imp = find_improvement(universe, result.packing, options.max_size, options.mode,
                                     &stats.candidates_examined)) {
    apply(result.packing, *imp);
    ++stats.iterations;
    if (imp->delta_w > 0) {
      ++stats.weight_increases;
      plateau_run = 0;
    } else {
      ++stats.plateau_moves;
      stats.max_plateau_run = std::max(stats.max_plateau_run, ++plateau_run);
    }
    if (stats.iterations > guard) {
      throw Error(ErrorKind::kIterationGuard,
                  "local search exceeded " + std::to_string(guard) + " swaps");
    }
  }
  return result;
}

}  // namespace mlsa
