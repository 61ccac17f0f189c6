#include "mlsa/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "mlsa/error.hpp"

namespace mlsa {

namespace {

class MlsaSearch {
 public:
  explicit MlsaSearch(const Digraph& g) : g_(g), children_(g.num_vertices(), 0) {
    const int n = g.num_vertices();
    std::vector<int> indegree(n, 0);
    for (const Arc& arc : g.arcs()) ++indegree[arc.head];
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v) {
      if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : g.out_neighbors(order[i])) {
        if (--indegree[w] == 0) order.push_back(w);
      }
    }
    if (static_cast<int>(order.size()) != n || order.front() != g.root()) {
      throw Error(ErrorKind::kInvalidInstance, "exact_mlsa needs a rooted DAG");
    }
    for (Vertex v : order) {
      if (v == g.root()) continue;
      if (g.in_neighbors(v).empty()) {
        throw Error(ErrorKind::kInvalidInstance, "vertex without entering arc");
      }
      order_.push_back(v);
    }
    parent_.assign(n, kNoVertex);
  }

  ExactMlsaResult solve() {
    best_parent_ = parent_;
    branch(0, 0);
    ExactMlsaResult result;
    result.leaves = best_leaves_;
    result.witness.parent = best_parent_;
    result.witness.leaf_count = best_leaves_;
    return result;
  }

 private:
  // Leaves = n - #vertices with a child; the count of distinct parents so
  // far only grows, so n - distinct bounds every completion.
  void branch(std::size_t depth, int distinct) {
    const int n = g_.num_vertices();
    if (n - distinct <= best_leaves_ && best_leaves_ > 0) return;
    if (depth == order_.size()) {
      best_leaves_ = n - distinct;
      best_parent_ = parent_;
      return;
    }
    const Vertex v = order_[depth];
    const auto& choices = g_.in_neighbors(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (Vertex p : choices) {
        const bool used = children_[p] > 0;
        if (used != (pass == 0)) continue;
        parent_[v] = p;
        ++children_[p];
        branch(depth + 1, distinct + (used ? 0 : 1));
        --children_[p];
      }
    }
    parent_[v] = kNoVertex;
  }

  const Digraph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<int> children_;
  std::vector<Vertex> best_parent_;
  int best_leaves_ = 0;
};

class PackingSearch {
 public:
  PackingSearch(int ground_size, std::vector<ElementSet> candidates)
      : candidates_(std::move(candidates)),
        degree_(ground_size, 0),
        ratio_(ground_size, 0.0),
        blocked_(ground_size, false) {}

  std::pair<long long, std::vector<int>> solve() {
    std::vector<int> live(candidates_.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
    branch(live, 0);
    return {best_, best_chosen_};
  }

 private:
  void branch(const std::vector<int>& live, long long weight) {
    if (weight > best_) {
      best_ = weight;
      best_chosen_ = chosen_;
    }
    if (live.empty()) return;

    // Each element can earn at most (|c|-1)/|c| of the weight of a set c
    // covering it.
    std::vector<Element> touched;
    for (int c : live) {
      const auto& s = candidates_[c];
      const double share = static_cast<double>(s.size() - 1) / static_cast<double>(s.size());
      for (Element e : s) {
        if (degree_[e]++ == 0) touched.push_back(e);
        ratio_[e] = std::max(ratio_[e], share);
      }
    }
    double bound = 0.0;
    Element pivot = touched.front();
    for (Element e : touched) {
      bound += ratio_[e];
      if (degree_[e] > degree_[pivot] || (degree_[e] == degree_[pivot] && e < pivot)) pivot = e;
    }
    for (Element e : touched) {
      degree_[e] = 0;
      ratio_[e] = 0.0;
    }
    if (weight + static_cast<long long>(std::floor(bound + 1e-9)) <= best_) return;

    std::vector<int> with_pivot;
    std::vector<int> without_pivot;
    for (int c : live) {
      const auto& s = candidates_[c];
      (std::binary_search(s.begin(), s.end(), pivot) ? with_pivot : without_pivot).push_back(c);
    }
    std::stable_sort(with_pivot.begin(), with_pivot.end(), [&](int lhs, int rhs) {
      return candidates_[lhs].size() > candidates_[rhs].size();
    });
    for (int c : with_pivot) {
      const auto& s = candidates_[c];
      for (Element e : s) blocked_[e] = true;
      std::vector<int> rest;
      for (int other : without_pivot) {
        const auto& o = candidates_[other];
        if (std::none_of(o.begin(), o.end(), [&](Element e) { return blocked_[e]; })) {
          rest.push_back(other);
        }
      }
      for (Element e : s) blocked_[e] = false;
      chosen_.push_back(c);
      branch(rest, weight + static_cast<long long>(s.size()) - 1);
      chosen_.pop_back();
    }
    branch(without_pivot, weight);
  }

  std::vector<ElementSet> candidates_;
  std::vector<int> degree_;
  std::vector<double> ratio_;
  std::vector<bool> blocked_;
  std::vector<int> chosen_;
  std::vector<int> best_chosen_;
  long long best_ = 0;
};

bool intersects(const ElementSet& lhs, const ElementSet& rhs) {
  for (Element x : lhs) {
    for (Element y : rhs) {
      if (x == y) return true;
    }
  }
  return false;
}

class ImprovementEnumerator {
 public:
  ImprovementEnumerator(const std::vector<ElementSet>& candidates, const Packing& a,
                        int ground_size, long long max_nodes)
      : candidates_(candidates), a_(a), used_(ground_size, false), max_nodes_(max_nodes) {}

  LocalOptimalityCheck run(int max_size) {
    max_size_ = max_size;
    LocalOptimalityCheck result;
    if (enumerate(0)) {
      result.locally_optimal = false;
      for (int c : found_) result.witness.push_back(candidates_[c]);
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool is_improvement() const {
    long long x_weight = 0, x_twos = 0, n_weight = 0, n_twos = 0;
    for (int c : chosen_) {
      const long long w = static_cast<long long>(candidates_[c].size()) - 1;
      x_weight += w;
      x_twos += w == 2;
    }
    for (const auto& s : a_.sets()) {
      const bool hit = std::any_of(chosen_.begin(), chosen_.end(),
                                   [&](int c) { return intersects(candidates_[c], s); });
      if (!hit) continue;
      const long long w = static_cast<long long>(s.size()) - 1;
      n_weight += w;
      n_twos += w == 2;
    }
    return x_weight > n_weight || (x_weight == n_weight && x_twos > n_twos);
  }

  bool enumerate(std::size_t from) {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorKind::kBudgetExceeded, "local optimality check exceeded node budget");
    }
    if (!chosen_.empty() && is_improvement()) {
      found_ = chosen_;
      return true;
    }
    if (static_cast<int>(chosen_.size()) == max_size_) return false;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const auto& s = candidates_[i];
      if (std::any_of(s.begin(), s.end(), [&](Element e) { return used_[e]; })) continue;
      for (Element e : s) used_[e] = true;
      chosen_.push_back(static_cast<int>(i));
      const bool found = enumerate(i + 1);
      chosen_.pop_back();
      for (Element e : s) used_[e] = false;
      if (found) return true;
    }
    return false;
  }

  const std::vector<ElementSet>& candidates_;
  const Packing& a_;
  std::vector<bool> used_;
  std::vector<int> chosen_;
  std::vector<int> found_;
  long long max_nodes_;
  long long nodes_ = 0;
  int max_size_ = 0;
};

}  // namespace

std::vector<ElementSet> oracle_candidates(const SetFamily& f, int max_candidates) {
  std::set<ElementSet> seen;
  for (const auto& s : f.maximal_sets()) {
    const std::size_t m = s.size();
    if (m >= 31 || (1LL << m) - static_cast<long long>(m) - 1 > max_candidates) {
      throw Error(ErrorKind::kBudgetExceeded, "candidate budget exceeded");
    }
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      if (std::popcount(mask) < 2) continue;
      ElementSet sub;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1ULL) sub.push_back(s[i]);
      }
      seen.insert(std::move(sub));
      if (static_cast<int>(seen.size()) > max_candidates) {
        throw Error(ErrorKind::kBudgetExceeded, "candidate budget exceeded");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

ExactMlsaResult exact_mlsa(const Digraph& g, int max_vertices) {
  if (g.num_vertices() > max_vertices) {
    throw Error(ErrorKind::kBudgetExceeded, "exact_mlsa limited to " +
                                                std::to_string(max_vertices) + " vertices");
  }
  return MlsaSearch(g).solve();
}

ExactPackingResult exact_packing(const SetFamily& f, int max_candidates) {
  auto candidates = oracle_candidates(f, max_candidates);
  ExactPackingResult result;
  result.num_candidates = static_cast<int>(candidates.size());
  PackingSearch search(f.ground_size(), candidates);
  auto [weight, chosen] = search.solve();
  result.weight = weight;
  result.witness = Packing(f.ground_size());
  for (int c : chosen) result.witness.add(candidates[c]);
  return result;
}

LocalOptimalityCheck exhaustive_no_improvement(const SetFamily& f, const Packing& a, int max_size,
                                               long long max_nodes) {
  const auto candidates = oracle_candidates(f, 1'000'000);
  return ImprovementEnumerator(candidates, a, f.ground_size(), max_nodes).run(max_size);
}

}  // namespace mlsa
