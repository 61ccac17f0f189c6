#include "mlsa/generators.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

#include "mlsa/error.hpp"
#include "mlsa/oracles.hpp"

namespace mlsa {

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> UndirectedGraph::degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::optional<int> girth(const UndirectedGraph& g) {
  // Edge-indexed adjacency so parallel edges count as 2-cycles.
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
    auto [u, v] = g.edges[id];
    if (u == v) return 1;
    adj[u].push_back({v, id});
    adj[v].push_back({u, id});
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.num_vertices);
  std::vector<int> via(g.num_vertices);
  for (int source = 0; source < g.num_vertices; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source] = 0;
    via[source] = -1;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [w, id] : adj[u]) {
        if (id == via[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via[w] = id;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Digraph gen_random_dag(int n, double density, std::uint64_t seed) {
  if (n < 1 || !(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::kInvalidInstance, "gen_random_dag needs n >= 1 and 0 < density <= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Arc> arcs;
  for (int j = 1; j < n; ++j) {
    bool entered = false;
    for (int i = 0; i < j; ++i) {
      if (keep(rng)) {
        arcs.push_back({order[i], order[j]});
        entered = true;
      }
    }
    if (!entered) {
      std::uniform_int_distribution<int> earlier(0, j - 1);
      arcs.push_back({order[earlier(rng)], order[j]});
    }
  }
  return Digraph(n, order[0], std::move(arcs));
}

namespace {

UndirectedGraph complete_graph(int n) {
  UndirectedGraph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  }
  return g;
}

UndirectedGraph complete_bipartite(int k) {
  UndirectedGraph g{2 * k, {}};
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) g.edges.push_back({u, k + v});
  }
  return g;
}

UndirectedGraph petersen() {
  UndirectedGraph g{10, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.push_back({i, (i + 1) % 5});
    g.edges.push_back({i, i + 5});
    g.edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return g;
}

// Incidence graph of the Fano plane.
UndirectedGraph heawood() {
  UndirectedGraph g{14, {}};
  for (int i = 0; i < 7; ++i) {
    for (int offset : {0, 1, 3}) g.edges.push_back({i, 7 + (i + offset) % 7});
  }
  return g;
}

// Fewest vertices of a k-regular graph with girth g, saturating at cap + 1.
long long moore_bound(int k, int g, long long cap) {
  long long total = 0;
  long long power = 1;
  const int terms = g % 2 == 1 ? (g - 1) / 2 : g / 2;
  for (int i = 0; i < terms && total <= cap; ++i, power = std::min(cap + 1, power * (k - 1))) {
    total += power;
  }
  return std::min(cap + 1, g % 2 == 1 ? 1 + k * total : 2 * total);
}

constexpr long long kMaxRandomVertices = 100'000;

// Adds edges one at a time between vertices with free degree, requiring
// the endpoints to be at distance >= girth_min - 1.
std::optional<UndirectedGraph> try_pairing(int k, int n, int girth_min, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> open(n);
  std::iota(open.begin(), open.end(), 0);
  std::vector<int> dist(n);
  UndirectedGraph g{n, {}};
  while (!open.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const int u = open[pick(rng)];
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (dist[x] + 1 >= girth_min - 1) continue;
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    std::vector<int> feasible;
    for (int v : open) {
      if (v != u && dist[v] < 0) feasible.push_back(v);
    }
    if (feasible.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> choose(0, feasible.size() - 1);
    const int v = feasible[choose(rng)];
    adj[u].push_back(v);
    adj[v].push_back(u);
    g.edges.push_back({std::min(u, v), std::max(u, v)});
    std::erase_if(open, [&](int x) { return static_cast<int>(adj[x].size()) == k; });
  }
  return g;
}

}  // namespace

RegularGraph gen_regular_high_girth(int k, int girth_min, int n_min, std::uint64_t seed,
                                    int max_attempts) {
  if (k < 3) throw Error(ErrorKind::kInvalidInstance, "gen_regular_high_girth needs k >= 3");
  std::vector<RegularGraph> library;
  library.push_back({complete_graph(k + 1), "K" + std::to_string(k + 1)});
  library.push_back({complete_bipartite(k), "K" + std::to_string(k) + "," + std::to_string(k)});
  if (k == 3) {
    library.push_back({petersen(), "Petersen"});
    library.push_back({heawood(), "Heawood"});
  }
  for (const auto& entry : library) {
    if (entry.graph.num_vertices >= n_min && girth(entry.graph).value_or(0) >= girth_min) {
      return entry;
    }
  }

  long long n = std::max<long long>(
      {n_min, k + 1, moore_bound(k, std::max(girth_min, 3), kMaxRandomVertices)});
  if (n > kMaxRandomVertices) {
    throw Error(ErrorKind::kGenerationTimeout,
                "a " + std::to_string(k) + "-regular graph with girth >= " +
                    std::to_string(girth_min) + " needs more than " +
                    std::to_string(kMaxRandomVertices) + " vertices");
  }
  std::mt19937_64 rng(seed);
  if ((n * k) % 2 != 0) ++n;
  int attempts = 0;
  while (attempts < max_attempts) {
    for (int round = 0; round < 50 && attempts < max_attempts; ++round, ++attempts) {
      if (auto g = try_pairing(k, static_cast<int>(n), std::max(girth_min, 3), rng)) {
        if (girth(*g).value_or(girth_min) >= girth_min) return {std::move(*g), "random"};
      }
    }
    n += (k % 2 == 0) ? 1 : 2;
  }
  throw Error(ErrorKind::kGenerationTimeout,
              "no " + std::to_string(k) + "-regular graph with girth >= " +
                  std::to_string(girth_min) + " found within " + std::to_string(max_attempts) +
                  " attempts");
}

UndirectedGraph incidence_graph(const UndirectedGraph& h) {
  UndirectedGraph g{h.num_vertices + static_cast<int>(h.edges.size()), {}};
  for (int j = 0; j < static_cast<int>(h.edges.size()); ++j) {
    g.edges.push_back({h.edges[j].first, h.num_vertices + j});
    g.edges.push_back({h.edges[j].second, h.num_vertices + j});
  }
  return g;
}

LowerBoundInstance gen_lower_bound(int k, int t, std::uint64_t seed, std::optional<int> base_girth,
                                   long long certify_budget) {
  if (k < 3 || t < 1) throw Error(ErrorKind::kInvalidInstance, "gen_lower_bound needs k >= 3, t >= 1");
  const int girth_min = base_girth.value_or((k * t + 2) / 2 + 1);
  RegularGraph base = gen_regular_high_girth(k, girth_min, 1, seed);
  const UndirectedGraph& h = base.graph;
  // Incidence j of the incidence graph is the G-edge incidence_graph(h).edges[j]:
  // 2i joins endpoint `first` of H-edge i, 2i+1 joins `second`.
  const UndirectedGraph g = incidence_graph(h);
  const int ground = static_cast<int>(g.edges.size());

  std::vector<ElementSet> delta(g.num_vertices);
  for (int j = 0; j < ground; ++j) {
    delta[g.edges[j].first].push_back(j);
    delta[g.edges[j].second].push_back(j);
  }
  LowerBoundInstance inst;
  inst.k = k;
  inst.t = t;
  inst.base_source = base.source;
  inst.base = h;
  inst.girth = girth(g).value_or(0);
  inst.family = family_from_sets(ground, delta);
  inst.a_solution = Packing(ground);
  inst.b_solution = Packing(ground);
  for (int v = 0; v < h.num_vertices; ++v) inst.b_solution.add(delta[v]);
  for (int v = h.num_vertices; v < g.num_vertices; ++v) inst.a_solution.add(delta[v]);

  try {
    inst.certified = exhaustive_no_improvement(inst.family, inst.a_solution, t, certify_budget)
                         .locally_optimal;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kBudgetExceeded) throw;
    inst.certified = false;
  }
  return inst;
}

std::optional<std::string> check_lower_bound_instance(const LowerBoundInstance& inst) {
  if (auto problem = check_packing(inst.family, inst.a_solution)) return "A: " + *problem;
  if (auto problem = check_packing(inst.family, inst.b_solution)) return "B: " + *problem;
  if (static_cast<long long>(inst.k) * inst.b_solution.weight() !=
      static_cast<long long>(2 * inst.k - 2) * inst.a_solution.weight()) {
    return "weight ratio w(B)/w(A) differs from 2 - 2/k";
  }
  if (inst.girth < inst.k * inst.t + 1) return "incidence girth below k*t + 1";
  for (const auto& s : inst.a_solution.sets()) {
    if (s.size() != 2) return "A contains a set of size != 2";
  }
  return std::nullopt;
}

}  // namespace mlsa
