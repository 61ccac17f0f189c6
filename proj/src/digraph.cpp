#include "mlsa/digraph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

#include "mlsa/error.hpp"
#include "text_io.hpp"

namespace mlsa {

Digraph::Digraph(int num_vertices, Vertex root, std::vector<Arc> arcs)
    : root_(root), arcs_(std::move(arcs)) {
  if (num_vertices < 1) {
    throw Error(ErrorKind::kInvalidInstance, "digraph needs at least one vertex");
  }
  if (root < 0 || root >= num_vertices) {
    throw Error(ErrorKind::kInvalidInstance, "root " + std::to_string(root) + " out of range");
  }
  out_adj_.resize(num_vertices);
  in_adj_.resize(num_vertices);
  for (const Arc& arc : arcs_) {
    if (arc.tail < 0 || arc.tail >= num_vertices || arc.head < 0 || arc.head >= num_vertices) {
      throw Error(ErrorKind::kInvalidInstance, "arc (" + std::to_string(arc.tail) + "," +
                                                   std::to_string(arc.head) + ") out of range");
    }
    out_adj_[arc.tail].push_back(arc.head);
    in_adj_[arc.head].push_back(arc.tail);
  }
  for (auto& list : out_adj_) std::sort(list.begin(), list.end());
  for (auto& list : in_adj_) std::sort(list.begin(), list.end());
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= num_vertices()) return false;
  return std::binary_search(out_adj_[tail].begin(), out_adj_[tail].end(), head);
}

Arborescence Arborescence::from_parents(std::vector<Vertex> parent) {
  Arborescence t;
  t.parent = std::move(parent);
  t.leaf_count = count_leaves(t);
  return t;
}

std::vector<std::vector<Vertex>> Arborescence::children() const {
  std::vector<std::vector<Vertex>> result(parent.size());
  for (Vertex v = 0; v < num_vertices(); ++v) {
    const Vertex p = parent[v];
    if (p >= 0 && p < num_vertices()) result[p].push_back(v);
  }
  return result;
}

const char* to_string(InstanceViolationKind kind) {
  switch (kind) {
    case InstanceViolationKind::kSelfLoop: return "SelfLoop";
    case InstanceViolationKind::kDuplicateArc: return "DuplicateArc";
    case InstanceViolationKind::kCycleFound: return "CycleFound";
    case InstanceViolationKind::kUnreachable: return "Unreachable";
  }
  return "?";
}

const char* to_string(ArborescenceViolationKind kind) {
  switch (kind) {
    case ArborescenceViolationKind::kSizeMismatch: return "SizeMismatch";
    case ArborescenceViolationKind::kRootHasParent: return "RootHasParent";
    case ArborescenceViolationKind::kMissingParent: return "MissingParent";
    case ArborescenceViolationKind::kNotSubgraph: return "NotSubgraph";
    case ArborescenceViolationKind::kUnreachable: return "Unreachable";
  }
  return "?";
}

namespace {

std::string join(const std::vector<Vertex>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

// Kahn's algorithm; on failure traces in-arcs among the unremoved vertices
// until one repeats, which closes a cycle.
std::optional<std::vector<Vertex>> find_cycle(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<int> indegree(n, 0);
  for (const Arc& arc : g.arcs()) ++indegree[arc.head];
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  std::vector<bool> removed(n, false);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    removed[v] = true;
    for (Vertex w : g.out_neighbors(v)) {
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) == n) return std::nullopt;

  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<int> position(n, -1);
  std::vector<Vertex> walk;
  Vertex v = start;
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (Vertex u : g.in_neighbors(v)) {
      if (!removed[u]) {
        v = u;
        break;
      }
    }
  }
  std::vector<Vertex> cycle(walk.begin() + position[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

std::string InstanceViolation::describe() const {
  return std::string(to_string(kind)) + "(" + join(witness) + ")";
}

std::string ArborescenceViolation::describe() const {
  return std::string(to_string(kind)) + "(" + join(witness) + ")";
}

std::optional<InstanceViolation> validate_instance(const Digraph& g) {
  for (const Arc& arc : g.arcs()) {
    if (arc.tail == arc.head) {
      return InstanceViolation{InstanceViolationKind::kSelfLoop, {arc.tail, arc.head}};
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& out = g.out_neighbors(v);
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
      return InstanceViolation{InstanceViolationKind::kDuplicateArc, {v, *dup}};
    }
  }
  if (auto cycle = find_cycle(g)) {
    return InstanceViolation{InstanceViolationKind::kCycleFound, std::move(*cycle)};
  }
  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<Vertex> queue{g.root()};
  seen[g.root()] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.out_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) return InstanceViolation{InstanceViolationKind::kUnreachable, {v}};
  }
  return std::nullopt;
}

std::optional<ArborescenceViolation> verify_arborescence(const Digraph& g,
                                                         const Arborescence& t) {
  const int n = g.num_vertices();
  if (t.num_vertices() != n) {
    return ArborescenceViolation{ArborescenceViolationKind::kSizeMismatch, {t.num_vertices(), n}};
  }
  if (t.parent[g.root()] != kNoVertex) {
    return ArborescenceViolation{ArborescenceViolationKind::kRootHasParent,
                                 {g.root(), t.parent[g.root()]}};
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == g.root()) continue;
    const Vertex p = t.parent[v];
    if (p == kNoVertex) return ArborescenceViolation{ArborescenceViolationKind::kMissingParent, {v}};
    if (!g.has_arc(p, v)) {
      return ArborescenceViolation{ArborescenceViolationKind::kNotSubgraph, {p, v}};
    }
  }
  const auto children = t.children();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{g.root()};
  seen[g.root()] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : children[v]) {
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) return ArborescenceViolation{ArborescenceViolationKind::kUnreachable, {v}};
  }
  return std::nullopt;
}

int count_leaves(const Arborescence& t) {
  std::vector<bool> has_child(t.parent.size(), false);
  for (Vertex p : t.parent) {
    if (p >= 0 && p < t.num_vertices()) has_child[p] = true;
  }
  return static_cast<int>(std::count(has_child.begin(), has_child.end(), false));
}

int leaf_formula(const Arborescence& t) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    if (t.parent[v] != kNoVertex) arcs.push_back({t.parent[v], v});
  }
  return 1 + excess_out_degree(t.num_vertices(), arcs);
}

int excess_out_degree(int num_vertices, const std::vector<Arc>& arcs) {
  std::vector<int> out_degree(num_vertices, 0);
  for (const Arc& arc : arcs) ++out_degree[arc.tail];
  int total = 0;
  for (int d : out_degree) {
    if (d > 0) total += d - 1;
  }
  return total;
}

Digraph read_dag(std::istream& in) {
  int line_no = 0;
  std::vector<long long> tok;
  if (!detail::next_int_line(in, line_no, tok) || tok.size() != 3) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected header 'n m r'");
  }
  const long long n = tok[0], m = tok[1], r = tok[2];
  if (n < 1 || m < 0 || r < 0 || r >= n) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad header values");
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_int_line(in, line_no, tok)) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no + 1) + ": expected " +
                                         std::to_string(m) + " arcs, got " + std::to_string(i));
    }
    if (tok.size() != 2 || tok[0] < 0 || tok[0] >= n || tok[1] < 0 || tok[1] >= n) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": bad arc");
    }
    arcs.push_back({static_cast<Vertex>(tok[0]), static_cast<Vertex>(tok[1])});
  }
  if (detail::next_int_line(in, line_no, tok)) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": trailing data");
  }
  return Digraph(static_cast<int>(n), static_cast<Vertex>(r), std::move(arcs));
}

Digraph read_dag_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_dag(in);
}

void write_dag(std::ostream& out, const Digraph& g) {
  out << g.num_vertices() << ' ' << g.num_arcs() << ' ' << g.root() << '\n';
  for (const Arc& arc : g.arcs()) out << arc.tail << ' ' << arc.head << '\n';
}

Arborescence read_arb(std::istream& in) {
  int line_no = 0;
  std::vector<long long> tok;
  std::vector<std::pair<long long, long long>> rows;
  while (detail::next_int_line(in, line_no, tok)) {
    if (tok.size() != 2) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected 'v parent'");
    }
    rows.emplace_back(tok[0], tok[1]);
  }
  const auto n = static_cast<long long>(rows.size());
  std::vector<Vertex> parent(rows.size(), kNoVertex);
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [v, p] : rows) {
    if (v < 0 || v >= n || seen[v] || p < -1 || p >= n) {
      throw Error(ErrorKind::kParse, "arborescence row for vertex " + std::to_string(v) +
                                         " is out of range or repeated");
    }
    seen[v] = true;
    parent[v] = static_cast<Vertex>(p);
  }
  return Arborescence::from_parents(std::move(parent));
}

Arborescence read_arb_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_arb(in);
}

void write_arb(std::ostream& out, const Arborescence& t) {
  for (Vertex v = 0; v < t.num_vertices(); ++v) out << v << ' ' << t.parent[v] << '\n';
}

}  // namespace mlsa
