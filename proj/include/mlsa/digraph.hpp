#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlsa {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Rooted directed graph on the dense vertex set 0..n-1. Construction only
// checks that indices are in range; simplicity, acyclicity and reachability
// are the job of validate_instance().
class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_vertices, Vertex root, std::vector<Arc> arcs);

  int num_vertices() const { return static_cast<int>(out_adj_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  Vertex root() const { return root_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Neighbor lists are sorted ascending.
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_adj_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_adj_[v]; }

  bool has_arc(Vertex tail, Vertex head) const;

 private:
  Vertex root_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
};

// Spanning r-arborescence stored as a parent function; parent[root] is
// kNoVertex. leaf_count caches the number of vertices without children.
struct Arborescence {
  std::vector<Vertex> parent;
  int leaf_count = 0;

  static Arborescence from_parents(std::vector<Vertex> parent);

  int num_vertices() const { return static_cast<int>(parent.size()); }
  std::vector<std::vector<Vertex>> children() const;
};

enum class InstanceViolationKind { kSelfLoop, kDuplicateArc, kCycleFound, kUnreachable };
enum class ArborescenceViolationKind {
  kSizeMismatch,
  kRootHasParent,
  kMissingParent,
  kNotSubgraph,
  kUnreachable,
};

const char* to_string(InstanceViolationKind kind);
const char* to_string(ArborescenceViolationKind kind);

struct InstanceViolation {
  InstanceViolationKind kind;
  // Cycle vertices in arc order (kCycleFound), the offending arc as
  // {tail, head} (kSelfLoop, kDuplicateArc) or the vertex (kUnreachable).
  std::vector<Vertex> witness;

  std::string describe() const;
};

struct ArborescenceViolation {
  ArborescenceViolationKind kind;
  std::vector<Vertex> witness;

  std::string describe() const;
};

// Returns the first violated condition in the order: self-loop, duplicate
// arc, cycle, unreachable vertex.
std::optional<InstanceViolation> validate_instance(const Digraph& g);

// Checks in-degree conditions and that every parent arc exists in g; vertex
// reachability from the root is rechecked as well.
std::optional<ArborescenceViolation> verify_arborescence(const Digraph& g,
                                                         const Arborescence& t);

int count_leaves(const Arborescence& t);

// 1 + sum over non-leaves v of (|children(v)| - 1).
int leaf_formula(const Arborescence& t);

// Sum over vertices with nonempty out-neighborhood of (outdeg - 1), for an
// arbitrary arc set on n vertices.
int excess_out_degree(int num_vertices, const std::vector<Arc>& arcs);

// .dag: "n m r" followed by m lines "u v"; '#' starts a comment.
Digraph read_dag(std::istream& in);
Digraph read_dag_file(const std::string& path);
void write_dag(std::ostream& out, const Digraph& g);

// .arb: n lines "v parent", parent -1 for the root.
Arborescence read_arb(std::istream& in);
Arborescence read_arb_file(const std::string& path);
void write_arb(std::ostream& out, const Arborescence& t);

}  // namespace mlsa
