// Directed graphs with ordered internal vertices, boundary sinks, and a total
// edge order.  The edge list is kept sorted by (source, local out-rank), so
// the serialized form is canonical: equal graphs <=> equal keys.

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kstar {

struct graph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct loop_edge final : graph_error {
  loop_edge() : graph_error("loop edge") {}
};
struct multiple_edge final : graph_error {
  multiple_edge() : graph_error("multiple edge") {}
};
struct boundary_source final : graph_error {
  boundary_source() : graph_error("boundary vertex used as a source") {}
};
struct bad_numbering final : graph_error {
  explicit bad_numbering(const std::string& w) : graph_error(w) {}
};
struct not_contractible final : graph_error {
  explicit not_contractible(const std::string& w) : graph_error(w) {}
};
struct not_admissible_quotient final : graph_error {
  explicit not_admissible_quotient(const std::string& w) : graph_error(w) {}
};

// Reference to a vertex: internal vertices are numbered 1..n, boundary
// vertices 1..m (printed B1..Bm).  Internal refs order before boundary refs.
struct VRef {
  bool boundary = false;
  int id = 0;

  static VRef internal(int k) { return {false, k}; }
  static VRef bnd(int j) { return {true, j}; }

  friend bool operator==(const VRef&, const VRef&) = default;
  friend auto operator<=>(const VRef&, const VRef&) = default;
};

// One directed edge; sources are always internal.
struct Edge {
  int src = 0;
  VRef dst;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  int m() const { return m_; }
  bool on_sphere() const { return sphere_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int e() const { return static_cast<int>(edges_.size()); }

  // Bidegree: p = (#vertices) - (#edges) - 1, q = n.
  int p() const { return n_ + m_ - e() - 1; }
  int q() const { return n_; }

  int out_degree(int internal_vertex) const;
  // Out-edges of an internal vertex, in their local order (indices into
  // edges()).
  std::vector<int> out_edges(int internal_vertex) const;

  std::string key() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  friend Graph validate(int, int, const std::vector<std::pair<VRef, VRef>>&,
                        bool);
  int n_ = 0;
  int m_ = 0;
  bool sphere_ = false;
  std::vector<Edge> edges_;  // sorted by (src, local rank)
};

// Checks every structural condition on raw edge data and builds the graph:
// sources internal and in range, targets in range, no loops, no repeated
// (source, target) pair, and the edge list grouped by increasing source (the
// canonical total order).  Opposite-direction pairs between two internal
// vertices are fine; only same-direction duplicates are multiple edges.
// Sphere graphs have m = 0 and no boundary references.
Graph validate(int n, int m, const std::vector<std::pair<VRef, VRef>>& raw,
               bool sphere = false);

// Parses the canonical key format, e.g. "n=2;m=3;E=[(1,2),(1,B3),(2,B1)]";
// sphere graphs use "sphere" in place of "m=<int>".  Inverse of key().
Graph parse_graph(const std::string& text);

// All graphs with the requested vertex counts, in canonical key order.  If
// profile is nonempty it must have n entries; internal vertex i then has
// exactly profile[i-1] outgoing edges.  Without a profile all out-degrees
// (including 0) are enumerated.
std::vector<Graph> enumerate_graphs(int n, int m,
                                    const std::vector<int>& profile = {});

// A full-subgraph selector: the induced subgraph on the chosen internal and
// boundary vertices (every edge of the host joining two chosen vertices).
struct Selector {
  std::set<int> internal;
  std::set<int> boundary;

  friend bool operator==(const Selector&, const Selector&) = default;
  friend auto operator<=>(const Selector&, const Selector&) = default;
};

// Collapses the selected full subgraph to a single vertex: a new internal
// vertex when sel.boundary is empty, otherwise a new boundary vertex (the
// selected boundary labels must form one consecutive run).  Interior edges
// disappear; crossing edges are re-attached to the new vertex keeping their
// relative order; surviving vertices are renumbered in place (the new vertex
// sits where the smallest collapsed label was).  Throws not_contractible for
// an unusable selector and not_admissible_quotient when the collapsed graph
// violates a graph condition (loop, multiple edge, boundary source).
Graph quotient(const Graph& g, const Selector& sel);

// The full subgraph picked out by the selector, vertices renumbered by rank
// inside the selection, surviving edges in inherited order.
Graph induced(const Graph& g, const Selector& sel);

// True iff quotient(g, sel) succeeds and is admissible.
bool is_normal(const Graph& g, const Selector& sel);

enum class CollapseKind { internal, boundary };

// All proper normal selectors of the given kind (kind = type of the collapsed
// vertex).  Excludes the empty subgraph and the whole graph.
std::vector<Selector> normal_subgraphs(const Graph& g, CollapseKind kind);

// True iff the undirected multigraph spanned by the internal-internal edges
// is acyclic (an opposite-direction pair already counts as a cycle).
bool is_forest(const Graph& g);

} // namespace kstar
