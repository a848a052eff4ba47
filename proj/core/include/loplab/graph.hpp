#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace loplab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1.
//
// Edges are stored normalized (u < v) and sorted lexicographically; the
// adjacency is a CSR array with each neighbor list sorted ascending, so any
// traversal that walks neighbors in order is a pure function of the graph.
// Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges or endpoints
  // outside [0, n). Edge orientation and order in the input do not matter.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph empty(std::size_t n) { return Graph(n, {}); }
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t k);
  static Graph path(std::size_t n);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  // Binary search in the sorted neighbor list of the lower-degree endpoint.
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept;

  // Recomputes the edge set from the adjacency and compares.
  [[nodiscard]] bool is_consistent() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// Ordered vertex sequence v0..v(k-1) describing the cycle v0-v1-...-v(k-1)-v0.
struct CycleWitness {
  std::vector<Vertex> vertices;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct BackEdge {
  Vertex descendant;
  Vertex ancestor;
  std::size_t span;  // depth(descendant) - depth(ancestor)
};

struct DfsForest {
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::size_t> depth;
  std::vector<BackEdge> back_edges;
};

[[nodiscard]] inline std::size_t edge_count(const Graph& g) noexcept { return g.edge_count(); }

// Connected components, largest first; ties broken by smallest contained
// label. Each cell is sorted ascending.
[[nodiscard]] std::vector<std::vector<Vertex>> components(const Graph& g);

[[nodiscard]] std::size_t component_count(const Graph& g);
[[nodiscard]] std::size_t largest_component_size(const Graph& g);

// Iterative DFS started from each unvisited vertex of `root_order` in turn.
// Throws std::invalid_argument if root_order is not a permutation of 0..n-1.
[[nodiscard]] DfsForest dfs_forest(const Graph& g, std::span<const Vertex> root_order);
[[nodiscard]] DfsForest dfs_forest(const Graph& g);

[[nodiscard]] bool is_forest(const Graph& g);

// Tree path from the back edge's ancestor down to its descendant, closed by
// the back edge itself. The result has span + 1 vertices.
[[nodiscard]] CycleWitness cycle_from_back_edge(const DfsForest& forest, const BackEdge& edge);

[[nodiscard]] bool verify_cycle_witness(const Graph& g, const CycleWitness& w, std::size_t k);

// Same checks without fixing the length (still requires k >= 3).
[[nodiscard]] bool verify_cycle_witness(const Graph& g, const CycleWitness& w);

// Graph JSON: {"n": <int>, "edges": [[u,v], ...]} with u < v, sorted.
[[nodiscard]] std::string to_json(const Graph& g);
[[nodiscard]] Graph graph_from_json(const std::string& text);
void write_graph_file(const Graph& g, const std::string& path);
[[nodiscard]] Graph read_graph_file(const std::string& path);

}  // namespace loplab
