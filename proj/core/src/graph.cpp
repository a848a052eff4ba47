#include "loplab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loplab {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") with n=" + std::to_string(n_));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
  }

  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % k));
  return Graph(k, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_consistent() const {
  std::vector<Edge> from_adj;
  for (Vertex u = 0; u < n_; ++u) {
    auto nb = neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    for (Vertex v : nb) {
      if (v == u || v >= n_) return false;
      if (u < v) from_adj.emplace_back(u, v);
      else if (!has_edge(v, u)) return false;
    }
  }
  return from_adj == edges_;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    cells.push_back(queue);
  }
  // Cells were discovered in order of their smallest label, so a stable sort
  // by size keeps the tie-break.
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return cells;
}

namespace {

// Sizes of all components, in discovery order.
std::vector<std::size_t> component_sizes(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    stack.assign(1, s);
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

std::size_t component_count(const Graph& g) { return component_sizes(g).size(); }

std::size_t largest_component_size(const Graph& g) {
  auto sizes = component_sizes(g);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

DfsForest dfs_forest(const Graph& g, std::span<const Vertex> root_order) {
  const std::size_t n = g.vertex_count();
  if (root_order.size() != n) throw std::invalid_argument("root_order must list every vertex");
  {
    std::vector<bool> listed(n, false);
    for (Vertex r : root_order) {
      if (r >= n || listed[r]) throw std::invalid_argument("root_order is not a permutation");
      listed[r] = true;
    }
  }

  DfsForest forest;
  forest.parent.assign(n, std::nullopt);
  forest.depth.assign(n, 0);

  std::vector<bool> visited(n, false);
  std::vector<bool> on_stack(n, false);
  // (vertex, index of the next neighbor to examine)
  std::vector<std::pair<Vertex, std::size_t>> stack;

  for (Vertex root : root_order) {
    if (visited[root]) continue;
    visited[root] = true;
    on_stack[root] = true;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto nb = g.neighbors(v);
      if (next == nb.size()) {
        on_stack[v] = false;
        stack.pop_back();
        continue;
      }
      Vertex w = nb[next++];
      if (!visited[w]) {
        visited[w] = true;
        on_stack[w] = true;
        forest.parent[w] = v;
        forest.depth[w] = forest.depth[v] + 1;
        stack.emplace_back(w, 0);
      } else if (on_stack[w] && forest.parent[v] != w) {
        forest.back_edges.push_back({v, w, forest.depth[v] - forest.depth[w]});
      }
    }
  }
  return forest;
}

DfsForest dfs_forest(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  return dfs_forest(g, order);
}

bool is_forest(const Graph& g) { return g.edge_count() + component_count(g) == g.vertex_count(); }

CycleWitness cycle_from_back_edge(const DfsForest& forest, const BackEdge& edge) {
  CycleWitness w;
  w.vertices.reserve(edge.span + 1);
  Vertex v = edge.descendant;
  w.vertices.push_back(v);
  while (v != edge.ancestor) {
    v = forest.parent[v].value();
    w.vertices.push_back(v);
  }
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

bool verify_cycle_witness(const Graph& g, const CycleWitness& w) {
  const auto& vs = w.vertices;
  const std::size_t k = vs.size();
  if (k < 3) return false;
  std::vector<Vertex> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(vs[i], vs[(i + 1) % k])) return false;
  }
  return true;
}

bool verify_cycle_witness(const Graph& g, const CycleWitness& w, std::size_t k) {
  return w.length() == k && verify_cycle_witness(g, w);
}

}  // namespace loplab
