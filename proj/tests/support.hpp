#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "loplab/graph.hpp"

namespace testsupport {

using loplab::Edge;
using loplab::Graph;
using loplab::Vertex;

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Graph whose edge set is the subset of all_pairs(n) selected by mask.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) edges.push_back(pairs[i]);
  return Graph(n, std::move(edges));
}

// Plain recursion over simple paths from each start vertex through larger
// labels, written without reference to the library's enumerator.
inline void walk(const Graph& g, Vertex start, Vertex v, std::vector<bool>& used, std::size_t len,
                 std::vector<std::size_t>& counts) {
  for (Vertex w : g.neighbors(v)) {
    if (w == start && len >= 3) ++counts[len];
    if (w <= start || used[w]) continue;
    used[w] = true;
    walk(g, start, w, used, len + 1, counts);
    used[w] = false;
  }
}

// counts[k] = number of k-cycles (each cycle counted once).
inline std::vector<std::size_t> cycle_counts(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> counts(n + 2, 0);
  std::vector<bool> used(n, false);
  for (Vertex s = 0; s < n; ++s) {
    used[s] = true;
    walk(g, s, s, used, 1, counts);
    used[s] = false;
  }
  for (auto& c : counts) c /= 2;  // each cycle walked in both directions
  return counts;
}

inline std::set<std::size_t> cycle_lengths(const Graph& g) {
  std::set<std::size_t> out;
  const auto counts = cycle_counts(g);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] > 0) out.insert(k);
  return out;
}

}  // namespace testsupport
