#pragma once

// Internal: biconnected blocks and exact per-block cycle-length tables.

#include <cstddef>
#include <optional>
#include <vector>

#include "loplab/graph.hpp"

namespace loplab::detail {

struct Block {
  std::vector<Vertex> vertices;  // sorted ascending, global labels
  std::vector<Edge> edges;       // global labels, u < v
};

// Edge-partition of g into biconnected blocks (bridges are two-vertex
// blocks). Blocks are ordered by their smallest edge.
std::vector<Block> biconnected_blocks(const Graph& g);

// Exact cycle inventory of one block: entry L holds a witness for some
// simple cycle of length L, or nullopt if the block has none.
using LengthTable = std::vector<std::optional<CycleWitness>>;

struct ExactLimits {
  std::size_t max_cyclomatic = 20;     // cycle-space enumeration on the kernel
  std::size_t max_subset_vertices = 12;  // subset DP over all vertex sets
};

// Returns nullopt when the block exceeds both exact routes.
std::optional<LengthTable> exact_cycle_lengths(const Block& block, const ExactLimits& limits = {});

}  // namespace loplab::detail
