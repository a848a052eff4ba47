#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "loplab/graph.hpp"
#include "loplab/rng.hpp"

namespace loplab {

// Outcome of a cycle search with one-sided error: a positive verdict always
// carries a witness that passes verify_cycle_witness.
struct DetectorVerdict {
  bool found = false;
  std::optional<CycleWitness> witness;
  std::uint64_t iterations_used = 0;
  // Present only for negative verdicts that relied on the randomized search:
  // the probability that an existing target cycle was missed, bounded by
  // (1 - q_k)^iterations_used per randomized length k.
  std::optional<double> miss_probability_bound;
};

struct DetectorOptions {
  // Decide blocks exactly when cheap: blocks smaller than k, blocks that are
  // a single cycle, blocks with small cyclomatic number (cycle-space
  // enumeration) and blocks with few vertices (subset DP). Only the
  // remaining blocks go through color coding. Disabling it runs the plain
  // color-coding detector on the whole graph.
  bool exact_block_analysis = true;
  std::size_t max_exact_cyclomatic = 20;
  std::size_t max_exact_subset_vertices = 12;
};

// Per-iteration probability that a fixed k-cycle is colorful under a uniform
// k-coloring: k!/k^k.
[[nodiscard]] double colorful_probability(std::size_t k);

// Holds lazily computed block data for one graph so repeated length queries
// (as in the long-cycle fallback) share it. The graph must outlive the
// detector.
class CycleDetector {
 public:
  explicit CycleDetector(const Graph& g, DetectorOptions options = {});
  ~CycleDetector();
  CycleDetector(CycleDetector&&) noexcept;
  CycleDetector& operator=(CycleDetector&&) noexcept;

  // Is there a simple cycle of length exactly k? Color coding: each of at
  // most max_iterations rounds colors vertices uniformly from k colors and
  // looks for a colorful k-cycle by DP over (vertex, color set) states.
  DetectorVerdict has_cycle_eq(std::size_t k, std::uint64_t max_iterations, RngStream& rng);

  // Is there a simple cycle of length >= min_length? For min_length == 3 an
  // exact DFS test. Otherwise a DFS back edge of span >= min_length - 1 is
  // a deterministic witness; failing that, lengths min_length..2*min_length-4
  // are tried with has_cycle_eq.
  DetectorVerdict has_cycle_geq(std::size_t min_length, std::uint64_t max_iterations,
                                RngStream& rng);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

[[nodiscard]] DetectorVerdict has_cycle_eq(const Graph& g, std::size_t k,
                                           std::uint64_t max_iterations, RngStream& rng,
                                           const DetectorOptions& options = {});

[[nodiscard]] DetectorVerdict has_cycle_geq(const Graph& g, std::size_t min_length,
                                            std::uint64_t max_iterations, RngStream& rng,
                                            const DetectorOptions& options = {});

[[nodiscard]] std::size_t longest_back_edge_span(const DfsForest& forest);

}  // namespace loplab
