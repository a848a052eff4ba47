#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "loplab/cycle_detect.hpp"
#include "loplab/graph.hpp"
#include "loplab/rng.hpp"

namespace loplab {

inline constexpr std::size_t kDefaultOracleMaxN = 14;

// ---------------------------------------------------------------------------
// Cycle enumeration (oracle substrate)

// Calls visit(cycle) for every simple cycle of length <= max_length, each
// once up to rotation and reflection. The cycle starts at its smallest
// vertex and its second vertex is smaller than its last. Stops early when
// visit returns false. Exponential in general; callers bound the input.
void for_each_cycle(const Graph& g, std::size_t max_length,
                    const std::function<bool(std::span<const Vertex>)>& visit);

// All simple cycles. Throws std::invalid_argument if n > max_n.
[[nodiscard]] std::vector<CycleWitness> enumerate_cycles(const Graph& g,
                                                         std::size_t max_n = kDefaultOracleMaxN);

// Cycle lengths forbidden for local pooling: 6 and every length >= 8.
[[nodiscard]] constexpr bool is_forbidden_cycle_length(std::size_t k) noexcept {
  return k == 6 || k >= 8;
}

// Exhaustive search for a forbidden-length cycle. Throws if n > max_n.
[[nodiscard]] std::optional<CycleWitness> find_forbidden_cycle(const Graph& g,
                                                               std::size_t max_n = kDefaultOracleMaxN);

// ---------------------------------------------------------------------------
// Forbidden subgraphs

struct CycleViolation {
  CycleWitness cycle;  // length 6 or >= 8
};

// Two cycles of lengths s, t in {5, 7} joined by a k_path-edge path. For
// k_path == 0 the cycles share exactly one vertex and `path` is that single
// vertex; otherwise the cycles are vertex-disjoint and `path` runs from a
// vertex of `first` to a vertex of `second` with k_path + 1 vertices.
struct DumbbellViolation {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t k_path = 0;
  CycleWitness first;
  CycleWitness second;
  std::vector<Vertex> path;
};

using ForbiddenSubgraph = std::variant<CycleViolation, DumbbellViolation>;

[[nodiscard]] bool verify_forbidden_subgraph(const Graph& g, const ForbiddenSubgraph& f);

struct LopVerdict {
  bool satisfies = true;
  std::optional<ForbiddenSubgraph> violation;
};

// Exact LoP test by forbidden-subgraph search: any forbidden-length cycle,
// else any pair of 5/7-cycles that share exactly one vertex or are
// vertex-disjoint and joined by a path avoiding both. Pairs sharing two or
// more vertices are skipped; a contained dumbbell is always realized by a
// pair of its own two cycles.
// Throws std::invalid_argument if n > max_n (max_n <= 64).
[[nodiscard]] LopVerdict lop_oracle(const Graph& g, std::size_t max_n = kDefaultOracleMaxN);

// ---------------------------------------------------------------------------
// Bound checkers

// Sufficient condition: the graph has no cycles at all.
[[nodiscard]] bool plopl_holds(const Graph& g);

// Necessary-condition check: a cycle of length >= 8 (tried first, its DFS
// phase is deterministic) or of length exactly 6. found == true refutes LoP.
[[nodiscard]] DetectorVerdict plopu_violation(const Graph& g, std::uint64_t max_iterations,
                                              RngStream& rng, const DetectorOptions& options = {});

// ---------------------------------------------------------------------------
// LoP factor

enum class SigmaKind { ExactlyOne, AtMostTwoThirds, UnknownInHalfOne };

struct SigmaClassification {
  SigmaKind kind = SigmaKind::UnknownInHalfOne;
  std::optional<CycleWitness> witness;   // the C_6k for AtMostTwoThirds
  std::optional<bool> oracle_satisfies;  // set when the exact oracle ran

  [[nodiscard]] double lower() const noexcept { return kind == SigmaKind::ExactlyOne ? 1.0 : 0.5; }
  [[nodiscard]] double upper() const noexcept {
    return kind == SigmaKind::AtMostTwoThirds ? 2.0 / 3.0 : 1.0;
  }
};

[[nodiscard]] const char* to_string(SigmaKind kind) noexcept;

// Longest C_6j tried by classify_sigma; color coding memory grows as 2^k.
inline constexpr std::size_t kMaxSigmaCycleSearch = 30;

// sigma == 1 when the oracle (n <= 14) proves LoP; sigma <= 2/3 when a
// cycle of length 6j (6j <= min(n, 30)) is found; otherwise only
// 1/2 <= sigma <= 1 is known.
[[nodiscard]] SigmaClassification classify_sigma(const Graph& g, std::uint64_t max_iterations,
                                                 RngStream& rng,
                                                 std::size_t oracle_max_n = kDefaultOracleMaxN);

}  // namespace loplab
