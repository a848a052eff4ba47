#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "loplab/graph.hpp"
#include "loplab/rng.hpp"

namespace loplab {

// Node positions of a random geometric graph together with its radius.
struct GeometricSample {
  std::vector<std::array<double, 2>> points;  // each coordinate in [-1/2, 1/2]
  double radius = 0.0;
};

struct GeometricGraph {
  Graph graph;
  GeometricSample sample;
};

// G(n, p): every pair present independently with probability p. Uses
// geometric skips over the pair index, so cost is O(n + m).
// Throws std::invalid_argument if p is outside [0, 1] or NaN.
[[nodiscard]] Graph gen_er(std::size_t n, double p, RngStream& rng);

// n points uniform on [-1/2, 1/2]^2 (point i from draws 2i and 2i+1), edge
// iff the Euclidean distance is strictly less than r. Neighbor search is
// bucketed on a grid of cell width >= r.
// Throws std::invalid_argument if r is negative or NaN.
[[nodiscard]] GeometricGraph gen_rg(std::size_t n, double r, RngStream& rng);

// Graph induced by an explicit point set (used by gen_rg; exposed so point
// relabeling can be checked directly).
[[nodiscard]] Graph geometric_graph(const std::vector<std::array<double, 2>>& points, double r);

// {"r": <float>, "points": [[x, y], ...]}
[[nodiscard]] std::string to_json(const GeometricSample& sample);
[[nodiscard]] GeometricSample geometric_sample_from_json(const std::string& text);

}  // namespace loplab
