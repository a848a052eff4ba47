#include "loplab/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace loplab {

Graph gen_er(std::size_t n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gen_er: p must lie in [0, 1], got " + std::to_string(p));
  }
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph(n, std::move(edges));
  if (p == 1.0) return Graph::complete(n);

  // Batagelj & Brandes skip sampling over pairs (w, v), w < v, in row-major
  // order of v.
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  const double log_q = std::log1p(-p);
  long long v = 1;
  long long w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double skip = std::floor(std::log(rng.uniform_open_zero()) / log_q);
    // Skips larger than the remaining pair count terminate the loop anyway.
    w += 1 + static_cast<long long>(std::min(skip, 4.0e18));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph(n, std::move(edges));
}

Graph geometric_graph(const std::vector<std::array<double, 2>>& points, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("geometric graph radius must be >= 0");
  const std::size_t n = points.size();
  std::vector<Edge> edges;
  if (n < 2 || r == 0.0) return Graph(n, std::move(edges));

  // Grid with cells at least r wide; neighbors live in the 3x3 block around
  // a point's cell. The side count is capped so tiny radii do not allocate
  // more cells than points warrant.
  const auto max_side = static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) * 2 + 1;
  const std::size_t side =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(1.0 / r)), 1, max_side);
  const double cell = 1.0 / static_cast<double>(side);
  auto cell_of = [&](double coord) {
    auto c = static_cast<std::size_t>(std::floor((coord + 0.5) / cell));
    return std::min(c, side - 1);
  };

  std::vector<std::size_t> cell_start(side * side + 1, 0);
  std::vector<std::size_t> cell_id(n);
  for (std::size_t i = 0; i < n; ++i) {
    cell_id[i] = cell_of(points[i][1]) * side + cell_of(points[i][0]);
    ++cell_start[cell_id[i] + 1];
  }
  for (std::size_t c = 0; c < side * side; ++c) cell_start[c + 1] += cell_start[c];
  std::vector<Vertex> members(n);
  {
    std::vector<std::size_t> cursor(cell_start.begin(), cell_start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) members[cursor[cell_id[i]]++] = static_cast<Vertex>(i);
  }

  const double r2 = r * r;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cy = cell_id[i] / side;
    const std::size_t cx = cell_id[i] % side;
    for (std::size_t y = (cy == 0 ? 0 : cy - 1); y <= std::min(cy + 1, side - 1); ++y) {
      for (std::size_t x = (cx == 0 ? 0 : cx - 1); x <= std::min(cx + 1, side - 1); ++x) {
        const std::size_t c = y * side + x;
        for (std::size_t m = cell_start[c]; m < cell_start[c + 1]; ++m) {
          const Vertex j = members[m];
          if (j <= i) continue;
          const double dx = points[i][0] - points[j][0];
          const double dy = points[i][1] - points[j][1];
          if (dx * dx + dy * dy < r2) edges.emplace_back(static_cast<Vertex>(i), j);
        }
      }
    }
  }
  return Graph(n, std::move(edges));
}

GeometricGraph gen_rg(std::size_t n, double r, RngStream& rng) {
  if (!(r >= 0.0)) {
    throw std::invalid_argument("gen_rg: r must be >= 0, got " + std::to_string(r));
  }
  GeometricSample sample;
  sample.radius = r;
  sample.points.resize(n);
  for (auto& pt : sample.points) {
    pt[0] = rng.uniform() - 0.5;
    pt[1] = rng.uniform() - 0.5;
  }
  Graph g = geometric_graph(sample.points, r);
  return {std::move(g), std::move(sample)};
}

std::string to_json(const GeometricSample& sample) {
  nlohmann::ordered_json doc;
  doc["r"] = sample.radius;
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : sample.points) pts.push_back({p[0], p[1]});
  doc["points"] = std::move(pts);
  return doc.dump() + "\n";
}

GeometricSample geometric_sample_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  GeometricSample s;
  s.radius = doc.at("r").get<double>();
  for (const auto& p : doc.at("points")) s.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return s;
}

}  // namespace loplab
