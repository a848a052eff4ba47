#include <stdexcept>
#include <string>

#include "loplab/lop.hpp"

namespace loplab {

void for_each_cycle(const Graph& g, std::size_t max_length,
                    const std::function<bool(std::span<const Vertex>)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<Vertex> path;
  bool stop = false;
  Vertex start = 0;

  auto extend = [&](auto& self, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (stop) return;
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back() && !visit(path)) stop = true;
        continue;
      }
      if (w < start || on_path[w] || path.size() >= max_length) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (start = 0; start < n && !stop; ++start) {
    path.assign(1, start);
    on_path[start] = true;
    extend(extend, start);
    on_path[start] = false;
  }
}

namespace {

void check_oracle_size(const Graph& g, std::size_t max_n) {
  if (g.vertex_count() > max_n) {
    throw std::invalid_argument("exhaustive cycle search refused: n=" + std::to_string(g.vertex_count()) +
                                " exceeds max_n=" + std::to_string(max_n));
  }
}

}  // namespace

std::vector<CycleWitness> enumerate_cycles(const Graph& g, std::size_t max_n) {
  check_oracle_size(g, max_n);
  std::vector<CycleWitness> out;
  for_each_cycle(g, g.vertex_count(), [&](std::span<const Vertex> c) {
    out.push_back(CycleWitness{{c.begin(), c.end()}});
    return true;
  });
  return out;
}

std::optional<CycleWitness> find_forbidden_cycle(const Graph& g, std::size_t max_n) {
  check_oracle_size(g, max_n);
  std::optional<CycleWitness> found;
  for_each_cycle(g, g.vertex_count(), [&](std::span<const Vertex> c) {
    if (!is_forbidden_cycle_length(c.size())) return true;
    found = CycleWitness{{c.begin(), c.end()}};
    return false;
  });
  return found;
}

}  // namespace loplab
