#include "loplab/lop.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace loplab {

namespace {

using Mask = std::uint64_t;

Mask vertex_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= Mask{1} << v;
  return m;
}

bool is_dumbbell_cycle_length(std::size_t k) { return k == 5 || k == 7; }

// Shortest path from cycle `a` to cycle `b` whose internal vertices avoid
// both. Returned inclusive of its endpoints; empty if none exists.
std::vector<Vertex> connecting_path(const Graph& g, Mask a, Mask b) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> parent(n, -2);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (a >> v & 1u) {
      parent[v] = -1;
      queue.push_back(v);
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex v = queue[h];
    for (Vertex w : g.neighbors(v)) {
      if (b >> w & 1u) {
        std::vector<Vertex> path{w, v};
        for (std::int64_t p = parent[v]; p >= 0; p = parent[static_cast<std::size_t>(p)]) {
          path.push_back(static_cast<Vertex>(p));
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if ((a >> w & 1u) || parent[w] != -2) continue;
      parent[w] = static_cast<std::int64_t>(v);
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

LopVerdict lop_oracle(const Graph& g, std::size_t max_n) {
  if (max_n > 64) throw std::invalid_argument("lop_oracle: max_n must be <= 64");
  if (g.vertex_count() > max_n) {
    throw std::invalid_argument("lop_oracle refused: n=" + std::to_string(g.vertex_count()) +
                                " exceeds max_n=" + std::to_string(max_n));
  }

  struct Candidate {
    CycleWitness cycle;
    Mask mask;
  };
  std::vector<Candidate> candidates;
  std::optional<CycleWitness> forbidden;
  for_each_cycle(g, g.vertex_count(), [&](std::span<const Vertex> c) {
    if (is_forbidden_cycle_length(c.size())) {
      forbidden = CycleWitness{{c.begin(), c.end()}};
      return false;
    }
    if (is_dumbbell_cycle_length(c.size())) {
      candidates.push_back({CycleWitness{{c.begin(), c.end()}}, vertex_mask(c)});
    }
    return true;
  });
  if (forbidden) return {false, CycleViolation{std::move(*forbidden)}};

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      const Mask shared = a.mask & b.mask;
      const int common = std::popcount(shared);
      if (common >= 2) continue;
      DumbbellViolation d{a.cycle.length(), b.cycle.length(), 0, a.cycle, b.cycle, {}};
      if (common == 1) {
        d.path = {static_cast<Vertex>(std::countr_zero(shared))};
        return {false, std::move(d)};
      }
      auto path = connecting_path(g, a.mask, b.mask);
      if (!path.empty()) {
        d.k_path = path.size() - 1;
        d.path = std::move(path);
        return {false, std::move(d)};
      }
    }
  }
  return {true, std::nullopt};
}

bool verify_forbidden_subgraph(const Graph& g, const ForbiddenSubgraph& f) {
  if (const auto* c = std::get_if<CycleViolation>(&f)) {
    return is_forbidden_cycle_length(c->cycle.length()) && verify_cycle_witness(g, c->cycle);
  }
  const auto& d = std::get<DumbbellViolation>(f);
  if (!is_dumbbell_cycle_length(d.s) || !is_dumbbell_cycle_length(d.t)) return false;
  if (!verify_cycle_witness(g, d.first, d.s) || !verify_cycle_witness(g, d.second, d.t)) return false;
  if (d.path.size() != d.k_path + 1) return false;

  auto contains = [](const CycleWitness& w, Vertex v) {
    return std::find(w.vertices.begin(), w.vertices.end(), v) != w.vertices.end();
  };
  std::size_t shared = 0;
  for (Vertex v : d.first.vertices) shared += contains(d.second, v) ? 1 : 0;

  if (d.k_path == 0) return shared == 1 && contains(d.first, d.path[0]) && contains(d.second, d.path[0]);
  if (shared != 0) return false;
  if (!contains(d.first, d.path.front()) || !contains(d.second, d.path.back())) return false;
  std::vector<Vertex> sorted(d.path);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 1; i + 1 < d.path.size(); ++i) {
    if (contains(d.first, d.path[i]) || contains(d.second, d.path[i])) return false;
  }
  for (std::size_t i = 0; i + 1 < d.path.size(); ++i) {
    if (!g.has_edge(d.path[i], d.path[i + 1])) return false;
  }
  return true;
}

bool plopl_holds(const Graph& g) { return is_forest(g); }

DetectorVerdict plopu_violation(const Graph& g, std::uint64_t max_iterations, RngStream& rng,
                                const DetectorOptions& options) {
  if (max_iterations < 1) throw std::invalid_argument("plopu_violation: iterations must be >= 1");
  CycleDetector det(g, options);
  DetectorVerdict longer = det.has_cycle_geq(8, max_iterations, rng);
  if (longer.found) return longer;
  DetectorVerdict six = det.has_cycle_eq(6, max_iterations, rng);
  six.iterations_used += longer.iterations_used;
  if (!six.found) {
    if (longer.miss_probability_bound || six.miss_probability_bound) {
      six.miss_probability_bound =
          longer.miss_probability_bound.value_or(1.0) * six.miss_probability_bound.value_or(1.0);
    }
  }
  return six;
}

const char* to_string(SigmaKind kind) noexcept {
  switch (kind) {
    case SigmaKind::ExactlyOne: return "exactly_one";
    case SigmaKind::AtMostTwoThirds: return "at_most_two_thirds";
    case SigmaKind::UnknownInHalfOne: return "unknown_in_half_one";
  }
  return "unknown";
}

SigmaClassification classify_sigma(const Graph& g, std::uint64_t max_iterations, RngStream& rng,
                                   std::size_t oracle_max_n) {
  SigmaClassification out;
  if (g.vertex_count() <= oracle_max_n) {
    const bool satisfies = lop_oracle(g, oracle_max_n).satisfies;
    out.oracle_satisfies = satisfies;
    if (satisfies) {
      out.kind = SigmaKind::ExactlyOne;
      return out;
    }
  }
  CycleDetector det(g);
  const std::size_t longest = std::min<std::size_t>(g.vertex_count(), kMaxSigmaCycleSearch);
  for (std::size_t k = 6; k <= longest; k += 6) {
    auto v = det.has_cycle_eq(k, max_iterations, rng);
    if (v.found) {
      out.kind = SigmaKind::AtMostTwoThirds;
      out.witness = std::move(v.witness);
      return out;
    }
  }
  out.kind = SigmaKind::UnknownInHalfOne;
  return out;
}

}  // namespace loplab
