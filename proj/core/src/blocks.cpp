#include "blocks.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace loplab::detail {

std::vector<Block> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Block> blocks;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t timer = 0;

  auto emit_block = [&](Vertex u, Vertex v) {
    Block b;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e.first < e.second ? e : Edge{e.second, e.first});
      b.vertices.push_back(e.first);
      b.vertices.push_back(e.second);
      if ((e.first == u && e.second == v)) break;
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    std::sort(b.edges.begin(), b.edges.end());
    blocks.push_back(std::move(b));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (disc[w] == kUnseen) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) emit_block(u, v);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return blocks;
}

namespace {

// Block relabeled to 0..B-1 with a local adjacency list.
struct LocalBlock {
  std::vector<Vertex> global;  // local -> global
  std::vector<std::vector<std::uint32_t>> adj;
};

LocalBlock localize(const Block& block) {
  LocalBlock lb;
  lb.global = block.vertices;
  lb.adj.resize(lb.global.size());
  auto local = [&](Vertex v) {
    return static_cast<std::uint32_t>(
        std::lower_bound(lb.global.begin(), lb.global.end(), v) - lb.global.begin());
  };
  for (const auto& [u, v] : block.edges) {
    const auto a = local(u), b = local(v);
    lb.adj[a].push_back(b);
    lb.adj[b].push_back(a);
  }
  for (auto& a : lb.adj) std::sort(a.begin(), a.end());
  return lb;
}

LengthTable single_cycle(const LocalBlock& lb) {
  const std::size_t len = lb.global.size();
  LengthTable table(len + 1);
  CycleWitness w;
  std::uint32_t prev = static_cast<std::uint32_t>(-1), cur = 0;
  for (std::size_t i = 0; i < len; ++i) {
    w.vertices.push_back(lb.global[cur]);
    const std::uint32_t next = lb.adj[cur][0] != prev ? lb.adj[cur][0] : lb.adj[cur][1];
    prev = cur;
    cur = next;
  }
  table[len] = std::move(w);
  return table;
}

LengthTable subset_dp(const LocalBlock& lb) {
  const std::size_t b = lb.global.size();
  LengthTable table(b + 1);
  std::vector<std::uint32_t> adj_mask(b, 0);
  for (std::size_t v = 0; v < b; ++v)
    for (auto w : lb.adj[v]) adj_mask[v] |= 1u << w;

  // ends[mask]: vertices v such that a simple path from the lowest vertex of
  // mask to v visits exactly mask.
  std::vector<std::uint32_t> ends(std::size_t{1} << b, 0);
  for (std::size_t s = 0; s < b; ++s) ends[std::size_t{1} << s] = 1u << s;

  auto reconstruct = [&](std::uint32_t mask, std::uint32_t end) {
    std::vector<Vertex> rev;
    std::uint32_t v = end;
    while (true) {
      rev.push_back(lb.global[v]);
      const std::uint32_t rest = mask & ~(1u << v);
      if (rest == 0) break;
      const std::uint32_t cand = ends[rest] & adj_mask[v];
      v = static_cast<std::uint32_t>(std::countr_zero(cand));
      mask = rest;
    }
    std::reverse(rev.begin(), rev.end());
    return CycleWitness{std::move(rev)};
  };

  for (std::uint32_t mask = 1; mask < (1u << b); ++mask) {
    std::uint32_t e = ends[mask];
    if (e == 0) continue;
    const auto s = static_cast<std::uint32_t>(std::countr_zero(mask));
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const std::uint32_t higher = ~((2u << s) - 1);  // vertices above s
    while (e != 0) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(e));
      e &= e - 1;
      if (size >= 3 && (adj_mask[v] >> s & 1u) && !table[size]) table[size] = reconstruct(mask, v);
      std::uint32_t ext = adj_mask[v] & higher & ~mask;
      while (ext != 0) {
        const auto w = static_cast<std::uint32_t>(std::countr_zero(ext));
        ext &= ext - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return table;
}

struct KernelEdge {
  std::uint32_t a, b;               // kernel vertex ids
  std::vector<std::uint32_t> chain;  // local block vertices from a to b inclusive
};

LengthTable kernel_cycle_space(const LocalBlock& lb) {
  const std::size_t nb = lb.global.size();
  LengthTable table(nb + 1);

  std::vector<std::int32_t> kid(nb, -1);
  std::vector<std::uint32_t> kernel_vertices;
  for (std::uint32_t v = 0; v < nb; ++v) {
    if (lb.adj[v].size() >= 3) {
      kid[v] = static_cast<std::int32_t>(kernel_vertices.size());
      kernel_vertices.push_back(v);
    }
  }
  const std::size_t kn = kernel_vertices.size();

  std::vector<KernelEdge> kedges;
  for (std::uint32_t x : kernel_vertices) {
    for (std::uint32_t y : lb.adj[x]) {
      std::vector<std::uint32_t> chain{x};
      std::uint32_t prev = x, cur = y;
      while (kid[cur] < 0) {
        chain.push_back(cur);
        const std::uint32_t next = lb.adj[cur][0] != prev ? lb.adj[cur][0] : lb.adj[cur][1];
        prev = cur;
        cur = next;
      }
      chain.push_back(cur);
      if (x < cur) {
        kedges.push_back({static_cast<std::uint32_t>(kid[x]), static_cast<std::uint32_t>(kid[cur]),
                          std::move(chain)});
      }
    }
  }
  const std::size_t ke = kedges.size();
  std::vector<std::vector<std::uint32_t>> incident(kn);
  for (std::uint32_t e = 0; e < ke; ++e) {
    incident[kedges[e].a].push_back(e);
    incident[kedges[e].b].push_back(e);
  }

  // BFS spanning tree of the (connected) kernel multigraph.
  std::vector<std::int32_t> parent_edge(kn, -1);
  std::vector<bool> in_tree(ke, false), reached(kn, false);
  std::vector<std::uint32_t> order{0};
  reached[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    const std::uint32_t v = order[h];
    for (std::uint32_t e : incident[v]) {
      const std::uint32_t w = kedges[e].a == v ? kedges[e].b : kedges[e].a;
      if (!reached[w]) {
        reached[w] = true;
        in_tree[e] = true;
        parent_edge[w] = static_cast<std::int32_t>(e);
        order.push_back(w);
      }
    }
  }
  std::vector<std::uint32_t> depth(kn, 0);
  for (std::size_t h = 1; h < order.size(); ++h) {
    const std::uint32_t v = order[h];
    const auto& pe = kedges[static_cast<std::size_t>(parent_edge[v])];
    depth[v] = depth[pe.a == v ? pe.b : pe.a] + 1;
  }
  auto up = [&](std::uint32_t v) {
    const auto& pe = kedges[static_cast<std::size_t>(parent_edge[v])];
    return pe.a == v ? pe.b : pe.a;
  };

  std::vector<std::vector<std::uint32_t>> fundamental;
  for (std::uint32_t e = 0; e < ke; ++e) {
    if (in_tree[e]) continue;
    std::vector<std::uint32_t> cyc{e};
    std::uint32_t a = kedges[e].a, b = kedges[e].b;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cyc.push_back(static_cast<std::uint32_t>(parent_edge[a]));
        a = up(a);
      } else {
        cyc.push_back(static_cast<std::uint32_t>(parent_edge[b]));
        b = up(b);
      }
    }
    fundamental.push_back(std::move(cyc));
  }

  const std::size_t mu = fundamental.size();
  std::vector<bool> selected(ke, false);
  std::vector<std::uint32_t> kdeg(kn, 0);
  std::size_t bad = 0, sel_count = 0, weight = 0;

  auto toggle_vertex = [&](std::uint32_t v, bool add) {
    const bool was_bad = kdeg[v] > 2;
    kdeg[v] = add ? kdeg[v] + 1 : kdeg[v] - 1;
    const bool is_bad = kdeg[v] > 2;
    if (was_bad != is_bad) bad = is_bad ? bad + 1 : bad - 1;
  };

  auto walk_witness = [&](std::uint32_t first) {
    CycleWitness w;
    std::uint32_t e = first;
    std::uint32_t at = kedges[e].a;
    do {
      const auto& ch = kedges[e].chain;
      const bool forward = kedges[e].a == at;
      if (forward) {
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) w.vertices.push_back(lb.global[ch[i]]);
      } else {
        for (std::size_t i = ch.size() - 1; i > 0; --i) w.vertices.push_back(lb.global[ch[i]]);
      }
      at = forward ? kedges[e].b : kedges[e].a;
      for (std::uint32_t f : incident[at]) {
        if (f != e && selected[f]) {
          e = f;
          break;
        }
      }
    } while (e != first);
    return w;
  };

  for (std::uint64_t step = 1; step < (std::uint64_t{1} << mu); ++step) {
    const auto& cyc = fundamental[static_cast<std::size_t>(std::countr_zero(step))];
    for (std::uint32_t e : cyc) {
      const bool add = !selected[e];
      selected[e] = add;
      sel_count = add ? sel_count + 1 : sel_count - 1;
      const std::size_t len = kedges[e].chain.size() - 1;
      weight = add ? weight + len : weight - len;
      toggle_vertex(kedges[e].a, add);
      toggle_vertex(kedges[e].b, add);
    }
    if (bad != 0 || sel_count == 0 || table[weight]) continue;

    std::uint32_t first = 0;
    while (!selected[first]) ++first;
    // Count kernel edges along the closed walk through `first`.
    std::size_t steps = 0;
    std::uint32_t e = first, at = kedges[first].a;
    do {
      at = kedges[e].a == at ? kedges[e].b : kedges[e].a;
      for (std::uint32_t f : incident[at]) {
        if (f != e && selected[f]) {
          e = f;
          break;
        }
      }
      ++steps;
    } while (e != first);
    if (steps == sel_count) table[weight] = walk_witness(first);
  }
  return table;
}

}  // namespace

std::optional<LengthTable> exact_cycle_lengths(const Block& block, const ExactLimits& limits) {
  const std::size_t nv = block.vertices.size();
  const std::size_t ne = block.edges.size();
  if (nv < 3) return LengthTable(nv + 1);
  const LocalBlock lb = localize(block);
  if (ne == nv) return single_cycle(lb);
  const std::size_t mu = ne - nv + 1;
  if (mu <= limits.max_cyclomatic) return kernel_cycle_space(lb);
  if (nv <= limits.max_subset_vertices && nv <= 31) return subset_dp(lb);
  return std::nullopt;
}

}  // namespace loplab::detail
