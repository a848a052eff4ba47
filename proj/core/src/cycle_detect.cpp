#include "loplab/cycle_detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "blocks.hpp"

namespace loplab {

double colorful_probability(std::size_t k) {
  // k!/k^k = prod_{i=1..k} (i/k)
  double q = 1.0;
  for (std::size_t i = 1; i <= k; ++i) q *= static_cast<double>(i) / static_cast<double>(k);
  return q;
}

std::size_t longest_back_edge_span(const DfsForest& forest) {
  std::size_t best = 0;
  for (const auto& e : forest.back_edges) best = std::max(best, e.span);
  return best;
}

namespace {

// Compact subgraph the color-coding search runs on.
struct LocalGraph {
  std::vector<Vertex> global;
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> adj;

  [[nodiscard]] std::size_t size() const { return global.size(); }
  [[nodiscard]] std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adj.data() + offsets[v], adj.data() + offsets[v + 1]};
  }
};

LocalGraph localize(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::int64_t> local(n, -1);
  LocalGraph h;
  for (const auto& [u, v] : edges) {
    for (Vertex x : {u, v}) {
      if (local[x] < 0) {
        local[x] = 0;
        h.global.push_back(x);
      }
    }
  }
  std::sort(h.global.begin(), h.global.end());
  for (std::size_t i = 0; i < h.global.size(); ++i) local[h.global[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<std::uint32_t>> lists(h.global.size());
  for (const auto& [u, v] : edges) {
    lists[static_cast<std::size_t>(local[u])].push_back(static_cast<std::uint32_t>(local[v]));
    lists[static_cast<std::size_t>(local[v])].push_back(static_cast<std::uint32_t>(local[u]));
  }
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    h.adj.insert(h.adj.end(), l.begin(), l.end());
    h.offsets.push_back(h.adj.size());
  }
  return h;
}

// DP tables indexed by (color mask, vertex) holding a bitset of start slots.
class DenseStore {
 public:
  DenseStore(std::size_t masks, std::size_t nv) : nv_(nv), bits_(masks * nv, 0), touched_(masks) {}
  [[nodiscard]] std::uint64_t get(std::size_t mask, std::uint32_t v) const { return bits_[mask * nv_ + v]; }
  void add(std::size_t mask, std::uint32_t v, std::uint64_t b) {
    auto& x = bits_[mask * nv_ + v];
    if (x == 0) touched_[mask].push_back(v);
    x |= b;
  }
  [[nodiscard]] const std::vector<std::uint32_t>& touched(std::size_t mask) const { return touched_[mask]; }
  void clear() {
    for (std::size_t m = 0; m < touched_.size(); ++m) {
      for (auto v : touched_[m]) bits_[m * nv_ + v] = 0;
      touched_[m].clear();
    }
  }

 private:
  std::size_t nv_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> touched_;
};

class SparseStore {
 public:
  SparseStore(std::size_t masks, std::size_t nv) : nv_(nv), touched_(masks) {}
  [[nodiscard]] std::uint64_t get(std::size_t mask, std::uint32_t v) const {
    auto it = bits_.find(mask * nv_ + v);
    return it == bits_.end() ? 0 : it->second;
  }
  void add(std::size_t mask, std::uint32_t v, std::uint64_t b) {
    auto [it, inserted] = bits_.try_emplace(mask * nv_ + v, 0);
    if (inserted) touched_[mask].push_back(v);
    it->second |= b;
  }
  [[nodiscard]] const std::vector<std::uint32_t>& touched(std::size_t mask) const { return touched_[mask]; }
  void clear() {
    bits_.clear();
    for (auto& t : touched_) t.clear();
  }

 private:
  std::size_t nv_;
  std::unordered_map<std::size_t, std::uint64_t> bits_;
  std::vector<std::vector<std::uint32_t>> touched_;
};

// One color-coding round: looks for a cycle whose k vertices carry k
// distinct colors. The cycle is anchored at its unique color-0 vertex and
// grown as a path through colors 1..k-1; mask bit (c-1) marks color c.
template <typename Store>
std::optional<CycleWitness> colorful_cycle(const LocalGraph& h, std::size_t k,
                                           const std::vector<std::uint8_t>& color, Store& store,
                                           std::vector<std::int32_t>& slot) {
  const std::size_t full = (std::size_t{1} << (k - 1)) - 1;
  std::vector<std::uint32_t> starts;
  for (std::uint32_t v = 0; v < h.size(); ++v)
    if (color[v] == 0) starts.push_back(v);

  for (std::size_t base = 0; base < starts.size(); base += 64) {
    const std::size_t chunk = std::min<std::size_t>(64, starts.size() - base);
    store.clear();
    for (std::size_t i = 0; i < chunk; ++i) {
      const std::uint32_t s = starts[base + i];
      slot[s] = static_cast<std::int32_t>(i);
      for (std::uint32_t w : h.neighbors(s)) {
        if (color[w] != 0) store.add(std::size_t{1} << (color[w] - 1), w, std::uint64_t{1} << i);
      }
    }
    for (std::size_t mask = 1; mask < full; ++mask) {
      for (std::uint32_t v : store.touched(mask)) {
        const std::uint64_t b = store.get(mask, v);
        for (std::uint32_t w : h.neighbors(v)) {
          const std::uint8_t c = color[w];
          if (c == 0 || (mask >> (c - 1) & 1u)) continue;
          store.add(mask | (std::size_t{1} << (c - 1)), w, b);
        }
      }
    }

    std::optional<CycleWitness> result;
    for (std::uint32_t v : store.touched(full)) {
      const std::uint64_t b = store.get(full, v);
      for (std::uint32_t s : h.neighbors(v)) {
        if (color[s] != 0 || slot[s] < 0 || !(b >> slot[s] & 1u)) continue;
        // Walk back from v to s through strictly smaller color masks.
        const std::uint64_t sbit = std::uint64_t{1} << slot[s];
        std::vector<Vertex> rev{h.global[v]};
        std::uint32_t cur = v;
        std::size_t m = full;
        while (true) {
          const std::size_t rest = m & ~(std::size_t{1} << (color[cur] - 1));
          if (rest == 0) break;
          for (std::uint32_t w : h.neighbors(cur)) {
            const std::uint8_t c = color[w];
            if (c != 0 && (rest >> (c - 1) & 1u) && (store.get(rest, w) & sbit)) {
              cur = w;
              break;
            }
          }
          m = rest;
          rev.push_back(h.global[cur]);
        }
        rev.push_back(h.global[s]);
        std::reverse(rev.begin(), rev.end());
        result = CycleWitness{std::move(rev)};
        break;
      }
      if (result) break;
    }
    for (std::size_t i = 0; i < chunk; ++i) slot[starts[base + i]] = -1;
    if (result) return result;
  }
  return std::nullopt;
}

template <typename Store>
DetectorVerdict color_coding_search(const LocalGraph& h, std::size_t k, std::uint64_t max_iterations,
                                    RngStream& rng) {
  const std::size_t masks = std::size_t{1} << (k - 1);
  Store store(masks, h.size());
  std::vector<std::uint8_t> color(h.size());
  std::vector<std::int32_t> slot(h.size(), -1);
  for (std::uint64_t it = 0; it < max_iterations; ++it) {
    for (auto& c : color) c = static_cast<std::uint8_t>(rng.below(k));
    if (auto w = colorful_cycle(h, k, color, store, slot)) {
      return {true, std::move(w), it + 1, std::nullopt};
    }
  }
  const double q = colorful_probability(k);
  const double bound = std::exp(static_cast<double>(max_iterations) * std::log1p(-q));
  return {false, std::nullopt, max_iterations, bound};
}

DetectorVerdict color_coding(const LocalGraph& h, std::size_t k, std::uint64_t max_iterations,
                             RngStream& rng) {
  if (k > 32) throw std::invalid_argument("color coding supports cycle lengths up to 32");
  // Dense tables up to 2^24 entries (128 MiB); hash tables beyond.
  const double entries = std::ldexp(static_cast<double>(h.size()), static_cast<int>(k - 1));
  if (entries <= static_cast<double>(1 << 24)) {
    return color_coding_search<DenseStore>(h, k, max_iterations, rng);
  }
  return color_coding_search<SparseStore>(h, k, max_iterations, rng);
}

}  // namespace

struct CycleDetector::State {
  const Graph* graph;
  DetectorOptions options;
  std::optional<std::vector<detail::Block>> blocks;
  // Outer optional: computed yet; inner: exact table or undecidable.
  std::vector<std::optional<std::optional<detail::LengthTable>>> tables;
  std::optional<DfsForest> forest;

  const std::vector<detail::Block>& get_blocks() {
    if (!blocks) {
      blocks = detail::biconnected_blocks(*graph);
      tables.assign(blocks->size(), std::nullopt);
    }
    return *blocks;
  }

  const std::optional<detail::LengthTable>& table(std::size_t i) {
    if (!tables[i]) {
      detail::ExactLimits limits{options.max_exact_cyclomatic, options.max_exact_subset_vertices};
      tables[i] = detail::exact_cycle_lengths((*blocks)[i], limits);
    }
    return *tables[i];
  }

  const DfsForest& get_forest() {
    if (!forest) forest = dfs_forest(*graph);
    return *forest;
  }
};

CycleDetector::CycleDetector(const Graph& g, DetectorOptions options)
    : state_(std::make_unique<State>(State{&g, options, {}, {}, {}})) {}
CycleDetector::~CycleDetector() = default;
CycleDetector::CycleDetector(CycleDetector&&) noexcept = default;
CycleDetector& CycleDetector::operator=(CycleDetector&&) noexcept = default;

DetectorVerdict CycleDetector::has_cycle_eq(std::size_t k, std::uint64_t max_iterations,
                                            RngStream& rng) {
  if (k < 3) throw std::invalid_argument("has_cycle_eq: k must be >= 3");
  if (max_iterations < 1) throw std::invalid_argument("has_cycle_eq: iterations must be >= 1");
  const Graph& g = *state_->graph;
  if (k > g.vertex_count() || k > g.edge_count()) return {};

  if (!state_->options.exact_block_analysis) {
    return color_coding(localize(g.vertex_count(), g.edges()), k, max_iterations, rng);
  }

  const auto& blocks = state_->get_blocks();
  std::vector<Edge> undecided;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.vertices.size() < k || b.edges.size() < k) continue;
    const auto& t = state_->table(i);
    if (!t) {
      undecided.insert(undecided.end(), b.edges.begin(), b.edges.end());
    } else if (k < t->size() && (*t)[k]) {
      return {true, (*t)[k], 0, std::nullopt};
    }
  }
  if (undecided.empty()) return {};
  // Any simple cycle lies inside one block, so searching the union of the
  // undecided blocks finds exactly their cycles.
  return color_coding(localize(g.vertex_count(), undecided), k, max_iterations, rng);
}

DetectorVerdict CycleDetector::has_cycle_geq(std::size_t min_length, std::uint64_t max_iterations,
                                             RngStream& rng) {
  if (min_length < 3) throw std::invalid_argument("has_cycle_geq: K must be >= 3");
  const DfsForest& forest = state_->get_forest();

  const BackEdge* longest = nullptr;
  for (const auto& e : forest.back_edges) {
    if (longest == nullptr || e.span > longest->span) longest = &e;
  }
  if (longest != nullptr && longest->span + 1 >= min_length) {
    return {true, cycle_from_back_edge(forest, *longest), 0, std::nullopt};
  }
  if (min_length == 3) return {};

  DetectorVerdict result;
  bool randomized = false;
  double miss = 1.0;
  for (std::size_t k = min_length; k <= 2 * min_length - 4; ++k) {
    DetectorVerdict v = has_cycle_eq(k, max_iterations, rng);
    result.iterations_used += v.iterations_used;
    if (v.found) {
      result.found = true;
      result.witness = std::move(v.witness);
      return result;
    }
    if (v.miss_probability_bound) {
      randomized = true;
      miss *= *v.miss_probability_bound;
    }
  }
  if (randomized) result.miss_probability_bound = miss;
  return result;
}

DetectorVerdict has_cycle_eq(const Graph& g, std::size_t k, std::uint64_t max_iterations,
                             RngStream& rng, const DetectorOptions& options) {
  CycleDetector det(g, options);
  return det.has_cycle_eq(k, max_iterations, rng);
}

DetectorVerdict has_cycle_geq(const Graph& g, std::size_t min_length, std::uint64_t max_iterations,
                              RngStream& rng, const DetectorOptions& options) {
  CycleDetector det(g, options);
  return det.has_cycle_geq(min_length, max_iterations, rng);
}

}  // namespace loplab
