#include "zf/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "zf/structure.hpp"

namespace zf {

Graph canonical_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph canonical_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph canonical_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph canonical_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: sides >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

Graph canonical_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid: sides >= 1");
  std::vector<std::pair<int, int>> e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree: n >= 1 required");
  Xorshift64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  return Graph(n, e);
}

Graph random_er(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("er: n >= 1 required");
  Xorshift64 rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) e.emplace_back(i, j);
  return Graph(n, e);
}

namespace {

Graph block_cycle_builder(int blocks, int max_cycle, std::uint64_t seed, int cycle_quota) {
  if (blocks < 1) throw std::invalid_argument("block_cycle: blocks >= 1 required");
  Xorshift64 rng(seed);
  auto next_block = [&](bool allow_cycle) -> Graph {
    const bool cycle = allow_cycle && max_cycle >= 3 && rng.chance(0.5);
    if (cycle) return canonical_cycle(rng.range(3, max_cycle));
    return canonical_path(2);
  };
  int cycles_left = cycle_quota;
  Graph g;
  if (cycle_quota > 0) {  // pin the single cycle first so it always appears
    g = canonical_cycle(max_cycle >= 3 ? rng.range(3, max_cycle) : 3);
    --cycles_left;
  } else {
    g = next_block(cycle_quota < 0);
  }
  for (int b = 1; b < blocks; ++b) {
    Graph blk = cycle_quota < 0 ? next_block(true)
                                : (cycles_left > 0 ? canonical_cycle(rng.range(3, std::max(3, max_cycle)))
                                                   : canonical_path(2));
    if (cycle_quota >= 0 && cycles_left > 0) --cycles_left;
    const int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
    g = vertex_sum(g, blk, at, 0).graph;
  }
  return g;
}

}  // namespace

Graph random_block_cycle(int blocks, int max_cycle, std::uint64_t seed) {
  return block_cycle_builder(blocks, max_cycle, seed, -1);
}

Graph random_unicyclic(int blocks, int max_cycle, std::uint64_t seed) {
  return block_cycle_builder(blocks, max_cycle, seed, 1);
}

namespace {

void triangulate(Xorshift64& rng, int lo, int hi, std::vector<std::pair<int, int>>& chords) {
  if (hi - lo <= 1) return;
  const int apex = rng.range(lo + 1, hi - 1);
  if (apex > lo + 1) chords.emplace_back(lo, apex);
  if (hi > apex + 1) chords.emplace_back(apex, hi);
  triangulate(rng, lo, apex, chords);
  triangulate(rng, apex, hi, chords);
}

}  // namespace

Graph random_outerplanar(int n, double inner_keep, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("outerplanar: n >= 3 required");
  Xorshift64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<std::pair<int, int>> chords;
  triangulate(rng, 0, n - 1, chords);
  for (auto c : chords)
    if (rng.chance(inner_keep)) edges.push_back(c);
  return Graph(n, edges);
}

namespace {

Graph k_tree_builder(int n, int k, bool cluster_only, std::uint64_t seed,
                     const std::vector<VertexSet>* forced_sets) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("k_tree: n >= k+1 required");
  Xorshift64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
  // All k-cliques of the graph built so far (k-subsets of the base, then the
  // k-subsets through each added vertex).
  std::vector<VertexSet> cliques;
  const VertexSet base = VertexSet::full(k + 1);
  base.for_each([&](int skip) { cliques.push_back(base - VertexSet::single(skip)); });
  for (int v = k + 1; v < n; ++v) {
    VertexSet attach;
    if (forced_sets) {
      attach = (*forced_sets)[static_cast<std::size_t>(v - (k + 1)) % forced_sets->size()];
    } else if (cluster_only) {
      attach = base - VertexSet::single(static_cast<int>(rng.below(static_cast<std::uint64_t>(k + 1))));
    } else {
      attach = cliques[rng.below(cliques.size())];
    }
    attach.for_each([&](int u) { edges.emplace_back(v, u); });
    attach.for_each([&](int skip) {
      cliques.push_back((attach - VertexSet::single(skip)) | VertexSet::single(v));
    });
  }
  return Graph(n, edges);
}

}  // namespace

Graph random_k_tree(int n, int k, bool cluster_only, std::uint64_t seed) {
  return k_tree_builder(n, k, cluster_only, seed, nullptr);
}

Graph random_k_cluster(int n, int k, int s_size, std::uint64_t seed) {
  if (s_size < 1 || s_size > k + 1 || n - (k + 1) < s_size)
    throw std::invalid_argument("k_cluster: need 1 <= s_size <= k+1 and enough vertices");
  Xorshift64 rng(seed);
  std::vector<int> skip(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) skip[static_cast<std::size_t>(i)] = i;
  for (int i = k; i > 0; --i)
    std::swap(skip[static_cast<std::size_t>(i)],
              skip[rng.below(static_cast<std::uint64_t>(i + 1))]);
  std::vector<VertexSet> sets;
  for (int i = 0; i < s_size; ++i)
    sets.push_back(VertexSet::full(k + 1) - VertexSet::single(skip[static_cast<std::size_t>(i)]));
  return k_tree_builder(n, k, true, seed + 1, &sets);
}

Graph random_chordal(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("chordal: n >= 3 required");
  Xorshift64 rng(seed);
  const int k = n >= 4 && rng.chance(0.5) ? 3 : 2;
  Graph g = random_k_tree(n, k, false, rng.next());
  // Thin out attachment edges of the later vertices, keeping only deletions
  // that leave the graph chordal and connected.
  auto edges = g.edges();
  for (int v = n - 1; v > k; --v) {
    VertexSet nbrs = g.neighbors(v);
    const int drop = rng.range(0, k - 1);
    for (int d = 0; d < drop; ++d) {
      nbrs = g.neighbors(v);
      if (nbrs.count() <= 1) break;
      auto nv = nbrs.to_vector();
      const int u = nv[rng.below(nv.size())];
      std::vector<std::pair<int, int>> kept;
      for (auto e : g.edges())
        if (e != std::make_pair(std::min(u, v), std::max(u, v))) kept.push_back(e);
      Graph candidate(n, kept);
      if (is_connected(candidate) && chordal_peo(candidate)) g = candidate;
    }
  }
  return g;
}

Graph random_series_parallel_paths(const std::vector<int>& lengths, std::uint64_t seed) {
  if (lengths.size() < 2) throw std::invalid_argument("series: at least two paths required");
  for (int l : lengths)
    if (l < 1) throw std::invalid_argument("series: lengths >= 1 required");
  Xorshift64 rng(seed);
  std::vector<int> offset(lengths.size() + 1, 0);
  for (std::size_t i = 0; i < lengths.size(); ++i)
    offset[i + 1] = offset[i] + lengths[static_cast<std::size_t>(i)];
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    for (int j = 0; j + 1 < lengths[i]; ++j)
      edges.emplace_back(offset[i] + j, offset[i] + j + 1);

  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    const int la = lengths[i], lb = lengths[i + 1];
    const int a0 = offset[i], b0 = offset[i + 1];
    std::vector<std::pair<int, int>> cross;
    int x = 0, y = 0;
    for (;;) {
      if (rng.chance(0.6)) cross.emplace_back(x, y);
      if (x == la - 1 && y == lb - 1) break;
      if (x == la - 1) ++y;
      else if (y == lb - 1) ++x;
      else if (rng.chance(0.5)) ++x;
      else ++y;
    }
    if (cross.empty()) cross.emplace_back(0, 0);
    std::sort(cross.begin(), cross.end());
    cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
    auto add_pair_edges = [&]() {
      std::vector<std::pair<int, int>> pe = edges;  // rebuild pair graph check set
      for (auto [cx, cy] : cross) pe.emplace_back(a0 + cx, b0 + cy);
      return pe;
    };
    // The pair must not induce a path; widen the staircase if it does.
    {
      std::vector<std::pair<int, int>> pe = add_pair_edges();
      Graph probe(offset.back(), pe);
      VertexSet pair_set;
      for (int v = a0; v < a0 + la; ++v) pair_set.add(v);
      for (int v = b0; v < b0 + lb; ++v) pair_set.add(v);
      if (induces_path(probe, pair_set)) {
        std::pair<int, int> lo{0, 0}, hi{la - 1, lb - 1};
        if (std::find(cross.begin(), cross.end(), lo) == cross.end())
          cross.push_back(lo);
        else if (std::find(cross.begin(), cross.end(), hi) == cross.end())
          cross.push_back(hi);
        else
          throw std::invalid_argument("series: lengths admit only a path-shaped pair");
        pe = add_pair_edges();
        Graph reprobe(offset.back(), pe);
        if (induces_path(reprobe, pair_set))
          throw std::invalid_argument("series: lengths admit only a path-shaped pair");
      }
    }
    for (auto [cx, cy] : cross) edges.emplace_back(a0 + cx, b0 + cy);
  }
  return Graph(offset.back(), edges);
}

Graph generate(const GenSpec& spec) {
  auto p = [&](const std::string& key, double fallback = -1) {
    auto it = spec.params.find(key);
    if (it != spec.params.end()) return it->second;
    if (fallback < 0) throw std::invalid_argument("generate: missing param " + key);
    return fallback;
  };
  auto pi = [&](const std::string& key) { return static_cast<int>(p(key)); };
  const std::string& f = spec.family;
  if (f == "path") return canonical_path(pi("n"));
  if (f == "cycle") return canonical_cycle(pi("n"));
  if (f == "complete") return canonical_complete(pi("n"));
  if (f == "complete_bipartite") return canonical_complete_bipartite(pi("m"), pi("n"));
  if (f == "grid") return canonical_grid(pi("rows"), pi("cols"));
  if (f == "tree") return random_tree(pi("n"), spec.seed);
  if (f == "er") return random_er(pi("n"), p("p"), spec.seed);
  if (f == "block_cycle") return random_block_cycle(pi("blocks"), pi("max_cycle"), spec.seed);
  if (f == "unicyclic") return random_unicyclic(pi("blocks"), pi("max_cycle"), spec.seed);
  if (f == "outerplanar") return random_outerplanar(pi("n"), p("inner_keep"), spec.seed);
  if (f == "k_tree")
    return random_k_tree(pi("n"), pi("k"), p("cluster_only", 0) != 0, spec.seed);
  if (f == "k_cluster") return random_k_cluster(pi("n"), pi("k"), pi("s_size"), spec.seed);
  if (f == "chordal") return random_chordal(pi("n"), spec.seed);
  if (f == "series") {
    std::vector<int> lengths;
    for (int i = 0;; ++i) {
      auto it = spec.params.find("len" + std::to_string(i));
      if (it == spec.params.end()) break;
      lengths.push_back(static_cast<int>(it->second));
    }
    return random_series_parallel_paths(lengths, spec.seed);
  }
  throw std::invalid_argument("generate: unknown family " + f);
}

}  // namespace zf
