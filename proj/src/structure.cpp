#include "zf/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace zf {

// --- blocks -------------------------------------------------------------------

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low;
  int counter = 0;
  std::vector<std::pair<int, int>> estack;
  std::vector<VertexSet> blocks;
  VertexSet cuts;

  explicit BlockFinder(const Graph& g_) : g(g_) {
    num.assign(static_cast<std::size_t>(g.n()), 0);
    low.assign(static_cast<std::size_t>(g.n()), 0);
  }

  void dfs(int v, int parent) {
    num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++counter;
    int children = 0;
    g.neighbors(v).for_each([&](int w) {
      if (w == parent) return;
      if (num[static_cast<std::size_t>(w)] == 0) {
        estack.emplace_back(v, w);
        ++children;
        dfs(w, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= num[static_cast<std::size_t>(v)]) {
          if (parent != -1 || children > 1) cuts.add(v);
          VertexSet blk;
          for (;;) {
            auto e = estack.back();
            estack.pop_back();
            blk.add(e.first);
            blk.add(e.second);
            if (e == std::make_pair(v, w)) break;
          }
          blocks.push_back(blk);
        }
      } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(v)]) {
        estack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], num[static_cast<std::size_t>(w)]);
      }
    });
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockFinder finder(g);
  for (int v = 0; v < g.n(); ++v) {
    if (finder.num[static_cast<std::size_t>(v)] != 0) continue;
    if (g.degree(v) == 0) {
      finder.num[static_cast<std::size_t>(v)] = ++finder.counter;
      finder.blocks.push_back(VertexSet::single(v));  // isolated vertex
      continue;
    }
    finder.dfs(v, -1);
  }
  BlockDecomposition out;
  out.blocks = std::move(finder.blocks);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](VertexSet a, VertexSet b) {
              return a.lowest() != b.lowest() ? a.lowest() < b.lowest() : a.bits < b.bits;
            });
  out.cut_vertices = finder.cuts;
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j)
      if (out.blocks[i].intersects(out.blocks[j]))
        out.block_adjacency.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

// --- block-cycle classification ------------------------------------------------

namespace {

bool block_is_cycle(const Graph& g, VertexSet block) {
  if (block.count() < 3) return false;
  bool all_two = true;
  block.for_each([&](int v) {
    if ((g.neighbors(v) & block).count() != 2) all_two = false;
  });
  return all_two;
}

bool block_is_edge_or_cycle(const Graph& g, VertexSet block) {
  return block.count() == 2 || block_is_cycle(g, block);
}

// Blocks sharing at most one vertex with the union of the others.
std::vector<std::size_t> pendant_blocks(const std::vector<VertexSet>& blocks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    VertexSet rest;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (j != i) rest |= blocks[j];
    if ((blocks[i] & rest).count() <= 1) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<BlockCycleCertificate> classify_block_cycle(const Graph& g) {
  if (g.n() == 0 || !is_connected(g))
    throw std::invalid_argument("classify_block_cycle: disconnected input");
  BlockCycleCertificate cert;
  if (g.n() == 1) {
    cert.removal_order.push_back({VertexSet::single(0), -1});
    return cert;
  }
  auto dec = block_decomposition(g);
  for (const VertexSet& b : dec.blocks) {
    if (!block_is_edge_or_cycle(g, b)) return std::nullopt;
    if (block_is_cycle(g, b)) ++cert.cycle_count;
  }
  std::vector<VertexSet> remaining = dec.blocks;
  while (!remaining.empty()) {
    if (remaining.size() == 1) {
      cert.removal_order.push_back({remaining[0], -1});
      remaining.clear();
      break;
    }
    auto pend = pendant_blocks(remaining);
    std::size_t pick = pend.front();
    for (std::size_t i : pend)
      if (remaining[i].lowest() < remaining[pick].lowest() ||
          (remaining[i].lowest() == remaining[pick].lowest() &&
           remaining[i].bits < remaining[pick].bits))
        pick = i;
    VertexSet rest;
    for (std::size_t j = 0; j < remaining.size(); ++j)
      if (j != pick) rest |= remaining[j];
    VertexSet shared = remaining[pick] & rest;
    cert.removal_order.push_back({remaining[pick], shared.lowest()});
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return cert;
}

bool verify_block_cycle_certificate(const Graph& g, const BlockCycleCertificate& cert) {
  if (g.n() == 1)
    return cert.removal_order.size() == 1 &&
           cert.removal_order[0].block == VertexSet::single(0);
  std::vector<VertexSet> remaining;
  VertexSet all;
  for (const auto& step : cert.removal_order) {
    remaining.push_back(step.block);
    all |= step.block;
  }
  if (all != g.vertices()) return false;
  for (const auto& step : cert.removal_order) {
    if (!block_is_edge_or_cycle(g, step.block)) return false;
    if (remaining.size() >= 2 && pendant_blocks(remaining).size() < 2) return false;
    VertexSet rest;
    for (std::size_t j = 1; j < remaining.size(); ++j) rest |= remaining[j];
    VertexSet shared = step.block & rest;
    if (remaining.size() == 1) {
      if (step.attach != -1) return false;
    } else {
      if (shared.count() != 1 || shared.lowest() != step.attach) return false;
    }
    remaining.erase(remaining.begin());
  }
  return true;
}

// --- outerplanar embeddings -----------------------------------------------------

namespace {

// Cyclic outer order of a single block: repeatedly delete a degree-2 vertex,
// bridging its neighbours with a (possibly virtual) edge, down to a triangle,
// then reinsert in reverse. For 2-connected outerplanar graphs the outer
// Hamiltonian cycle is unique, which makes every reinsertion position
// unambiguous; any failure means the block is not outerplanar.
std::optional<std::vector<int>> block_outer_order(const Graph& g, VertexSet block) {
  const int sz = block.count();
  if (sz == 1) return std::vector<int>{block.lowest()};
  if (sz == 2) return block.to_vector();
  if (edges_within(g, block) > 2 * sz - 3) return std::nullopt;

  std::array<VertexSet, 64> adj{};
  block.for_each([&](int v) { adj[static_cast<std::size_t>(v)] = g.neighbors(v) & block; });
  VertexSet alive = block;
  struct Rec { int v, u, w; };
  std::vector<Rec> recs;
  while (alive.count() > 3) {
    int v = -1;
    alive.for_each([&](int x) {
      if (v == -1 && (adj[static_cast<std::size_t>(x)] & alive).count() == 2) v = x;
    });
    if (v == -1) return std::nullopt;
    auto nb = (adj[static_cast<std::size_t>(v)] & alive).to_vector();
    const int u = nb[0], w = nb[1];
    alive.remove(v);
    adj[static_cast<std::size_t>(u)].remove(v);
    adj[static_cast<std::size_t>(w)].remove(v);
    adj[static_cast<std::size_t>(u)].add(w);
    adj[static_cast<std::size_t>(w)].add(u);
    recs.push_back({v, u, w});
  }
  auto t = alive.to_vector();
  if (!(adj[static_cast<std::size_t>(t[0])].contains(t[1]) &&
        adj[static_cast<std::size_t>(t[0])].contains(t[2]) &&
        adj[static_cast<std::size_t>(t[1])].contains(t[2])))
    return std::nullopt;
  std::vector<int> order = {t[0], t[1], t[2]};
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    const int len = static_cast<int>(order.size());
    int pos = -1;
    for (int i = 0; i < len && pos < 0; ++i) {
      const int a = order[static_cast<std::size_t>(i)];
      const int b = order[static_cast<std::size_t>((i + 1) % len)];
      if ((a == it->u && b == it->w) || (a == it->w && b == it->u)) pos = i + 1;
    }
    if (pos < 0) return std::nullopt;
    order.insert(order.begin() + pos, it->v);
  }
  return order;
}

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Outer edges: consecutive pairs in a block's cyclic order.
std::set<std::pair<int, int>> outer_edges_of_blocks(
    const Graph& g, const std::vector<std::vector<int>>& block_orders) {
  std::set<std::pair<int, int>> outer;
  for (const auto& bo : block_orders) {
    const int len = static_cast<int>(bo.size());
    if (len < 2) continue;
    if (len == 2) {
      outer.insert(norm_edge(bo[0], bo[1]));
      continue;
    }
    for (int i = 0; i < len; ++i) {
      const int a = bo[static_cast<std::size_t>(i)];
      const int b = bo[static_cast<std::size_t>((i + 1) % len)];
      if (g.has_edge(a, b)) outer.insert(norm_edge(a, b));
    }
  }
  return outer;
}

OuterEmbedding assemble_embedding(const Graph& g, std::vector<int> order,
                                  const std::set<std::pair<int, int>>& outer) {
  OuterEmbedding emb;
  emb.outer_order = std::move(order);
  emb.position_of.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < emb.outer_order.size(); ++i)
    emb.position_of[static_cast<std::size_t>(emb.outer_order[i])] = static_cast<int>(i);
  for (auto e : g.edges()) {
    if (outer.count(e))
      emb.outer_edges.push_back(e);
    else
      emb.inner_edges.push_back(e);
  }
  return emb;
}

}  // namespace

bool OuterEmbedding::is_outer(int u, int v) const {
  return std::binary_search(outer_edges.begin(), outer_edges.end(), norm_edge(u, v));
}

int OuterEmbedding::position(int v) const { return position_of[static_cast<std::size_t>(v)]; }

std::optional<OuterEmbedding> outerplanar_embedding(const Graph& g) {
  if (g.n() == 0 || !is_connected(g))
    throw std::invalid_argument("outerplanar_embedding: disconnected input");
  auto dec = block_decomposition(g);
  std::vector<std::vector<int>> block_orders(dec.blocks.size());
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    auto bo = block_outer_order(g, dec.blocks[i]);
    if (!bo) return std::nullopt;
    block_orders[i] = *bo;
  }

  std::vector<std::vector<int>> blocks_at(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < dec.blocks.size(); ++i)
    dec.blocks[i].for_each(
        [&](int v) { blocks_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(i)); });

  // Nest each block's arc right after its entry vertex; children of a vertex
  // follow it immediately, so chords never interleave across blocks.
  std::vector<char> used(dec.blocks.size(), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n()));
  std::function<void(int)> emit = [&](int x) {
    order.push_back(x);
    for (int b : blocks_at[static_cast<std::size_t>(x)]) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = 1;
      const auto& bo = block_orders[static_cast<std::size_t>(b)];
      const int len = static_cast<int>(bo.size());
      int s = 0;
      while (bo[static_cast<std::size_t>(s)] != x) ++s;
      for (int t = 1; t < len; ++t) emit(bo[static_cast<std::size_t>((s + t) % len)]);
    }
  };
  emit(0);

  OuterEmbedding emb = assemble_embedding(g, std::move(order), outer_edges_of_blocks(g, block_orders));
  if (!verify_outer_embedding(g, emb))
    throw std::logic_error("outerplanar_embedding: constructed witness failed verification");
  return emb;
}

OuterEmbedding restrict_embedding(const Graph& g, const OuterEmbedding& emb, VertexSet keep) {
  std::vector<std::pair<int, int>> kept_edges;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) kept_edges.emplace_back(u, v);
  Graph h(g.n(), kept_edges);

  std::vector<int> order;
  for (int v : emb.outer_order)
    if (keep.contains(v)) order.push_back(v);

  auto dec = block_decomposition(h);
  std::vector<std::vector<int>> block_orders;
  for (const VertexSet& b : dec.blocks) {
    if (!b.subset_of(keep)) continue;
    std::vector<int> bo;
    for (int v : order)
      if (b.contains(v)) bo.push_back(v);
    block_orders.push_back(std::move(bo));
  }
  return assemble_embedding(h, std::move(order), outer_edges_of_blocks(h, block_orders));
}

bool verify_outer_embedding(const Graph& g, const OuterEmbedding& emb) {
  const int n = g.n();
  if (static_cast<int>(emb.outer_order.size()) != n) return false;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < emb.outer_order.size(); ++i) {
    const int v = emb.outer_order[i];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  // Outer/inner must partition E(G).
  auto all = g.edges();
  std::vector<std::pair<int, int>> labelled = emb.outer_edges;
  labelled.insert(labelled.end(), emb.inner_edges.begin(), emb.inner_edges.end());
  std::sort(labelled.begin(), labelled.end());
  if (labelled != all) return false;

  // Consecutive adjacent vertices must be outer.
  for (int i = 0; i < n; ++i) {
    const int a = emb.outer_order[static_cast<std::size_t>(i)];
    const int b = emb.outer_order[static_cast<std::size_t>((i + 1) % n)];
    if (n > 1 && g.has_edge(a, b) && !emb.is_outer(a, b)) return false;
  }
  // Outer edges are consecutive within their block's induced cyclic order.
  auto dec = block_decomposition(g);
  for (auto [u, v] : emb.outer_edges) {
    VertexSet blk;
    for (const VertexSet& b : dec.blocks)
      if (b.contains(u) && b.contains(v)) { blk = b; break; }
    std::vector<int> bo;
    for (int x : emb.outer_order)
      if (blk.contains(x)) bo.push_back(x);
    const int len = static_cast<int>(bo.size());
    bool consecutive = false;
    for (int i = 0; i < len && !consecutive; ++i) {
      const int a = bo[static_cast<std::size_t>(i)], b2 = bo[static_cast<std::size_t>((i + 1) % len)];
      if ((a == u && b2 == v) || (a == v && b2 == u)) consecutive = true;
    }
    if (!consecutive) return false;
  }
  // No two edges interleave around the circle.
  auto between = [&](int a, int x, int b) {
    // true when x lies strictly inside the arc a -> b (clockwise)
    const int pa = pos[static_cast<std::size_t>(a)], px = pos[static_cast<std::size_t>(x)],
              pb = pos[static_cast<std::size_t>(b)];
    const int da = (px - pa + n) % n, db = (pb - pa + n) % n;
    return 0 < da && da < db;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto [a, b] = all[i];
      const auto [c, d] = all[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (between(a, c, b) != between(a, d, b)) return false;
    }
  }
  return true;
}

// --- chordality -----------------------------------------------------------------

std::optional<ChordalPeo> chordal_peo(const Graph& g) {
  const int n = g.n();
  ChordalPeo peo;
  if (n == 0) return peo;
  // Maximum cardinality search; its reverse visit order is a perfect
  // elimination ordering exactly when the graph is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet numbered;
  std::vector<int> visit;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered.contains(v) &&
          (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    numbered.add(best);
    visit.push_back(best);
    g.neighbors(best).for_each([&](int w) {
      if (!numbered.contains(w)) ++weight[static_cast<std::size_t>(w)];
    });
  }
  peo.order.assign(visit.rbegin(), visit.rend());
  if (!verify_peo(g, peo)) return std::nullopt;
  return peo;
}

bool verify_peo(const Graph& g, const ChordalPeo& peo) {
  const int n = g.n();
  if (static_cast<int>(peo.order.size()) != n) return false;
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = peo.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || rank[static_cast<std::size_t>(v)] != -1) return false;
    rank[static_cast<std::size_t>(v)] = i;
  }
  for (int i = 0; i < n; ++i) {
    const int v = peo.order[static_cast<std::size_t>(i)];
    VertexSet later;
    g.neighbors(v).for_each([&](int w) {
      if (rank[static_cast<std::size_t>(w)] > i) later.add(w);
    });
    if (!induces_clique(g, later)) return false;
  }
  return true;
}

// --- k-trees --------------------------------------------------------------------

std::optional<KTreeCertificate> k_tree_certificate(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k_tree_certificate: k must be positive");
  if (g.n() < k + 1 || !is_connected(g)) return std::nullopt;
  // Any simplicial vertex of degree k can be removed; a k-tree stays a
  // k-tree, so greedy elimination is exact.
  std::array<VertexSet, 64> adj{};
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  VertexSet alive = g.vertices();
  std::vector<KTreeCertificate::Addition> removals;
  while (alive.count() > k + 1) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick != -1) return;
      VertexSet nb = adj[static_cast<std::size_t>(v)] & alive;
      if (nb.count() == k && induces_clique(g, nb)) pick = v;
    });
    if (pick == -1) return std::nullopt;
    removals.push_back({pick, adj[static_cast<std::size_t>(pick)] & alive});
    alive.remove(pick);
  }
  if (!induces_clique(g, alive)) return std::nullopt;

  KTreeCertificate cert;
  cert.k = k;
  cert.base_clique = alive;
  cert.additions.assign(removals.rbegin(), removals.rend());

  // k-cluster: some (k+1)-clique H absorbs every outside attachment.
  std::vector<VertexSet> candidates{cert.base_clique};
  for (const auto& add : cert.additions)
    candidates.push_back(add.clique | VertexSet::single(add.vertex));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (VertexSet h : candidates) {
    bool ok = true;
    (g.vertices() - h).for_each([&](int v) {
      if (!ok) return;
      VertexSet nb = g.neighbors(v);
      if (nb.count() != k || !nb.subset_of(h)) ok = false;
    });
    if (!ok) continue;
    cert.is_cluster = true;
    cert.cluster_base = h;
    std::vector<VertexSet> used;
    (g.vertices() - h).for_each([&](int v) { used.push_back(g.neighbors(v)); });
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    cert.used_sets = used;
    break;
  }
  return cert;
}

bool verify_k_tree_certificate(const Graph& g, const KTreeCertificate& cert) {
  VertexSet present = cert.base_clique;
  if (present.count() != cert.k + 1 || !induces_clique(g, present)) return false;
  std::vector<std::pair<int, int>> edges;
  auto base = cert.base_clique.to_vector();
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) edges.emplace_back(base[i], base[j]);
  for (const auto& add : cert.additions) {
    if (present.contains(add.vertex)) return false;
    if (add.clique.count() != cert.k || !add.clique.subset_of(present)) return false;
    if (!induces_clique(g, add.clique)) return false;
    add.clique.for_each([&](int u) { edges.emplace_back(add.vertex, u); });
    present.add(add.vertex);
  }
  if (present != g.vertices()) return false;
  return Graph(g.n(), edges) == g;
}

// --- double paths ---------------------------------------------------------------

namespace {

std::vector<int> sequence_of_path(const Graph& g, VertexSet part) {
  if (part.count() == 1) return {part.lowest()};
  VertexSet ends = path_endpoints(g, part);
  std::vector<int> seq = {ends.lowest()};
  int prev = -1;
  while (static_cast<int>(seq.size()) < part.count()) {
    VertexSet next = (g.neighbors(seq.back()) & part);
    if (prev >= 0) next.remove(prev);
    prev = seq.back();
    seq.push_back(next.lowest());
  }
  return seq;
}

// Cross edges between two ordered paths must be monotone: for layer indices
// i1 < i2 the partners satisfy j1 <= j2. Equivalent to a non-crossing
// parallel drawing, hence to outerplanarity of the pair.
bool monotone_pair(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::pair<int, int>> cross;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (g.has_edge(a[i], b[j])) cross.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (cross.empty()) return false;  // pair must be connected
  std::sort(cross.begin(), cross.end());
  int max_j = -1, group_start = 0;
  for (std::size_t e = 0; e < cross.size(); ++e) {
    if (e > 0 && cross[e].first != cross[e - 1].first) {
      for (std::size_t f = static_cast<std::size_t>(group_start); f < e; ++f)
        max_j = std::max(max_j, cross[f].second);
      group_start = static_cast<int>(e);
    }
    if (cross[e].second < max_j) return false;
  }
  return true;
}

bool pair_is_path(const Graph& g, VertexSet a, VertexSet b) {
  return induces_path(g, a | b);
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Orientation assignment making every consecutive layer pair monotone.
std::optional<std::vector<std::vector<int>>> orient_layers(
    const Graph& g, const std::vector<std::vector<int>>& layers) {
  const std::size_t k = layers.size();
  std::vector<std::vector<int>> oriented(k);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == k) return true;
    for (int flip = 0; flip < 2; ++flip) {
      oriented[i] = flip ? reversed(layers[i]) : layers[i];
      if (i == 0 || monotone_pair(g, oriented[i - 1], oriented[i]))
        if (go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return oriented;
}

// Checks the layer conditions and returns the certificate with consistent
// orientations, or nullopt.
std::optional<ParallelPathsCertificate> arrange_layers(
    const Graph& g, const std::vector<std::vector<int>>& layers) {
  const std::size_t k = layers.size();
  std::vector<VertexSet> sets;
  sets.reserve(k);
  for (const auto& l : layers) sets.push_back(VertexSet::from(l));
  // Edges only between consecutive layers.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool adjacent = false;
      sets[i].for_each([&](int v) {
        if (g.neighbors(v).intersects(sets[j])) adjacent = true;
      });
      if (adjacent != (j == i + 1)) return std::nullopt;
    }
  // Consecutive pairs must induce double paths (connected, non-path,
  // parallel drawing).
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (pair_is_path(g, sets[i], sets[i + 1])) return std::nullopt;
  auto oriented = orient_layers(g, layers);
  if (!oriented) return std::nullopt;
  ParallelPathsCertificate cert;
  cert.layers = *oriented;
  return cert;
}

}  // namespace

std::vector<int> ParallelPathsCertificate::left_endpoints() const {
  std::vector<int> out;
  for (const auto& l : layers) out.push_back(l.front());
  return out;
}

Cover ParallelPathsCertificate::as_cover(CoverKind kind) const {
  Cover c{kind, {}};
  for (const auto& l : layers) c.parts.push_back(VertexSet::from(l));
  return c;
}

std::vector<int> double_path_outer_order(const ParallelPathsCertificate& cert) {
  std::vector<int> order = cert.layers[0];
  for (auto it = cert.layers[1].rbegin(); it != cert.layers[1].rend(); ++it)
    order.push_back(*it);
  return order;
}

std::optional<ParallelPathsCertificate> double_path_certificate(const Graph& g,
                                                                SolveOptions opts) {
  if (!is_connected(g)) throw std::invalid_argument("double_path_certificate: disconnected");
  if (is_path_graph(g))
    throw std::invalid_argument("double_path_certificate: input is a path");
  for (int k = 2; k <= g.n(); ++k) {
    std::optional<ParallelPathsCertificate> found;
    detail::enumerate_covers(g, CoverKind::path_cover, k, [&](const Cover& cover) {
      std::vector<std::vector<int>> seqs;
      for (const VertexSet& p : cover.parts) seqs.push_back(sequence_of_path(g, p));
      if (k == 2) {
        if (auto cert = arrange_layers(g, seqs)) {
          found = cert;
          return false;
        }
        return true;
      }
      // Arrange the parts in a line: the part adjacency graph must be a path.
      std::vector<std::vector<int>> adj(seqs.size());
      for (std::size_t i = 0; i < seqs.size(); ++i)
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
          bool touch = false;
          cover.parts[i].for_each([&](int v) {
            if (g.neighbors(v).intersects(cover.parts[j])) touch = true;
          });
          if (touch) {
            adj[i].push_back(static_cast<int>(j));
            adj[j].push_back(static_cast<int>(i));
          }
        }
      std::vector<std::size_t> ends;
      for (std::size_t i = 0; i < adj.size(); ++i) {
        if (adj[i].size() > 2 || adj[i].empty()) return true;
        if (adj[i].size() == 1) ends.push_back(i);
      }
      if (ends.size() != 2) return true;
      std::vector<std::vector<int>> arranged;
      std::size_t cur = ends.front(), prev = seqs.size();
      for (std::size_t step = 0; step < seqs.size(); ++step) {
        arranged.push_back(seqs[cur]);
        std::size_t next = seqs.size();
        for (int w : adj[cur])
          if (static_cast<std::size_t>(w) != prev) next = static_cast<std::size_t>(w);
        prev = cur;
        if (next == seqs.size()) break;
        cur = next;
      }
      if (arranged.size() != seqs.size()) return true;
      if (auto cert = arrange_layers(g, arranged)) {
        found = cert;
        return false;
      }
      return true;
    }, opts);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<ParallelPathsCertificate> validate_series_partition(
    const Graph& g, const std::vector<std::vector<int>>& layers) {
  if (layers.size() < 2) return std::nullopt;
  VertexSet seen;
  for (const auto& l : layers) {
    if (l.empty()) return std::nullopt;
    VertexSet s = VertexSet::from(l);
    if (static_cast<int>(l.size()) != s.count() || seen.intersects(s)) return std::nullopt;
    seen |= s;
    if (!induces_path(g, s)) return std::nullopt;
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
      if (!g.has_edge(l[i], l[i + 1])) return std::nullopt;
  }
  if (seen != g.vertices()) return std::nullopt;
  return arrange_layers(g, layers);
}

}  // namespace zf
