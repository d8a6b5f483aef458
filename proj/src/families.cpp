#include "zf/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zf {

std::optional<ForcingRun> realize_cover(const Graph& g, const std::vector<VertexSet>& parts,
                                        VertexSet roots, Rule rule, VertexSet active) {
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  VertexSet covered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if ((roots & parts[i]).count() != 1) return std::nullopt;
    covered |= parts[i];
    parts[i].for_each([&](int v) { part_of[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  }
  if (covered != active || !roots.subset_of(active)) return std::nullopt;
  ForcingRun run = closure_within(g, roots, rule, part_of, active);
  if (!run.complete()) return std::nullopt;
  return run;
}

namespace {

// Tries root selections from the per-part candidate lists in lexicographic
// order until one realises the cover.
std::optional<ForcingRun> realize_from_candidates(const Graph& g,
                                                  const std::vector<VertexSet>& parts,
                                                  const std::vector<std::vector<int>>& cands,
                                                  Rule rule, VertexSet active) {
  std::vector<std::size_t> pick(cands.size(), 0);
  for (;;) {
    VertexSet roots;
    for (std::size_t i = 0; i < cands.size(); ++i) roots.add(cands[i][pick[i]]);
    if (auto run = realize_cover(g, parts, roots, rule, active)) return run;
    std::size_t i = cands.size();
    while (i-- > 0) {
      if (++pick[i] < cands[i].size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

// Path covers force from path ends, so only endpoints are root candidates.
std::optional<ForcingRun> realize_path_cover(const Graph& g, const std::vector<VertexSet>& parts,
                                             VertexSet active) {
  std::vector<std::vector<int>> cands;
  for (const VertexSet& p : parts) cands.push_back(path_endpoints(g, p).to_vector());
  return realize_from_candidates(g, parts, cands, Rule::standard, active);
}

std::vector<int> cycle_sequence_from(const Graph& g, VertexSet cycle, int start) {
  std::vector<int> seq{start};
  VertexSet nb = g.neighbors(start) & cycle;
  int prev = start, cur = nb.lowest();
  while (cur != start) {
    seq.push_back(cur);
    VertexSet next = (g.neighbors(cur) & cycle) - VertexSet::single(prev);
    prev = cur;
    cur = next.lowest();
  }
  return seq;
}

}  // namespace

// --- block-cycle graphs ---------------------------------------------------------

FamilySolution block_cycle_solution(const Graph& g, const BlockCycleCertificate& cert,
                                    SolveOptions opts) {
  if (!verify_block_cycle_certificate(g, cert))
    throw std::invalid_argument("block_cycle_solution: invalid certificate");

  std::vector<VertexSet> parts;
  VertexSet active;
  bool first = true;
  for (auto it = cert.removal_order.rbegin(); it != cert.removal_order.rend(); ++it) {
    const VertexSet block = it->block;
    if (first) {
      first = false;
      active = block;
      if (block.count() <= 2) {
        parts.push_back(block);
      } else {
        auto seq = cycle_sequence_from(g, block, block.lowest());
        parts.push_back(block - VertexSet::single(seq.back()));
        parts.push_back(VertexSet::single(seq.back()));
      }
      continue;
    }
    const int c = it->attach;
    // Is there a minimum cover of the current graph with c on a path end?
    auto [sub, labels] = induced_subgraph(g, active);
    int c_local = static_cast<int>(std::find(labels.begin(), labels.end(), c) - labels.begin());
    auto anchored = detail::bounded_cover_search(sub, CoverKind::path_cover,
                                                 static_cast<int>(parts.size()), c_local, opts,
                                                 nullptr);
    if (anchored) {
      parts.clear();
      for (const VertexSet& p : anchored->parts) {
        VertexSet mapped;
        p.for_each([&](int v) { mapped.add(labels[static_cast<std::size_t>(v)]); });
        parts.push_back(mapped);
      }
    }
    std::size_t c_part = 0;
    while (!parts[c_part].contains(c)) ++c_part;

    if (block.count() == 2) {
      const int v = (block - VertexSet::single(c)).lowest();
      if (anchored)
        parts[c_part].add(v);  // extend the path past its end
      else
        parts.push_back(VertexSet::single(v));  // c is interior in every minimum cover
    } else {
      auto seq = cycle_sequence_from(g, block, c);
      const int excluded = seq.back();
      if (anchored) {
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) parts[c_part].add(seq[i]);
        parts.push_back(VertexSet::single(excluded));
      } else {
        parts.push_back(block - VertexSet::single(c));
      }
    }
    active |= block;
  }

  Cover cover{CoverKind::path_cover, parts};
  if (!is_valid_cover(g, cover))
    throw std::logic_error("block_cycle_solution: constructed cover invalid");
  auto run = realize_path_cover(g, parts, g.vertices());
  if (!run)
    throw std::logic_error("block_cycle_solution: cover not realisable as forcing chains");
  FamilySolution sol;
  sol.family = cert.unicyclic() ? "unicyclic" : "block_cycle";
  sol.rule = Rule::standard;
  sol.forcing_set = run->initial;
  sol.cover = cover;
  sol.equalities = {"Z=P"};
  sol.run = *run;
  return sol;
}

// --- double paths ----------------------------------------------------------------

FamilySolution double_path_solution(const Graph& g, const ParallelPathsCertificate& cert) {
  auto attempt = [&](const std::vector<std::vector<int>>& layers) -> std::optional<ForcingRun> {
    std::vector<VertexSet> parts;
    VertexSet roots;
    for (const auto& l : layers) {
      parts.push_back(VertexSet::from(l));
      roots.add(l.front());
    }
    return realize_cover(g, parts, roots, Rule::standard, g.vertices());
  };
  auto run = attempt(cert.layers);
  if (!run) {
    std::vector<std::vector<int>> flipped = cert.layers;  // right endpoints instead
    for (auto& l : flipped) std::reverse(l.begin(), l.end());
    run = attempt(flipped);
  }
  if (!run)
    throw std::logic_error("double_path_solution: endpoints do not force along the paths");
  FamilySolution sol;
  sol.family = cert.series() ? "series_of_parallel_paths" : "double_path";
  sol.rule = Rule::standard;
  sol.forcing_set = run->initial;
  sol.cover = cert.as_cover();
  sol.equalities = {"Z=P"};
  sol.run = *run;
  return sol;
}

// --- double trees ----------------------------------------------------------------

namespace {

bool is_cut_pair(const Graph& g, VertexSet active, int a, int b) {
  VertexSet rest = active - VertexSet::single(a) - VertexSet::single(b);
  return components_within(g, rest).size() > 1;
}

// Candidates for the second root, cut pairs first.
std::vector<int> second_root_candidates(const Graph& g, VertexSet active, VertexSet from, int v) {
  std::vector<int> cuts, rest;
  from.for_each([&](int u) {
    (is_cut_pair(g, active, v, u) ? cuts : rest).push_back(u);
  });
  cuts.insert(cuts.end(), rest.begin(), rest.end());
  return cuts;
}

}  // namespace

std::pair<int, FamilySolution> double_tree_cut_pair(const Graph& g, VertexSet t1, VertexSet t2,
                                                    int v) {
  if (t1.intersects(t2) || (t1 | t2) != g.vertices() || !induces_tree(g, t1) ||
      !induces_tree(g, t2))
    throw std::invalid_argument("double_tree_cut_pair: not a 2-tree-cover");
  if (!t1.contains(v)) throw std::invalid_argument("double_tree_cut_pair: v not in T1");
  if (is_tree(g)) throw std::invalid_argument("double_tree_cut_pair: input is a tree");
  if (!outerplanar_embedding(g))
    throw std::invalid_argument("double_tree_cut_pair: input not outerplanar");

  for (int u : second_root_candidates(g, g.vertices(), t2, v)) {
    auto run = realize_cover(g, {t1, t2}, VertexSet::of({v, u}), Rule::positive, g.vertices());
    if (!run) continue;
    FamilySolution sol;
    sol.family = "double_tree";
    sol.rule = Rule::positive;
    sol.forcing_set = run->initial;
    sol.cover = Cover{CoverKind::tree_cover, {t1, t2}};
    sol.equalities = {"Z+=T"};
    sol.run = *run;
    return {u, sol};
  }
  throw std::logic_error("double_tree_cut_pair: no partner vertex realises the trees");
}

// --- outerplanar graphs -----------------------------------------------------------

namespace {

// Edge adjacency between parts, restricted to `active`.
std::vector<std::vector<int>> part_adjacency(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<std::vector<int>> adj(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      bool touch = false;
      parts[i].for_each([&](int x) {
        if (g.neighbors(x).intersects(parts[j])) touch = true;
      });
      if (touch) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  return adj;
}

std::optional<int> find_pendant(const std::vector<std::vector<int>>& adj) {
  if (adj.size() == 1) return 0;
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (adj[i].size() == 1) return static_cast<int>(i);
  return std::nullopt;
}

struct Rewrite {
  std::vector<VertexSet> parts;
  int s1_index = -1, s2_index = -1;
  int split_part = -1, other_part = -1;
  std::pair<int, int> bridge_edge{-1, -1};
  std::pair<int, int> consecutive{-1, -1};
};

// Rewrites a consecutive pair (T1, T2) into (S1, S2) with S1 pendant, using
// an outer edge of G[T1 u T2] between the trees. Returns nullopt when no
// candidate edge yields a valid pendant-making split.
std::optional<Rewrite> pendant_rewrite(const Graph& g, const OuterEmbedding& emb,
                                       const std::vector<VertexSet>& parts) {
  auto adj = part_adjacency(g, parts);
  if (find_pendant(adj)) return std::nullopt;

  // H_T degrees count outer edges between distinct parts, with multiplicity.
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i].for_each([&](int v) { part_of[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  std::vector<int> outer_deg(parts.size(), 0);
  std::vector<std::vector<int>> outer_mult(parts.size(), std::vector<int>(parts.size(), 0));
  for (auto [a, b] : emb.outer_edges) {
    const int pa = part_of[static_cast<std::size_t>(a)], pb = part_of[static_cast<std::size_t>(b)];
    if (pa == pb) continue;
    ++outer_deg[static_cast<std::size_t>(pa)];
    ++outer_deg[static_cast<std::size_t>(pb)];
    ++outer_mult[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
    ++outer_mult[static_cast<std::size_t>(pb)][static_cast<std::size_t>(pa)];
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (outer_mult[i][j] == 0 || outer_deg[i] != 2 || outer_deg[j] != 2) continue;
      // Consecutive pair found; look for the bridge edge inside H.
      const VertexSet t1 = parts[i], t2 = parts[j];
      OuterEmbedding emb_h = restrict_embedding(g, emb, t1 | t2);
      std::vector<std::pair<int, int>> cand;
      for (auto [a, b] : emb_h.outer_edges) {
        const bool split = (t1.contains(a) && t2.contains(b)) || (t2.contains(a) && t1.contains(b));
        if (split) cand.push_back({a, b});
      }
      // Prefer edges that are inner in G.
      std::stable_sort(cand.begin(), cand.end(), [&](auto e, auto f) {
        return !emb.is_outer(e.first, e.second) && emb.is_outer(f.first, f.second);
      });
      for (auto [a, b] : cand) {
        for (int role = 0; role < 2; ++role) {
          // u lies in the tree that gets split.
          const int u = role == 0 ? (t1.contains(a) ? a : b) : (t2.contains(a) ? a : b);
          const int v = u == a ? b : a;
          const VertexSet tu = role == 0 ? t1 : t2;
          const VertexSet tv = role == 0 ? t2 : t1;
          std::vector<VertexSet> pieces = components_within(g, tu - VertexSet::single(u));
          std::vector<VertexSet> touching;
          for (const VertexSet& piece : pieces) {
            bool adj_tv = false;
            piece.for_each([&](int x) {
              if (g.neighbors(x).intersects(tv)) adj_tv = true;
            });
            if (adj_tv) touching.push_back(piece);
          }
          if (touching.size() != 1) continue;
          const VertexSet s1 = touching.front();
          const VertexSet s2 = tv | (tu - s1);
          if (!induces_tree(g, s1) || !induces_tree(g, s2)) continue;
          Rewrite rw;
          rw.parts = parts;
          const std::size_t split_idx = role == 0 ? i : j;
          const std::size_t other_idx = role == 0 ? j : i;
          rw.parts[split_idx] = s1;
          rw.parts[other_idx] = s2;
          auto new_adj = part_adjacency(g, rw.parts);
          if (new_adj[split_idx].size() != 1 ||
              new_adj[split_idx][0] != static_cast<int>(other_idx))
            continue;
          rw.s1_index = static_cast<int>(split_idx);
          rw.s2_index = static_cast<int>(other_idx);
          rw.split_part = static_cast<int>(split_idx);
          rw.other_part = static_cast<int>(other_idx);
          rw.bridge_edge = {u, v};
          rw.consecutive = {static_cast<int>(i), static_cast<int>(j)};
          return rw;
        }
      }
    }
  }
  return std::nullopt;
}

// Root per part realising the parts of a minimum tree cover of G[active] as
// forcing trees. Follows the peel-a-pendant-tree induction.
VertexSet outerplanar_roots(const Graph& g, const OuterEmbedding& emb, VertexSet active,
                            const std::vector<VertexSet>& parts) {
  if (parts.size() == 1) {
    VertexSet roots = VertexSet::single(parts[0].lowest());
    if (!realize_cover(g, parts, roots, Rule::positive, active))
      throw std::logic_error("outerplanar_solution: single tree failed to force");
    return roots;
  }
  auto adj = part_adjacency(g, parts);
  if (auto pendant = find_pendant(adj)) {
    const std::size_t pi = static_cast<std::size_t>(*pendant);
    const VertexSet t_p = parts[pi];
    const VertexSet t_q = parts[static_cast<std::size_t>(adj[pi][0])];
    VertexSet active2 = active - t_p;
    std::vector<VertexSet> parts2 = parts;
    parts2.erase(parts2.begin() + static_cast<std::ptrdiff_t>(pi));
    OuterEmbedding emb2 = restrict_embedding(g, emb, active2);
    VertexSet roots2 = outerplanar_roots(g, emb2, active2, parts2);

    // First vertex of T_q adjacent to T_p that turns black in the smaller run.
    std::vector<int> part_of2(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < parts2.size(); ++i)
      parts2[i].for_each([&](int v) { part_of2[static_cast<std::size_t>(v)] = static_cast<int>(i); });
    ForcingRun run2 = closure_within(g, roots2, Rule::positive, part_of2, active2);
    int x = -1;
    (roots2 & t_q).for_each([&](int r) {
      if (x == -1 && g.neighbors(r).intersects(t_p)) x = r;
    });
    for (const Force& f : run2.forces) {
      if (x != -1) break;
      if (t_q.contains(f.forced) && g.neighbors(f.forced).intersects(t_p)) x = f.forced;
    }
    if (x == -1) throw std::logic_error("outerplanar_solution: pendant tree has no contact");

    for (int y : second_root_candidates(g, t_p | t_q, t_p, x)) {
      VertexSet roots = roots2 | VertexSet::single(y);
      if (realize_cover(g, parts, roots, Rule::positive, active)) return roots;
    }
    throw std::logic_error("outerplanar_solution: no lift across the pendant tree");
  }

  auto rw = pendant_rewrite(g, emb, parts);
  if (!rw) throw std::logic_error("outerplanar_solution: no pendant tree and no rewrite");
  VertexSet roots2 = outerplanar_roots(g, emb, active, rw->parts);
  const VertexSet s2 = rw->parts[static_cast<std::size_t>(rw->s2_index)];
  const int x = (roots2 & s2).lowest();
  const VertexSet unsplit = parts[static_cast<std::size_t>(rw->other_part)];
  std::vector<VertexSet> cand_roots;
  VertexSet swapped = (roots2 - VertexSet::single(x)) | VertexSet::single(rw->bridge_edge.second);
  if (unsplit.contains(x)) {
    cand_roots.push_back(roots2);
    cand_roots.push_back(swapped);
  } else {
    cand_roots.push_back(swapped);
    cand_roots.push_back(roots2);
  }
  for (const VertexSet& roots : cand_roots)
    if (realize_cover(g, parts, roots, Rule::positive, active)) return roots;
  throw std::logic_error("outerplanar_solution: rewrite roots do not transfer");
}

}  // namespace

CoverClassification consecutive_or_pendant_trees(const Graph& g, const OuterEmbedding& emb,
                                                 const Cover& cover, SolveOptions opts) {
  if (cover.kind != CoverKind::tree_cover || !is_valid_cover(g, cover))
    throw std::invalid_argument("consecutive_or_pendant_trees: not a tree cover");
  if (tree_cover_number(g, opts).value != static_cast<int>(cover.parts.size()))
    throw std::invalid_argument("consecutive_or_pendant_trees: cover not minimum");

  CoverClassification out;
  auto adj = part_adjacency(g, cover.parts);
  if (auto pendant = find_pendant(adj)) {
    out.pendant = pendant;
    return out;
  }
  auto rw = pendant_rewrite(g, emb, cover.parts);
  if (!rw)
    throw std::logic_error("consecutive_or_pendant_trees: no pendant and no consecutive pair");
  out.consecutive = rw->consecutive;
  out.transformed = Cover{CoverKind::tree_cover, rw->parts};
  out.s1_index = rw->s1_index;
  out.s2_index = rw->s2_index;
  out.split_part = rw->split_part;
  out.other_part = rw->other_part;
  out.bridge_edge = rw->bridge_edge;
  return out;
}

FamilySolution outerplanar_solution(const Graph& g, const OuterEmbedding& emb,
                                    SolveOptions opts) {
  if (!verify_outer_embedding(g, emb))
    throw std::invalid_argument("outerplanar_solution: invalid embedding witness");
  ParameterResult tc = tree_cover_number(g, opts);
  const Cover cover = *tc.cover;
  VertexSet roots = outerplanar_roots(g, emb, g.vertices(), cover.parts);
  auto run = realize_cover(g, cover.parts, roots, Rule::positive, g.vertices());
  if (!run) throw std::logic_error("outerplanar_solution: final replay failed");
  FamilySolution sol;
  sol.family = "outerplanar";
  sol.rule = Rule::positive;
  sol.forcing_set = roots;
  sol.cover = cover;
  sol.equalities = {"Z+=T"};
  sol.run = *run;
  return sol;
}

// --- vertex sums -----------------------------------------------------------------

FamilySolution compose_vertex_sum(const FamilySolution& g_sol, int vg,
                                  const FamilySolution& h_sol, int vh) {
  if (g_sol.rule != Rule::positive || h_sol.rule != Rule::positive)
    throw std::invalid_argument("compose_vertex_sum: positive-rule solutions required");
  const Graph& g = g_sol.run.graph;
  const Graph& h = h_sol.run.graph;
  if (vg < 0 || vg >= g.n() || vh < 0 || vh >= h.n())
    throw std::invalid_argument("compose_vertex_sum: identified vertex out of range");
  VertexSum sum = vertex_sum(g, h, vg, vh);

  auto map_set = [](VertexSet s, const std::vector<int>& map) {
    VertexSet out;
    s.for_each([&](int v) { out.add(map[static_cast<std::size_t>(v)]); });
    return out;
  };

  std::vector<VertexSet> parts;
  VertexSet merged, g_root_of_merged, h_root_of_merged;
  for (const VertexSet& p : g_sol.cover.parts) {
    VertexSet mapped = map_set(p, sum.map_g);
    if (p.contains(vg)) {
      merged = mapped;
      g_root_of_merged = map_set(g_sol.forcing_set & p, sum.map_g);
    } else {
      parts.push_back(mapped);
    }
  }
  VertexSet other_roots = map_set(g_sol.forcing_set, sum.map_g) - g_root_of_merged;
  for (const VertexSet& p : h_sol.cover.parts) {
    VertexSet mapped = map_set(p, sum.map_h);
    if (p.contains(vh)) {
      merged |= mapped;
      h_root_of_merged = map_set(h_sol.forcing_set & p, sum.map_h);
    } else {
      parts.push_back(mapped);
      other_roots |= map_set(h_sol.forcing_set & p, sum.map_h);
    }
  }
  const std::size_t merged_index = parts.size();
  parts.push_back(merged);

  std::vector<int> merged_candidates;
  if (!g_root_of_merged.empty()) merged_candidates.push_back(g_root_of_merged.lowest());
  if (!h_root_of_merged.empty()) merged_candidates.push_back(h_root_of_merged.lowest());
  merged.for_each([&](int v) {
    if (std::find(merged_candidates.begin(), merged_candidates.end(), v) ==
        merged_candidates.end())
      merged_candidates.push_back(v);
  });

  auto package = [&](const ForcingRun& run) {
    FamilySolution sol;
    sol.family = "vertex_sum";
    sol.rule = Rule::positive;
    sol.forcing_set = run.initial;
    sol.cover = Cover{CoverKind::tree_cover, parts};
    sol.equalities = {"Z+=T"};
    sol.run = run;
    return sol;
  };
  // Preferred: keep every unmerged root and re-root only the merged tree.
  for (int r : merged_candidates) {
    VertexSet roots = other_roots | VertexSet::single(r);
    if (auto run = realize_cover(sum.graph, parts, roots, Rule::positive, sum.graph.vertices()))
      return package(*run);
  }
  // Rerooting only the merged tree can deadlock against the kept roots'
  // schedules; fall back to selecting every root afresh.
  std::vector<std::vector<int>> cands;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == merged_index)
      cands.push_back(merged_candidates);
    else
      cands.push_back(parts[i].to_vector());
  }
  if (auto run = realize_from_candidates(sum.graph, parts, cands, Rule::positive,
                                         sum.graph.vertices()))
    return package(*run);
  throw std::logic_error("compose_vertex_sum: merged cover is not realisable");
}

// --- k-trees ---------------------------------------------------------------------

KClusterValues k_cluster_parameters(const KTreeCertificate& cert) {
  if (!cert.is_cluster)
    throw std::invalid_argument("k_cluster_parameters: certificate is not a k-cluster");
  const int k = cert.k;
  const int s = static_cast<int>(cert.used_sets.size());
  if (k < 1 || s > k + 1 || cert.cluster_base.count() != k + 1)
    throw std::invalid_argument("k_cluster_parameters: malformed certificate");
  for (const VertexSet& used : cert.used_sets)
    if (used.count() != k || !used.subset_of(cert.cluster_base))
      throw std::invalid_argument("k_cluster_parameters: malformed certificate");
  KClusterValues out;
  out.z_plus = s >= 3 ? k + 1 : k;
  if (k % 2 == 1)
    out.tree_cover = (k + 1) / 2;
  else
    out.tree_cover = (k + 2) / 2 + (s == k + 1 ? 1 : 0);
  return out;
}

Cover k_tree_tree_cover_odd(const Graph& g, const KTreeCertificate& cert) {
  if (cert.k % 2 == 0)
    throw std::invalid_argument("k_tree_tree_cover_odd: k must be odd");
  if (!verify_k_tree_certificate(g, cert))
    throw std::invalid_argument("k_tree_tree_cover_odd: invalid certificate");
  std::vector<VertexSet> parts;
  auto base = cert.base_clique.to_vector();
  for (std::size_t i = 0; i + 1 < base.size(); i += 2)
    parts.push_back(VertexSet::of({base[i], base[i + 1]}));
  for (const auto& add : cert.additions) {
    int host = -1;
    for (std::size_t p = 0; p < parts.size(); ++p)
      if ((parts[p] & add.clique).count() == 1)
        host = host == -1 ? static_cast<int>(p) : -2;
    if (host < 0)
      throw std::logic_error("k_tree_tree_cover_odd: attachment clique not split 2/2/1");
    parts[static_cast<std::size_t>(host)].add(add.vertex);
  }
  Cover cover{CoverKind::tree_cover, parts};
  if (!is_valid_cover(g, cover))
    throw std::logic_error("k_tree_tree_cover_odd: constructed parts are not a tree cover");
  return cover;
}

int chordal_psd_identity(const Graph& g, const ChordalPeo& peo, SolveOptions opts) {
  if (!verify_peo(g, peo))
    throw std::invalid_argument("chordal_psd_identity: not a perfect elimination ordering");
  return g.n() - edge_clique_cover_number(g, opts).value;
}

Graph p2_interval_witness(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1 || k > std::min(m, n))
    throw std::invalid_argument("p2_interval_witness: need 1 <= k <= min(m, n)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(m + j, m + j + 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

}  // namespace zf
