#include "zf/solvers.hpp"

#include <algorithm>
#include <vector>

namespace zf {

namespace {

void charge(std::uint64_t& nodes, const SolveOptions& opts, const char* what) {
  if (++nodes > opts.node_budget) throw BudgetExceeded(what);
}

// Lexicographically first subset of size k passing `accept`, searching
// subsets of `pool` in ascending order.
std::optional<VertexSet> first_subset(const std::vector<int>& pool, int k,
                                      const std::function<bool(VertexSet)>& accept,
                                      std::uint64_t& nodes, const SolveOptions& opts) {
  const int p = static_cast<int>(pool.size());
  if (k > p) return std::nullopt;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    charge(nodes, opts, "forcing-number search budget exceeded");
    VertexSet s;
    for (int i : idx) s.add(pool[static_cast<std::size_t>(i)]);
    if (accept(s)) return s;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

ParameterResult forcing_number_connected(const Graph& g, Rule rule, SolveOptions opts,
                                         std::uint64_t& nodes) {
  ParameterResult res;
  res.parameter = rule == Rule::standard ? "Z" : "Z+";
  const std::vector<int> pool = g.vertices().to_vector();
  const int start = rule == Rule::standard ? std::max(1, min_degree(g)) : 1;
  res.stats.lower_bound = start;
  for (int k = start; k <= g.n(); ++k) {
    auto found = first_subset(
        pool, k, [&](VertexSet s) { return is_forcing_set(g, s, rule); }, nodes, opts);
    if (found) {
      res.value = k;
      res.forcing_set = *found;
      return res;
    }
  }
  throw std::logic_error("forcing number search fell through");  // V(G) always forces
}

// Path/tree cover search. Vertices are assigned in increasing order; a
// vertex joins an open part or opens the next one, which breaks part
// symmetry. Partial parts may be disconnected (later vertices can join the
// pieces) but must stay induced linear forests / forests; connectivity is
// enforced at completion and by a reachability prune.
struct CoverSearch {
  const Graph& g;
  CoverKind kind;
  int max_parts;                       // hard cap on open parts
  std::optional<int> endpoint;         // path covers: in-part degree <= 1
  const SolveOptions& opts;
  std::uint64_t& nodes;

  std::vector<VertexSet> part_members;
  std::vector<std::vector<VertexSet>> part_comps;
  std::vector<int> assignment;  // vertex -> part, -1 unassigned

  int best = -1;                        // best part count found (min mode)
  std::vector<VertexSet> best_parts;
  std::function<bool(const Cover&)> emit;  // enumeration mode; returns false to stop
  bool stopped = false;

  CoverSearch(const Graph& g_, CoverKind kind_, int max_parts_, std::optional<int> endpoint_,
              const SolveOptions& opts_, std::uint64_t& nodes_)
      : g(g_), kind(kind_), max_parts(max_parts_), endpoint(endpoint_), opts(opts_), nodes(nodes_) {
    assignment.assign(static_cast<std::size_t>(g.n()), -1);
  }

  bool can_add(int v, std::size_t p) const {
    VertexSet nbrs = g.neighbors(v) & part_members[p];
    if (kind == CoverKind::path_cover) {
      if (nbrs.count() > 2) return false;
      if (endpoint && v == *endpoint && nbrs.count() > 1) return false;
      bool ok = true;
      nbrs.for_each([&](int x) {
        if ((g.neighbors(x) & part_members[p]).count() >= 2) ok = false;
        if (endpoint && x == *endpoint && (g.neighbors(x) & part_members[p]).count() >= 1)
          ok = false;
      });
      if (!ok) return false;
    }
    // No cycles: v may touch each existing piece of the part at most once.
    for (const VertexSet& comp : part_comps[p])
      if ((nbrs & comp).count() > 1) return false;
    return true;
  }

  void add(int v, std::size_t p) {
    VertexSet nbrs = g.neighbors(v) & part_members[p];
    VertexSet merged = VertexSet::single(v);
    auto& comps = part_comps[p];
    for (std::size_t i = comps.size(); i-- > 0;) {
      if (comps[i].intersects(nbrs)) {
        merged |= comps[i];
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    comps.push_back(merged);
    part_members[p].add(v);
    assignment[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }

  // A fragmented part is dead when even claiming every unassigned vertex
  // could not connect its pieces.
  bool dead_part(int next_vertex) const {
    VertexSet future = g.vertices() - VertexSet::full(next_vertex);
    for (std::size_t p = 0; p < part_comps.size(); ++p) {
      if (part_comps[p].size() < 2) continue;
      VertexSet reach = part_members[p] | future;
      VertexSet home;
      for (const VertexSet& comp : components_within(g, reach))
        if (comp.contains(part_members[p].lowest())) home = comp;
      if (!part_members[p].subset_of(home)) return true;
    }
    return false;
  }

  void complete() {
    for (const auto& comps : part_comps)
      if (comps.size() != 1) return;
    if (emit) {
      Cover c{kind, part_members};
      if (!emit(c)) stopped = true;
      return;
    }
    if (best < 0 || static_cast<int>(part_members.size()) < best) {
      best = static_cast<int>(part_members.size());
      best_parts = part_members;
    }
  }

  void dfs(int v) {
    if (stopped) return;
    charge(nodes, opts, "cover search budget exceeded");
    if (v == g.n()) {
      complete();
      return;
    }
    const int cap = emit ? max_parts
                         : (best >= 0 ? std::min(max_parts, best - 1) : max_parts);
    if (static_cast<int>(part_members.size()) > cap) return;
    if (dead_part(v)) return;
    const std::size_t open = part_members.size();
    for (std::size_t p = 0; p < open; ++p) {
      if (!can_add(v, p)) continue;
      auto saved_comps = part_comps[p];
      add(v, p);
      dfs(v + 1);
      part_comps[p] = saved_comps;
      part_members[p].remove(v);
      assignment[static_cast<std::size_t>(v)] = -1;
      if (stopped) return;
    }
    if (static_cast<int>(open) < cap) {
      part_members.push_back(VertexSet::single(v));
      part_comps.push_back({VertexSet::single(v)});
      assignment[static_cast<std::size_t>(v)] = static_cast<int>(open);
      dfs(v + 1);
      part_members.pop_back();
      part_comps.pop_back();
      assignment[static_cast<std::size_t>(v)] = -1;
    }
  }
};

ParameterResult cover_number_connected(const Graph& g, CoverKind kind, SolveOptions opts,
                                       std::uint64_t& nodes) {
  ParameterResult res;
  res.parameter = kind == CoverKind::path_cover ? "P" : "T";
  res.stats.lower_bound = 1;
  CoverSearch search(g, kind, g.n(), std::nullopt, opts, nodes);
  search.dfs(0);
  res.value = search.best;
  res.cover = Cover{kind, search.best_parts};
  return res;
}

// --- edge clique cover -------------------------------------------------------

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    const int d = (g.neighbors(u) & p).count();
    if (d > best) { best = d; pivot = u; }
  });
  VertexSet candidates = p - g.neighbors(pivot);
  candidates.for_each([&](int v) {
    VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, out);
    p.remove(v);
    x.add(v);
  });
}

struct CliqueCoverSearch {
  const Graph& g;
  const std::vector<VertexSet>& cliques;
  const std::vector<std::pair<int, int>>& edge_list;
  const SolveOptions& opts;
  std::uint64_t& nodes;

  int best = -1;
  std::vector<int> best_pick{}, pick{};

  bool edge_covered(std::pair<int, int> e, const std::vector<int>& chosen) const {
    for (int c : chosen)
      if (cliques[static_cast<std::size_t>(c)].contains(e.first) &&
          cliques[static_cast<std::size_t>(c)].contains(e.second))
        return true;
    return false;
  }

  void dfs() {
    charge(nodes, opts, "clique cover search budget exceeded");
    if (best >= 0 && static_cast<int>(pick.size()) >= best) return;
    // Branch on the uncovered edge with the fewest candidate cliques.
    int chosen_edge = -1, fewest = -1;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      if (edge_covered(edge_list[i], pick)) continue;
      int cands = 0;
      for (const VertexSet& c : cliques)
        if (c.contains(edge_list[i].first) && c.contains(edge_list[i].second)) ++cands;
      if (fewest < 0 || cands < fewest) {
        fewest = cands;
        chosen_edge = static_cast<int>(i);
      }
    }
    if (chosen_edge < 0) {
      best = static_cast<int>(pick.size());
      best_pick = pick;
      return;
    }
    const auto e = edge_list[static_cast<std::size_t>(chosen_edge)];
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (!cliques[c].contains(e.first) || !cliques[c].contains(e.second)) continue;
      pick.push_back(static_cast<int>(c));
      dfs();
      pick.pop_back();
    }
  }
};

ParameterResult clique_cover_connected(const Graph& g, SolveOptions opts, std::uint64_t& nodes) {
  ParameterResult res;
  res.parameter = "cc";
  const auto edge_list = g.edges();
  if (edge_list.empty()) {
    res.value = 0;
    res.cover = Cover{CoverKind::clique_edge_cover, {}};
    return res;
  }
  // A cover by arbitrary cliques extends to one by maximal cliques.
  std::vector<VertexSet> cliques;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, cliques);
  std::sort(cliques.begin(), cliques.end());
  CliqueCoverSearch search{g, cliques, edge_list, opts, nodes};
  search.dfs();
  Cover cover{CoverKind::clique_edge_cover, {}};
  for (int c : search.best_pick) cover.parts.push_back(cliques[static_cast<std::size_t>(c)]);
  std::sort(cover.parts.begin(), cover.parts.end());
  res.value = search.best;
  res.cover = cover;
  return res;
}

// --- component decomposition -------------------------------------------------

using ComponentSolver =
    std::function<ParameterResult(const Graph&, SolveOptions, std::uint64_t&)>;

ParameterResult solve_per_component(const Graph& g, const char* name, bool set_certificate,
                                    CoverKind kind, SolveOptions opts,
                                    const ComponentSolver& solve) {
  if (g.n() < 1) throw std::invalid_argument("solver: empty graph");
  ParameterResult total;
  total.parameter = name;
  if (set_certificate)
    total.forcing_set = VertexSet{};
  else
    total.cover = Cover{kind, {}};
  std::uint64_t nodes = 0;
  for (const VertexSet& comp : components(g)) {
    auto [sub, labels] = induced_subgraph(g, comp);
    ParameterResult part = solve(sub, opts, nodes);
    total.value += part.value;
    total.stats.lower_bound += part.stats.lower_bound;
    if (set_certificate) {
      part.forcing_set->for_each(
          [&](int v) { total.forcing_set->add(labels[static_cast<std::size_t>(v)]); });
    } else {
      for (const VertexSet& p : part.cover->parts) {
        VertexSet mapped;
        p.for_each([&](int v) { mapped.add(labels[static_cast<std::size_t>(v)]); });
        total.cover->parts.push_back(mapped);
      }
    }
  }
  total.stats.nodes = nodes;
  return total;
}

}  // namespace

ParameterResult zero_forcing_number(const Graph& g, SolveOptions opts) {
  return solve_per_component(g, "Z", true, CoverKind::path_cover, opts,
                             [](const Graph& c, SolveOptions o, std::uint64_t& n) {
                               return forcing_number_connected(c, Rule::standard, o, n);
                             });
}

ParameterResult psd_forcing_number(const Graph& g, SolveOptions opts) {
  return solve_per_component(g, "Z+", true, CoverKind::tree_cover, opts,
                             [](const Graph& c, SolveOptions o, std::uint64_t& n) {
                               return forcing_number_connected(c, Rule::positive, o, n);
                             });
}

ParameterResult path_cover_number(const Graph& g, SolveOptions opts) {
  return solve_per_component(g, "P", false, CoverKind::path_cover, opts,
                             [](const Graph& c, SolveOptions o, std::uint64_t& n) {
                               return cover_number_connected(c, CoverKind::path_cover, o, n);
                             });
}

ParameterResult tree_cover_number(const Graph& g, SolveOptions opts) {
  return solve_per_component(g, "T", false, CoverKind::tree_cover, opts,
                             [](const Graph& c, SolveOptions o, std::uint64_t& n) {
                               return cover_number_connected(c, CoverKind::tree_cover, o, n);
                             });
}

ParameterResult edge_clique_cover_number(const Graph& g, SolveOptions opts) {
  return solve_per_component(g, "cc", false, CoverKind::clique_edge_cover, opts,
                             clique_cover_connected);
}

namespace detail {

std::optional<Cover> bounded_cover_search(const Graph& g, CoverKind kind, int max_parts,
                                          std::optional<int> endpoint, SolveOptions opts,
                                          SearchStats* stats) {
  std::uint64_t nodes = 0;
  CoverSearch search(g, kind, max_parts, endpoint, opts, nodes);
  search.dfs(0);
  if (stats) stats->nodes += nodes;
  if (search.best < 0) return std::nullopt;
  return Cover{kind, search.best_parts};
}

void enumerate_covers(const Graph& g, CoverKind kind, int part_count,
                      const std::function<bool(const Cover&)>& cb, SolveOptions opts) {
  std::uint64_t nodes = 0;
  CoverSearch search(g, kind, part_count, std::nullopt, opts, nodes);
  search.emit = [&](const Cover& c) {
    if (static_cast<int>(c.parts.size()) != part_count) return true;
    return cb(c);
  };
  search.dfs(0);
}

}  // namespace detail

}  // namespace zf
