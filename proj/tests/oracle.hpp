// Test-only reference implementations, deliberately written against plain
// adjacency matrices and exhaustive enumeration so they share no code with
// the library paths they check.
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit SimpleGraph(int n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}
  void add_edge(int u, int v) { adj[u][v] = adj[v][u] = true; }
};

// graph6 short form, assembled character by character.
inline std::string encode_graph6(const SimpleGraph& g) {
  std::string out(1, static_cast<char>(g.n + 63));
  std::vector<int> bits;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adj[u][v] ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[i + b];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

inline SimpleGraph decode_graph6(const std::string& text) {
  SimpleGraph g(text[0] - 63);
  std::vector<int> bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    int value = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((value >> b) & 1);
  }
  int at = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits[at++]) g.add_edge(u, v);
  return g;
}

// Sequential fixed-point closure: scan for any one legal force, apply it,
// repeat. The derived set does not depend on the order of application.
inline std::vector<bool> close_standard(const SimpleGraph& g, std::vector<bool> black) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < g.n && !changed; ++u) {
      if (!black[u]) continue;
      int white_nbr = -1, whites = 0;
      for (int w = 0; w < g.n; ++w)
        if (g.adj[u][w] && !black[w]) { ++whites; white_nbr = w; }
      if (whites == 1) { black[white_nbr] = true; changed = true; }
    }
  }
  return black;
}

inline std::vector<bool> close_positive(const SimpleGraph& g, std::vector<bool> black) {
  for (bool changed = true; changed;) {
    changed = false;
    // component labels of the white subgraph
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
      if (black[s] || comp[s] != -1) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.n; ++w)
          if (g.adj[v][w] && !black[w] && comp[w] == -1) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    for (int u = 0; u < g.n && !changed; ++u) {
      if (!black[u]) continue;
      std::vector<int> per_comp(ncomp, 0);
      std::vector<int> witness(ncomp, -1);
      for (int w = 0; w < g.n; ++w)
        if (g.adj[u][w] && !black[w]) { ++per_comp[comp[w]]; witness[comp[w]] = w; }
      for (int c = 0; c < ncomp && !changed; ++c)
        if (per_comp[c] == 1) { black[witness[c]] = true; changed = true; }
    }
  }
  return black;
}

inline bool forces_all(const SimpleGraph& g, unsigned long long mask, bool positive) {
  std::vector<bool> black(g.n, false);
  for (int v = 0; v < g.n; ++v)
    if ((mask >> v) & 1) black[v] = true;
  auto derived = positive ? close_positive(g, black) : close_standard(g, black);
  return std::all_of(derived.begin(), derived.end(), [](bool b) { return b; });
}

// Full subset sweep by ascending popcount.
inline int forcing_number(const SimpleGraph& g, bool positive) {
  for (int k = 1; k <= g.n; ++k)
    for (unsigned long long mask = 0; mask < (1ull << g.n); ++mask)
      if (__builtin_popcountll(mask) == k && forces_all(g, mask, positive)) return k;
  return -1;
}

inline bool induces_path_set(const SimpleGraph& g, const std::vector<int>& part) {
  const int k = static_cast<int>(part.size());
  int edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adj[part[i]][part[j]]) ++edges;
  if (edges != k - 1) return false;
  for (int i = 0; i < k; ++i) {
    int deg = 0;
    for (int j = 0; j < k; ++j)
      if (j != i && g.adj[part[i]][part[j]]) ++deg;
    if (deg > 2) return false;
  }
  // connectivity
  std::vector<bool> seen(k, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < k; ++j)
      if (!seen[j] && g.adj[part[i]][part[j]]) { seen[j] = true; ++count; stack.push_back(j); }
  }
  return count == k;
}

inline bool induces_tree_set(const SimpleGraph& g, const std::vector<int>& part) {
  const int k = static_cast<int>(part.size());
  int edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adj[part[i]][part[j]]) ++edges;
  if (edges != k - 1) return false;
  std::vector<bool> seen(k, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < k; ++j)
      if (!seen[j] && g.adj[part[i]][part[j]]) { seen[j] = true; ++count; stack.push_back(j); }
  }
  return count == k;
}

// Minimum partition into induced paths/trees by full enumeration of set
// partitions (restricted growth strings).
inline int min_cover(const SimpleGraph& g, bool trees) {
  int best = g.n;
  std::vector<int> assign(g.n, 0);
  const std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == g.n) {
      std::vector<std::vector<int>> parts(used);
      for (int i = 0; i < g.n; ++i) parts[assign[i]].push_back(i);
      for (const auto& part : parts)
        if (trees ? !induces_tree_set(g, part) : !induces_path_set(g, part)) return;
      best = std::min(best, used);
      return;
    }
    for (int p = 0; p <= used && p < best; ++p) {
      assign[v] = p;
      rec(v + 1, std::max(used, p + 1));
    }
  };
  rec(0, 0);
  return best;
}

// Minimum edge clique cover by breadth-first search over clique lists.
inline int clique_cover(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adj[i][j]) edges.emplace_back(i, j);
  if (edges.empty()) return 0;
  // all cliques (as vertex subsets)
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    bool ok = true;
    for (int i = 0; i < g.n && ok; ++i)
      for (int j = i + 1; j < g.n && ok; ++j)
        if (((mask >> i) & 1) && ((mask >> j) & 1) && !g.adj[i][j]) ok = false;
    if (ok && __builtin_popcount(mask) >= 2) cliques.push_back(mask);
  }
  int best = static_cast<int>(edges.size());
  std::vector<unsigned> chosen;
  const std::function<void()> dfs = [&]() {
    if (static_cast<int>(chosen.size()) >= best) return;
    int uncovered = -1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      bool cov = false;
      for (unsigned c : chosen)
        if (((c >> edges[e].first) & 1) && ((c >> edges[e].second) & 1)) cov = true;
      if (!cov) { uncovered = static_cast<int>(e); break; }
    }
    if (uncovered == -1) {
      best = static_cast<int>(chosen.size());
      return;
    }
    for (unsigned c : cliques) {
      if (((c >> edges[uncovered].first) & 1) && ((c >> edges[uncovered].second) & 1)) {
        chosen.push_back(c);
        dfs();
        chosen.pop_back();
      }
    }
  };
  dfs();
  return best;
}

}  // namespace oracle
