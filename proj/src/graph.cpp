#include "zf/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zf {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (n > VertexSet::max_vertices)
    throw std::invalid_argument("graph: more than 62 vertices unsupported");
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (!adj_[u].contains(v)) {
      adj_[u].add(v);
      adj_[v].add(u);
      ++m_;
    }
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] - VertexSet::full(u + 1);
    higher.for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  return Graph(n, pairs);
}

// graph6 ---------------------------------------------------------------------

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  const int header = static_cast<unsigned char>(s[0]);
  if (header < 63 || header > 126)
    throw std::invalid_argument("graph6: malformed header byte");
  if (header == 126)
    throw std::invalid_argument("graph6: long form (n > 62) unsupported");
  const int n = header - 63;
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: bit-payload length mismatch");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int c = static_cast<unsigned char>(s[1 + bit / 6]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad payload byte");
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
    }
  }
  for (; bit < 6 * nbytes; ++bit) {
    const int c = static_cast<unsigned char>(s[1 + bit / 6]);
    if ((c - 63) >> (5 - bit % 6) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// Edge-list text -------------------------------------------------------------

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = -1;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  long long u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw std::invalid_argument("edge list: trailing garbage");
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, const DotAnnotations& ann) {
  // Palette indices follow the graphviz "set312" colorscheme.
  std::ostringstream out;
  out << "graph G {\n";
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t p = 0; p < ann.cover_parts.size(); ++p)
    ann.cover_parts[p].for_each([&](int v) { part_of[static_cast<std::size_t>(v)] = static_cast<int>(p); });
  for (int v = 0; v < g.n(); ++v) {
    out << "  " << v << " [";
    if (ann.black.contains(v))
      out << "style=filled, fillcolor=black, fontcolor=white";
    else if (part_of[static_cast<std::size_t>(v)] >= 0)
      out << "style=filled, colorscheme=set312, fillcolor="
          << part_of[static_cast<std::size_t>(v)] % 12 + 1;
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Elementary operations ------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("induced_subgraph: member out of range");
  InducedSubgraph out;
  out.original_of = s.to_vector();
  std::vector<std::pair<int, int>> edges;
  const int k = static_cast<int>(out.original_of.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(out.original_of[a], out.original_of[b])) edges.emplace_back(a, b);
  out.graph = Graph(k, edges);
  return out;
}

VertexSum vertex_sum(const Graph& g, const Graph& h, int vg, int vh) {
  if (vg < 0 || vg >= g.n() || vh < 0 || vh >= h.n())
    throw std::invalid_argument("vertex_sum: vertex out of range");
  VertexSum out;
  out.map_g.resize(static_cast<std::size_t>(g.n()));
  out.map_h.resize(static_cast<std::size_t>(h.n()));
  for (int v = 0; v < g.n(); ++v) out.map_g[static_cast<std::size_t>(v)] = v;
  int next = g.n();
  for (int v = 0; v < h.n(); ++v)
    out.map_h[static_cast<std::size_t>(v)] = (v == vh) ? vg : next++;
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges())
    edges.emplace_back(out.map_h[static_cast<std::size_t>(u)], out.map_h[static_cast<std::size_t>(v)]);
  out.graph = Graph(next, edges);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet mask) {
  std::vector<VertexSet> comps;
  std::uint64_t rest = mask.bits;
  while (rest != 0) {
    std::uint64_t comp = rest & (~rest + 1);  // lowest remaining vertex
    for (;;) {
      std::uint64_t grown = comp;
      VertexSet(comp).for_each([&](int v) { grown |= g.neighbors(v).bits; });
      grown &= mask.bits;
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(VertexSet(comp));
    rest &= ~comp;
  }
  return comps;
}

int edges_within(const Graph& g, VertexSet mask) {
  int total = 0;
  mask.for_each([&](int v) { total += (g.neighbors(v) & mask).count(); });
  return total / 2;
}

bool is_connected_within(const Graph& g, VertexSet mask) {
  return mask.empty() || components_within(g, mask).size() == 1;
}

bool induces_path(const Graph& g, VertexSet mask) {
  if (mask.empty()) return false;
  if (edges_within(g, mask) != mask.count() - 1) return false;
  bool deg_ok = true;
  mask.for_each([&](int v) {
    if ((g.neighbors(v) & mask).count() > 2) deg_ok = false;
  });
  return deg_ok && is_connected_within(g, mask);
}

bool induces_tree(const Graph& g, VertexSet mask) {
  if (mask.empty()) return false;
  return edges_within(g, mask) == mask.count() - 1 && is_connected_within(g, mask);
}

bool induces_clique(const Graph& g, VertexSet mask) {
  const int k = mask.count();
  return edges_within(g, mask) == k * (k - 1) / 2;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

bool is_tree(const Graph& g) { return g.n() > 0 && induces_tree(g, g.vertices()); }

bool is_path_graph(const Graph& g) { return g.n() > 0 && induces_path(g, g.vertices()); }

int min_degree(const Graph& g) {
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

VertexSet path_endpoints(const Graph& g, VertexSet path) {
  VertexSet ends;
  path.for_each([&](int v) {
    if ((g.neighbors(v) & path).count() <= 1) ends.add(v);
  });
  return ends;
}

}  // namespace zf
