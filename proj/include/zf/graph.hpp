#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency is stored as one bitmask per vertex. n is capped at 62 so that
// every graph round-trips through graph6 short form.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// Construction and formats ---------------------------------------------------

// Builds the simple graph, collapsing duplicate pairs and both orientations.
// Throws std::invalid_argument on out-of-range endpoints or self-loops.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

// graph6 short form (n <= 62), one graph per line. Strict: rejects long-form
// headers, payload length mismatches and nonzero padding bits.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Plain text edge list: first line "n", then one "u v" per line.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

struct DotAnnotations {
  VertexSet black;                      // filled vertices (forcing set)
  std::vector<VertexSet> cover_parts;   // colour classes
};
std::string to_dot(const Graph& g, const DotAnnotations& ann = {});

// Elementary operations ------------------------------------------------------

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_of;  // new label -> original label
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

struct VertexSum {
  Graph graph;
  std::vector<int> map_g;  // vertex of G -> vertex of the sum
  std::vector<int> map_h;  // vertex of H -> vertex of the sum
};
// Identifies vg in G with vh in H. |V| = |V(G)| + |V(H)| - 1.
VertexSum vertex_sum(const Graph& g, const Graph& h, int vg, int vh);

// Connected components as a partition of V(G), ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Mask-restricted predicates used by the solvers and recognisers ------------

std::vector<VertexSet> components_within(const Graph& g, VertexSet mask);
int edges_within(const Graph& g, VertexSet mask);
bool is_connected_within(const Graph& g, VertexSet mask);  // true for empty
bool induces_path(const Graph& g, VertexSet mask);
bool induces_tree(const Graph& g, VertexSet mask);
bool induces_clique(const Graph& g, VertexSet mask);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);
int min_degree(const Graph& g);

// Endpoints (vertices of in-mask degree <= 1) of an induced path.
VertexSet path_endpoints(const Graph& g, VertexSet path);

}  // namespace zf
