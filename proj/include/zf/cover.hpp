#pragma once

#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class CoverKind { path_cover, tree_cover, clique_edge_cover };

std::string cover_kind_name(CoverKind k);

// For path/tree covers the parts are pairwise disjoint and cover V(G).
// For clique edge covers the parts are cliques, may overlap, and together
// contain every edge of G.
struct Cover {
  CoverKind kind = CoverKind::path_cover;
  std::vector<VertexSet> parts;
};

bool is_valid_cover(const Graph& g, const Cover& cover);

// Parts sorted by their smallest member; identity-insensitive comparison.
std::vector<VertexSet> normalized_parts(const Cover& cover);
bool same_parts(const Cover& a, const Cover& b);

}  // namespace zf
