#include "zf/cover.hpp"

#include <algorithm>

namespace zf {

std::string cover_kind_name(CoverKind k) {
  switch (k) {
    case CoverKind::path_cover: return "path_cover";
    case CoverKind::tree_cover: return "tree_cover";
    case CoverKind::clique_edge_cover: return "clique_edge_cover";
  }
  return "?";
}

bool is_valid_cover(const Graph& g, const Cover& cover) {
  for (const VertexSet& p : cover.parts)
    if (!p.subset_of(g.vertices())) return false;

  if (cover.kind == CoverKind::clique_edge_cover) {
    for (const VertexSet& p : cover.parts)
      if (!induces_clique(g, p)) return false;
    for (auto [u, v] : g.edges()) {
      bool covered = false;
      for (const VertexSet& p : cover.parts)
        if (p.contains(u) && p.contains(v)) { covered = true; break; }
      if (!covered) return false;
    }
    return true;
  }

  VertexSet seen;
  for (const VertexSet& p : cover.parts) {
    if (p.empty()) return false;
    if (seen.intersects(p)) return false;
    seen |= p;
    if (cover.kind == CoverKind::path_cover && !induces_path(g, p)) return false;
    if (cover.kind == CoverKind::tree_cover && !induces_tree(g, p)) return false;
  }
  return seen == g.vertices();
}

std::vector<VertexSet> normalized_parts(const Cover& cover) {
  std::vector<VertexSet> parts = cover.parts;
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool same_parts(const Cover& a, const Cover& b) {
  return normalized_parts(a) == normalized_parts(b);
}

}  // namespace zf
