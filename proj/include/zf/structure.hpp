#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zf/cover.hpp"
#include "zf/graph.hpp"
#include "zf/solvers.hpp"

namespace zf {

// Blocks, cut vertices and block adjacency ------------------------------------

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted by (smallest vertex, then set order)
  VertexSet cut_vertices;
  std::vector<std::pair<int, int>> block_adjacency;  // indices sharing a vertex
};

BlockDecomposition block_decomposition(const Graph& g);

// Block-cycle graphs -----------------------------------------------------------

struct BlockCycleCertificate {
  struct Step {
    VertexSet block;
    int attach = -1;  // cut vertex shared with the rest; -1 for the last block
  };
  // Pendant-first removal order; replaying removals empties the graph.
  std::vector<Step> removal_order;
  int cycle_count = 0;

  bool unicyclic() const { return cycle_count == 1; }
};

// Certificate iff every block is an edge or a cycle (single vertices pass
// trivially). Throws on disconnected input.
std::optional<BlockCycleCertificate> classify_block_cycle(const Graph& g);
bool verify_block_cycle_certificate(const Graph& g, const BlockCycleCertificate& cert);

// Outerplanar embeddings -------------------------------------------------------

struct OuterEmbedding {
  std::vector<int> outer_order;  // every vertex exactly once, cyclic
  // Edges on the face containing all vertices; the rest are inner. An edge is
  // outer iff its endpoints are consecutive in the cyclic order restricted to
  // the edge's block.
  std::vector<std::pair<int, int>> outer_edges;
  std::vector<std::pair<int, int>> inner_edges;

  bool is_outer(int u, int v) const;
  int position(int v) const;  // index in outer_order

  std::vector<int> position_of;  // vertex -> index, filled by the recogniser
};

// Witness iff G is outerplanar. Throws on disconnected input.
std::optional<OuterEmbedding> outerplanar_embedding(const Graph& g);
// Restriction of a witness to an induced subgraph (same labels).
OuterEmbedding restrict_embedding(const Graph& g, const OuterEmbedding& emb, VertexSet keep);
// Checks ordering validity: adjacent consecutive vertices are outer, inner
// edges do not interleave, and outer edges are block-consecutive.
bool verify_outer_embedding(const Graph& g, const OuterEmbedding& emb);

// Chordality -------------------------------------------------------------------

struct ChordalPeo {
  std::vector<int> order;  // perfect elimination ordering
};

std::optional<ChordalPeo> chordal_peo(const Graph& g);
bool verify_peo(const Graph& g, const ChordalPeo& peo);

// k-trees and k-clusters ---------------------------------------------------------

struct KTreeCertificate {
  int k = 0;
  VertexSet base_clique;  // the final K_{k+1}
  struct Addition {
    int vertex = -1;
    VertexSet clique;  // the k-clique the vertex attaches to
  };
  std::vector<Addition> additions;  // construction order

  bool is_cluster = false;
  VertexSet cluster_base;            // H, when is_cluster
  std::vector<VertexSet> used_sets;  // S(G): distinct k-subsets of H used
};

std::optional<KTreeCertificate> k_tree_certificate(const Graph& g, int k);
bool verify_k_tree_certificate(const Graph& g, const KTreeCertificate& cert);

// Double paths and series of parallel paths -------------------------------------

struct ParallelPathsCertificate {
  // Ordered covering paths; layers.size() == 2 for a plain double path.
  // Orientations are chosen so that the cross edges between consecutive
  // layers are non-crossing (left ends aligned).
  std::vector<std::vector<int>> layers;

  bool series() const { return layers.size() > 2; }
  std::vector<int> left_endpoints() const;
  Cover as_cover(CoverKind kind = CoverKind::path_cover) const;
};

// Recognises a double path (2 covering paths) or a series of parallel paths.
// Throws std::invalid_argument when G is a path; recognition requires a
// connected input.
std::optional<ParallelPathsCertificate> double_path_certificate(const Graph& g,
                                                                SolveOptions opts = {});
// Validates a proposed layer partition (paths given as vertex sequences) and
// fixes consistent orientations. Returns nullopt if it is not a series of
// parallel paths.
std::optional<ParallelPathsCertificate> validate_series_partition(
    const Graph& g, const std::vector<std::vector<int>>& layers);

// Outer cyclic order induced by a double-path certificate (first path left to
// right, second path right to left).
std::vector<int> double_path_outer_order(const ParallelPathsCertificate& cert);

}  // namespace zf
