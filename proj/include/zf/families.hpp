#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/cover.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/solvers.hpp"
#include "zf/structure.hpp"

namespace zf {

// A constructive solution: a forcing set together with the cover its run
// realises as forcing chains (standard rule) or forcing trees (positive
// rule). Every constructor verifies the pairing by replaying a
// cover-constrained closure; a failed replay is a hard error.
struct FamilySolution {
  std::string family;
  Rule rule = Rule::standard;
  VertexSet forcing_set;
  Cover cover;
  std::vector<std::string> equalities;  // e.g. "Z=P", "Z+=T"
  ForcingRun run;

  int value() const { return forcing_set.count(); }
};

// One root per part realising the parts as chains/trees, or nullopt.
std::optional<ForcingRun> realize_cover(const Graph& g, const std::vector<VertexSet>& parts,
                                        VertexSet roots, Rule rule, VertexSet active);

// Zero forcing set and path cover of equal size for a block-cycle graph,
// built by attaching the certificate's blocks pendant-last. Whether a block
// attaches to a path end (no new part for edge blocks) is decided by a
// bounded exact search for an end-anchored minimum cover of the partial
// graph.
FamilySolution block_cycle_solution(const Graph& g, const BlockCycleCertificate& cert,
                                    SolveOptions opts = {});

// Left endpoints of the covering paths force along the paths; value equals
// the number of paths.
FamilySolution double_path_solution(const Graph& g, const ParallelPathsCertificate& cert);

// Given a 2-tree-cover (T1, T2) of a connected outerplanar non-tree G and a
// vertex v of T1, finds u in T2 such that {v, u} is a positive forcing set
// whose forcing trees are T1 and T2. Cut pairs {v, u} are preferred.
std::pair<int, FamilySolution> double_tree_cut_pair(const Graph& g, VertexSet t1, VertexSet t2,
                                                    int v);

struct CoverClassification {
  std::optional<int> pendant;                      // index of a pendant tree
  std::optional<std::pair<int, int>> consecutive;  // both degree 2 in H_T, adjacent
  // Present when only a consecutive pair exists: the rewritten cover in
  // which part s1_index is pendant and adjacent only to part s2_index.
  std::optional<Cover> transformed;
  int s1_index = -1, s2_index = -1;
  int split_part = -1, other_part = -1;       // original indices
  std::pair<int, int> bridge_edge{-1, -1};    // (split side, other side)
};

// Pendant tree of a minimum tree cover, or a consecutive pair plus the
// pendant-making rewrite. Throws when the cover is invalid or not minimum.
CoverClassification consecutive_or_pendant_trees(const Graph& g, const OuterEmbedding& emb,
                                                 const Cover& cover, SolveOptions opts = {});

// Positive forcing set of size T(G) whose forcing trees are the parts of a
// minimum tree cover (computed by the exact solver): peel pendant trees,
// rewriting via consecutive_or_pendant_trees where needed, and lift the
// recursive forcing set across the peeled double tree.
FamilySolution outerplanar_solution(const Graph& g, const OuterEmbedding& emb,
                                    SolveOptions opts = {});

// Solution for the vertex sum, merging the two trees that contain the
// identified vertex. Value is |g| + |h| sides' values minus one.
FamilySolution compose_vertex_sum(const FamilySolution& g_sol, int vg,
                                  const FamilySolution& h_sol, int vh);

struct KClusterValues {
  int z_plus = 0;
  int tree_cover = 0;
};
// Closed forms from the cluster's set of used k-subsets; odd k uses the
// general odd k-tree tree cover value.
KClusterValues k_cluster_parameters(const KTreeCertificate& cert);

// Tree cover of size (k+1)/2 for a k-tree with odd k: pair up the base
// clique, then each added vertex joins the unique part meeting its
// attachment clique in exactly one vertex.
Cover k_tree_tree_cover_odd(const Graph& g, const KTreeCertificate& cert);

// Predicted positive forcing number n - cc(G) for a chordal graph.
int chordal_psd_identity(const Graph& g, const ChordalPeo& peo, SolveOptions opts = {});

// Two disjoint paths of m and n vertices with the first k vertices of the
// first path joined to every vertex of the second.
Graph p2_interval_witness(int m, int n, int k);

}  // namespace zf
