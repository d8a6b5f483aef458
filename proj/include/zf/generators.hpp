#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Fixed xorshift64 sequence so that seeds are portable: the state is seeded
// with the token (0 maps to 0x9E3779B97F4A7C15) and each draw applies
// s ^= s << 13; s ^= s >> 7; s ^= s << 17 and returns s.
struct Xorshift64 {
  std::uint64_t state;

  explicit Xorshift64(std::uint64_t seed)
      : state(seed == 0 ? 0x9E3779B97F4A7C15ull : seed) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  // Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(double p) {
    return static_cast<double>(next() >> 11) / 9007199254740992.0 < p;
  }
};

// Reproducibility token: identical specs generate identical graphs.
struct GenSpec {
  std::string family;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

// Dispatcher over the named families below. Throws on unknown family or
// invalid parameters.
Graph generate(const GenSpec& spec);

// Named graphs (deterministic, no seed).
Graph canonical_path(int n);
Graph canonical_cycle(int n);
Graph canonical_complete(int n);
Graph canonical_complete_bipartite(int m, int n);
Graph canonical_grid(int rows, int cols);  // row-major labels

// Seeded families.
Graph random_tree(int n, std::uint64_t seed);
Graph random_er(int n, double p, std::uint64_t seed);

// Repeated vertex sums of edges and cycles; passes classify_block_cycle.
Graph random_block_cycle(int blocks, int max_cycle, std::uint64_t seed);
// Exactly one cycle block, remaining blocks are edges.
Graph random_unicyclic(int blocks, int max_cycle, std::uint64_t seed);

// Random triangulation of the n-gon, keeping each chord with probability
// inner_keep; the outer cycle persists, so the result is connected and
// outerplanar by construction.
Graph random_outerplanar(int n, double inner_keep, std::uint64_t seed);

// Inductive k-tree construction; when cluster_only, every new vertex
// attaches inside the starting K_{k+1}.
Graph random_k_tree(int n, int k, bool cluster_only, std::uint64_t seed);
// k-cluster hitting exactly s_size distinct k-subsets of the base clique;
// requires n - (k+1) >= s_size and s_size <= k+1.
Graph random_k_cluster(int n, int k, int s_size, std::uint64_t seed);

// Random k-tree (k in {2,3}) followed by attachment-edge deletions that are
// re-checked to preserve chordality and connectivity.
Graph random_chordal(int n, std::uint64_t seed);

// Stacked paths with monotone non-crossing cross edges between consecutive
// layers; consecutive pairs induce double paths. Layer i occupies
// consecutive labels. Throws when the lengths cannot avoid a path-shaped
// pair (e.g. two single-vertex layers).
Graph random_series_parallel_paths(const std::vector<int>& lengths, std::uint64_t seed);

}  // namespace zf
