#pragma once

#include <optional>
#include <vector>

#include "zf/cover.hpp"
#include "zf/graph.hpp"

namespace zf {

enum class Rule { standard, positive };

std::string rule_name(Rule r);

struct Force {
  int forcer = -1;
  int forced = -1;
  int round = -1;
  // Positive rule only: the white component the force acted into,
  // taken at the start of the round. Empty under the standard rule.
  VertexSet component_witness;
};

struct ForcingRun {
  Graph graph;
  VertexSet initial;
  Rule rule = Rule::standard;
  std::vector<Force> forces;
  VertexSet derived;
  // Vertices the run was restricted to (defaults to all of V).
  VertexSet active;

  bool complete() const { return derived == active; }
};

// Runs the colour-change process to a fixed point. Round-synchronous
// semantics: all forces legal against the round-start state are applied
// simultaneously; when several vertices can force the same target, the
// smallest-index forcer is recorded; under the positive rule one forcer may
// force once into each component per round. This makes runs reproducible —
// the rules themselves do not prescribe an order.
ForcingRun closure(const Graph& g, VertexSet initial, Rule rule);

// As above, but forces are only applied between vertices with equal part
// ids, and vertices outside `active` do not exist for the process. Any
// schedule of part-respecting forces that blackens `active` exists iff this
// greedy one does, so a complete constrained run certifies that the parts
// are realisable as forcing chains / forcing trees.
ForcingRun closure_within(const Graph& g, VertexSet initial, Rule rule,
                          const std::vector<int>& part_of, VertexSet active);

bool is_forcing_set(const Graph& g, VertexSet initial, Rule rule);

// Maximal forcing chains (standard rule) or forcing trees (positive rule) of
// a complete run, one part per initial vertex. Throws if the run is not
// complete.
Cover extract_cover(const ForcingRun& run);

// Root (initial vertex) of each extracted part, aligned with extract_cover's
// part order.
std::vector<int> cover_roots(const ForcingRun& run);

}  // namespace zf
