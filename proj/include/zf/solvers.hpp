#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "zf/cover.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SolveOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  int lower_bound = 0;
};

struct ParameterResult {
  std::string parameter;
  int value = 0;
  std::optional<VertexSet> forcing_set;  // Z, Z+
  std::optional<Cover> cover;            // P, T, cc
  SearchStats stats;
};

// All five parameters are additive over connected components; each solver
// decomposes first and searches per component. Exceeding the node budget
// throws BudgetExceeded — there is no silent approximation.

// Ascending-cardinality subset search with closure checks, starting from the
// minimum-degree lower bound.
ParameterResult zero_forcing_number(const Graph& g, SolveOptions opts = {});
// Same search under the positive rule, starting from cardinality 1.
ParameterResult psd_forcing_number(const Graph& g, SolveOptions opts = {});

// Branch and bound over ordered vertex-to-part assignments; the smallest
// unassigned vertex either joins an open part or opens the next one.
ParameterResult path_cover_number(const Graph& g, SolveOptions opts = {});
ParameterResult tree_cover_number(const Graph& g, SolveOptions opts = {});

// Branch and bound over maximal cliques covering the edge set. An edgeless
// graph has cc = 0. Intended for small instances; governed by the budget.
ParameterResult edge_clique_cover_number(const Graph& g, SolveOptions opts = {});

namespace detail {

// Minimum path/tree cover of the whole graph with at most `max_parts` parts,
// optionally requiring `endpoint` to end up with in-part degree <= 1
// (path covers only). Returns nullopt when no such cover exists.
std::optional<Cover> bounded_cover_search(const Graph& g, CoverKind kind, int max_parts,
                                          std::optional<int> endpoint, SolveOptions opts,
                                          SearchStats* stats);

// Enumerates covers with exactly `part_count` parts; the callback returns
// false to stop early.
void enumerate_covers(const Graph& g, CoverKind kind, int part_count,
                      const std::function<bool(const Cover&)>& cb, SolveOptions opts);

}  // namespace detail

}  // namespace zf
