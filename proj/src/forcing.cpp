#include "zf/forcing.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace zf {

std::string rule_name(Rule r) { return r == Rule::standard ? "standard" : "positive"; }

namespace {

ForcingRun run_closure(const Graph& g, VertexSet initial, Rule rule,
                       const std::vector<int>* part_of, VertexSet active) {
  if (!initial.subset_of(g.vertices()))
    throw std::invalid_argument("closure: initial set out of range");
  if (!initial.subset_of(active))
    throw std::invalid_argument("closure: initial set outside active vertices");

  ForcingRun run;
  run.graph = g;
  run.initial = initial;
  run.rule = rule;
  run.active = active;

  auto allowed = [&](int u, int w) {
    return part_of == nullptr || (*part_of)[static_cast<std::size_t>(u)] ==
                                     (*part_of)[static_cast<std::size_t>(w)];
  };

  VertexSet black = initial;
  for (int round = 0;; ++round) {
    std::array<int, 64> forcer_of;
    forcer_of.fill(-1);
    std::array<VertexSet, 64> witness_of;

    if (rule == Rule::standard) {
      black.for_each([&](int u) {
        VertexSet whites = (g.neighbors(u) & active) - black;
        if (whites.count() == 1) {
          const int w = whites.lowest();
          if (allowed(u, w) && forcer_of[static_cast<std::size_t>(w)] == -1)
            forcer_of[static_cast<std::size_t>(w)] = u;
        }
      });
    } else {
      for (const VertexSet& comp : components_within(g, active - black)) {
        black.for_each([&](int u) {
          VertexSet in_comp = g.neighbors(u) & comp;
          if (in_comp.count() == 1) {
            const int w = in_comp.lowest();
            if (allowed(u, w) && forcer_of[static_cast<std::size_t>(w)] == -1) {
              forcer_of[static_cast<std::size_t>(w)] = u;
              witness_of[static_cast<std::size_t>(w)] = comp;
            }
          }
        });
      }
    }

    bool any = false;
    (active - black).for_each([&](int w) {
      if (forcer_of[static_cast<std::size_t>(w)] >= 0) {
        run.forces.push_back(
            {forcer_of[static_cast<std::size_t>(w)], w, round, witness_of[static_cast<std::size_t>(w)]});
        any = true;
      }
    });
    if (!any) break;
    for (std::size_t i = run.forces.size(); i-- > 0 && run.forces[i].round == round;)
      black.add(run.forces[i].forced);
  }
  run.derived = black;
  return run;
}

}  // namespace

ForcingRun closure(const Graph& g, VertexSet initial, Rule rule) {
  return run_closure(g, initial, rule, nullptr, g.vertices());
}

ForcingRun closure_within(const Graph& g, VertexSet initial, Rule rule,
                          const std::vector<int>& part_of, VertexSet active) {
  return run_closure(g, initial, rule, &part_of, active);
}

bool is_forcing_set(const Graph& g, VertexSet initial, Rule rule) {
  return closure(g, initial, rule).complete();
}

Cover extract_cover(const ForcingRun& run) {
  if (!run.complete()) throw std::invalid_argument("extract_cover: run incomplete");
  std::array<int, 64> root_of;
  root_of.fill(-1);
  run.initial.for_each([&](int v) { root_of[static_cast<std::size_t>(v)] = v; });
  for (const Force& f : run.forces)
    root_of[static_cast<std::size_t>(f.forced)] = root_of[static_cast<std::size_t>(f.forcer)];

  Cover cover;
  cover.kind = run.rule == Rule::standard ? CoverKind::path_cover : CoverKind::tree_cover;
  run.initial.for_each([&](int r) {
    VertexSet part;
    run.active.for_each([&](int v) {
      if (root_of[static_cast<std::size_t>(v)] == r) part.add(v);
    });
    cover.parts.push_back(part);
  });
  return cover;
}

std::vector<int> cover_roots(const ForcingRun& run) {
  return run.initial.to_vector();
}

}  // namespace zf
