#include "zf/json_io.hpp"

namespace zf {

json to_json(VertexSet s) { return json(s.to_vector()); }

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}, {"graph6", to_graph6(g)}};
}

json to_json(const Cover& c) {
  json parts = json::array();
  for (const VertexSet& p : c.parts) parts.push_back(to_json(p));
  return {{"kind", cover_kind_name(c.kind)}, {"parts", parts}};
}

json to_json(const ForcingRun& run) {
  json forces = json::array();
  for (const Force& f : run.forces) {
    json entry = {{"forcer", f.forcer}, {"forced", f.forced}, {"round", f.round}};
    if (run.rule == Rule::positive) entry["component"] = to_json(f.component_witness);
    forces.push_back(entry);
  }
  return {{"rule", rule_name(run.rule)},
          {"initial", to_json(run.initial)},
          {"forces", forces},
          {"derived", to_json(run.derived)}};
}

json to_json(const ParameterResult& res) {
  json out = {{"parameter", res.parameter},
              {"value", res.value},
              {"stats", {{"nodes", res.stats.nodes}, {"lower_bound", res.stats.lower_bound}}}};
  if (res.forcing_set) out["certificate"] = to_json(*res.forcing_set);
  if (res.cover) out["certificate"] = to_json(*res.cover);
  return out;
}

json to_json(const BlockCycleCertificate& cert) {
  json steps = json::array();
  for (const auto& step : cert.removal_order)
    steps.push_back({{"block", to_json(step.block)}, {"attach", step.attach}});
  return {{"kind", cert.unicyclic() ? "unicyclic" : "block_cycle"},
          {"removal_order", steps},
          {"cycle_count", cert.cycle_count}};
}

json to_json(const OuterEmbedding& emb) {
  json outer = json::array(), inner = json::array();
  for (auto [u, v] : emb.outer_edges) outer.push_back({u, v});
  for (auto [u, v] : emb.inner_edges) inner.push_back({u, v});
  return {{"kind", "outer_embedding"},
          {"outer_order", emb.outer_order},
          {"outer_edges", outer},
          {"inner_edges", inner}};
}

json to_json(const ChordalPeo& peo) {
  return {{"kind", "chordal_peo"}, {"order", peo.order}};
}

json to_json(const KTreeCertificate& cert) {
  json adds = json::array();
  for (const auto& a : cert.additions)
    adds.push_back({{"vertex", a.vertex}, {"clique", to_json(a.clique)}});
  json out = {{"kind", cert.is_cluster ? "k_cluster" : "k_tree"},
              {"k", cert.k},
              {"base_clique", to_json(cert.base_clique)},
              {"additions", adds}};
  if (cert.is_cluster) {
    out["cluster_base"] = to_json(cert.cluster_base);
    json used = json::array();
    for (const VertexSet& s : cert.used_sets) used.push_back(to_json(s));
    out["used_sets"] = used;
  }
  return out;
}

json to_json(const ParallelPathsCertificate& cert) {
  return {{"kind", cert.series() ? "series_of_parallel_paths" : "double_path"},
          {"layers", cert.layers}};
}

json to_json(const FamilySolution& sol) {
  return {{"family", sol.family},
          {"rule", rule_name(sol.rule)},
          {"forcing_set", to_json(sol.forcing_set)},
          {"cover", to_json(sol.cover)},
          {"equalities", sol.equalities},
          {"run", to_json(sol.run)}};
}

json to_json(const GenSpec& spec) {
  return {{"family", spec.family}, {"params", spec.params}, {"seed", spec.seed}};
}

GenSpec genspec_from_json(const json& j) {
  GenSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("params"))
    spec.params = j.at("params").get<std::map<std::string, double>>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

}  // namespace zf
