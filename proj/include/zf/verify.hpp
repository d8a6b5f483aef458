#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zf/generators.hpp"
#include "zf/graph.hpp"
#include "zf/solvers.hpp"

namespace zf {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct InstanceReport {
  std::string suite;
  std::string graph6;
  std::optional<GenSpec> spec;
  std::vector<CheckResult> checks;
  bool ok = true;
  double millis = 0;
};

struct SuiteSummary {
  std::string suite;
  int instances = 0;
  int failures = 0;
  bool budget_exhausted = false;
};

using ReportSink = std::function<void(const InstanceReport&)>;

// Property suites over seeded generated instances. Every failure line
// carries the instance (graph6 and generator spec) for replay.
//   named_graphs      Z/P on paths and complete graphs, Z+ on trees
//   block_cycle_ZP    Z = P and realised chains on random block-cycle graphs
//   unicyclic_ZP      Z = P on random unicyclic graphs
//   double_path       parallel-path solutions vs brute force, grids
//   p2_interval       2-path-cover witnesses with prescribed Z
//   outerplanar_ZT    Z+ = T and realised trees on random outerplanar graphs
//   vertex_sum        T and Z+ additivity under vertex sums
//   kcluster_formulas closed forms for k-clusters vs brute force
//   odd_k_tree_cover  (k+1)/2 tree cover for odd k
//   chordal_identity  Z+ = n - cc on random chordal graphs
//   inequality_chain  T <= Z+ <= Z, T <= P <= Z plus certificate validity
std::vector<std::string> suite_names();

SuiteSummary run_suite(const std::string& name, int trials, int max_n, std::uint64_t seed,
                       SolveOptions opts, const ReportSink& sink);

// Vertex-sum conjecture probe: pairs of generated graphs with Z = P, summed
// at every identification choice, reporting Z and P of each sum. Also probes
// whether minimum path covers of Z = P instances are realisable as forcing
// chains. Reports only; counterexamples do not make it fail.
struct ConjectureReport {
  int sums_examined = 0;
  int z_ne_p = 0;                  // sums with Z != P
  int covers_checked = 0;          // minimum covers examined by the probe
  int covers_not_chains = 0;       // minimum covers not realisable as chains
  bool budget_exhausted = false;
};

ConjectureReport search_conjecture(int max_n_per_side, std::uint64_t budget, std::uint64_t seed,
                                   SolveOptions opts, const ReportSink& sink);

}  // namespace zf
