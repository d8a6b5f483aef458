// Command-line front end: compute graph parameters, run the verification
// suites, probe the vertex-sum conjecture, and generate family instances.
//
// Exit codes: 0 success / all checks pass, 1 property failure,
// 2 usage or parse error, 3 search budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zf/families.hpp"
#include "zf/json_io.hpp"
#include "zf/verify.hpp"

namespace {

zf::Graph read_graph(const std::string& g6, const std::string& path) {
  if (!g6.empty()) return zf::parse_graph6(g6);
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // graph6 if the first line has no spaces, else "n\nu v\n..." edge list
  const auto first_nl = text.find('\n');
  const std::string first = text.substr(0, first_nl);
  if (first.find(' ') == std::string::npos && !first.empty() &&
      (first[0] < '0' || first[0] > '9'))
    return zf::parse_graph6(first);
  return zf::parse_edge_list_text(text);
}

int cmd_compute(const std::string& g6, const std::string& input, std::vector<std::string> params,
                const std::string& dot_path, const std::string& format, std::uint64_t budget) {
  zf::Graph g = read_graph(g6, input);
  if (params.empty()) params = {"Z", "Z+", "P", "T", "cc"};
  zf::SolveOptions opts{budget};
  zf::json out;
  out["graph"] = zf::to_json(g);
  zf::VertexSet dot_black;
  std::vector<zf::VertexSet> dot_parts;
  for (const std::string& p : params) {
    zf::ParameterResult res;
    if (p == "Z") res = zf::zero_forcing_number(g, opts);
    else if (p == "Z+" || p == "Zp") res = zf::psd_forcing_number(g, opts);
    else if (p == "P") res = zf::path_cover_number(g, opts);
    else if (p == "T") res = zf::tree_cover_number(g, opts);
    else if (p == "cc") res = zf::edge_clique_cover_number(g, opts);
    else throw CLI::ValidationError("unknown parameter " + p);
    // Certificates are re-verified before they are printed.
    if (res.forcing_set) {
      const zf::Rule rule = p == "Z" ? zf::Rule::standard : zf::Rule::positive;
      if (!zf::is_forcing_set(g, *res.forcing_set, rule))
        throw std::logic_error("certificate failed re-verification");
      dot_black = *res.forcing_set;
    }
    if (res.cover && !zf::is_valid_cover(g, *res.cover))
      throw std::logic_error("certificate failed re-verification");
    if (res.cover && res.parameter != "cc") dot_parts = res.cover->parts;
    out["results"].push_back(zf::to_json(res));
    if (format == "text")
      std::cout << res.parameter << " = " << res.value << "\n";
  }
  if (format != "text") std::cout << out.dump(2) << "\n";
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    dot << zf::to_dot(g, {dot_black, dot_parts});
  }
  return 0;
}

int cmd_verify(const std::string& suite, int trials, int max_n, std::uint64_t seed,
               std::uint64_t budget, const std::string& format) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = zf::suite_names();
  else
    suites.push_back(suite);
  zf::SolveOptions opts{budget};
  bool all_ok = true;
  for (const std::string& name : suites) {
    zf::SuiteSummary summary = zf::run_suite(name, trials, max_n, seed, opts, [&](const zf::InstanceReport& rep) {
      if (format == "text") {
        if (!rep.ok) {
          std::cout << name << " FAIL " << rep.graph6 << "\n";
          for (const auto& c : rep.checks)
            if (!c.pass)
              std::cout << "  " << c.name << ": expected " << c.expected << ", got "
                        << c.observed << "\n";
        }
        return;
      }
      zf::json line{{"suite", rep.suite},
                    {"graph6", rep.graph6},
                    {"ok", rep.ok},
                    {"ms", rep.millis}};
      if (rep.spec) line["instance"] = zf::to_json(*rep.spec);
      for (const auto& c : rep.checks)
        line["checks"].push_back({{"name", c.name},
                                  {"expected", c.expected},
                                  {"observed", c.observed},
                                  {"pass", c.pass}});
      std::cout << line.dump() << "\n";
    });
    std::cerr << name << ": " << summary.instances - summary.failures << "/"
              << summary.instances << " instances ok\n";
    all_ok = all_ok && summary.failures == 0;
  }
  return all_ok ? 0 : 1;
}

int cmd_search(int max_n, std::uint64_t budget, std::uint64_t seed, std::uint64_t node_budget,
               const std::string& format) {
  zf::SolveOptions opts{node_budget};
  zf::ConjectureReport rep = zf::search_conjecture(max_n, budget, seed, opts,
                                                   [&](const zf::InstanceReport& line) {
    if (format == "text") return;
    zf::json j{{"suite", line.suite}, {"graph6", line.graph6}, {"ok", line.ok}};
    for (const auto& c : line.checks)
      j["checks"].push_back(
          {{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}});
    std::cout << j.dump() << "\n";
  });
  zf::json summary{{"sums_examined", rep.sums_examined},
                   {"z_ne_p", rep.z_ne_p},
                   {"covers_checked", rep.covers_checked},
                   {"covers_not_chains", rep.covers_not_chains},
                   {"budget_exhausted", rep.budget_exhausted}};
  std::cout << summary.dump(2) << "\n";
  return 0;  // report-only command
}

int cmd_gen(const std::string& spec_json, const std::string& family, std::uint64_t seed,
            const std::vector<std::string>& kv) {
  zf::GenSpec spec;
  if (!spec_json.empty()) {
    spec = zf::genspec_from_json(zf::json::parse(spec_json));
  } else {
    spec.family = family;
    spec.seed = seed;
    for (const std::string& pair : kv) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("expected key=value: " + pair);
      spec.params[pair.substr(0, eq)] = std::stod(pair.substr(eq + 1));
    }
  }
  std::cout << zf::to_graph6(zf::generate(spec)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing / cover parameter laboratory"};
  app.require_subcommand(1);

  std::string g6, input, dot_path, format = "json";
  std::vector<std::string> params;
  std::uint64_t budget = 100'000'000, seed = 1;
  int trials = 50, max_n = 10;

  auto* compute = app.add_subcommand("compute", "compute parameters of one graph");
  compute->add_option("--g6", g6, "graph6 string");
  compute->add_option("--input", input, "graph6 or edge-list file (- for stdin)");
  compute->add_option("--params", params, "subset of Z, Z+, P, T, cc")->delimiter(',');
  compute->add_option("--dot", dot_path, "write annotated DOT here");
  compute->add_option("--budget", budget, "search node budget");
  compute->add_option("--format", format, "json or text");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--trials", trials, "instances per suite");
  verify->add_option("--max-n", max_n, "largest instance size");
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--budget", budget, "search node budget");
  verify->add_option("--format", format, "json or text");

  std::uint64_t pair_budget = 4000;
  auto* search = app.add_subcommand("search", "vertex-sum conjecture probe");
  search->add_option("--max-n", max_n, "largest summand size");
  search->add_option("--budget", pair_budget, "maximum sums to examine");
  search->add_option("--seed", seed, "generator seed");
  search->add_option("--node-budget", budget, "search node budget per solve");
  search->add_option("--format", format, "json or text");

  std::string spec_json, family;
  std::vector<std::string> kv;
  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  gen->add_option("--spec", spec_json, "GenSpec as inline JSON");
  gen->add_option("--family", family, "family name");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--param", kv, "key=value (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(g6, input, params, dot_path, format, budget);
    if (verify->parsed()) return cmd_verify(suite, trials, max_n, seed, budget, format);
    if (search->parsed()) return cmd_search(max_n, pair_budget, seed, budget, format);
    if (gen->parsed()) return cmd_gen(spec_json, family, seed, kv);
  } catch (const zf::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
