#include <doctest.h>

#include "oracle.hpp"
#include "zf/generators.hpp"
#include "zf/solvers.hpp"

using namespace zf;

namespace {

oracle::SimpleGraph mirror(const Graph& g) {
  oracle::SimpleGraph ref(g.n());
  for (auto [u, v] : g.edges()) ref.add_edge(u, v);
  return ref;
}

}  // namespace

TEST_CASE("zero forcing number on named graphs") {
  CHECK(zero_forcing_number(canonical_path(5)).value == 1);
  CHECK(zero_forcing_number(canonical_complete(5)).value == 4);
  CHECK(zero_forcing_number(canonical_cycle(6)).value == 2);
  CHECK(zero_forcing_number(canonical_grid(3, 3)).value == 3);
  CHECK(zero_forcing_number(canonical_path(1)).value == 1);
}

TEST_CASE("positive forcing number on named graphs") {
  CHECK(psd_forcing_number(random_tree(7, 42)).value == 1);
  CHECK(psd_forcing_number(canonical_complete(4)).value == 3);
  CHECK(psd_forcing_number(canonical_complete_bipartite(2, 3)).value == 2);
}

TEST_CASE("path cover number on named graphs") {
  CHECK(path_cover_number(canonical_complete(4)).value == 2);
  CHECK(path_cover_number(canonical_path(9)).value == 1);
  CHECK(path_cover_number(canonical_cycle(5)).value == 2);
}

TEST_CASE("tree cover number on named graphs") {
  CHECK(tree_cover_number(random_tree(9, 7)).value == 1);
  CHECK(tree_cover_number(canonical_complete(5)).value == 3);
  CHECK(tree_cover_number(canonical_cycle(4)).value == 2);
}

TEST_CASE("edge clique cover number on named graphs") {
  CHECK(edge_clique_cover_number(canonical_complete(4)).value == 1);
  CHECK(edge_clique_cover_number(canonical_path(3)).value == 2);
  CHECK(edge_clique_cover_number(canonical_cycle(4)).value == 4);
  CHECK(edge_clique_cover_number(Graph(3, {})).value == 0);
}

TEST_CASE("certificates are feasible and sized to the value") {
  Xorshift64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    Graph g = random_er(2 + static_cast<int>(rng.below(7)), 0.5, rng.next());
    auto z = zero_forcing_number(g);
    CHECK(z.forcing_set->count() == z.value);
    CHECK(is_forcing_set(g, *z.forcing_set, Rule::standard));
    auto zp = psd_forcing_number(g);
    CHECK(zp.forcing_set->count() == zp.value);
    CHECK(is_forcing_set(g, *zp.forcing_set, Rule::positive));
    auto p = path_cover_number(g);
    CHECK(static_cast<int>(p.cover->parts.size()) == p.value);
    CHECK(is_valid_cover(g, *p.cover));
    auto tc = tree_cover_number(g);
    CHECK(static_cast<int>(tc.cover->parts.size()) == tc.value);
    CHECK(is_valid_cover(g, *tc.cover));
    auto cc = edge_clique_cover_number(g);
    CHECK(static_cast<int>(cc.cover->parts.size()) == cc.value);
    CHECK(is_valid_cover(g, *cc.cover));
  }
}

TEST_CASE("solvers agree with exhaustive oracles on small graphs") {
  Xorshift64 rng(5150);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_er(1 + static_cast<int>(rng.below(7)), 0.45, rng.next());
    oracle::SimpleGraph ref = mirror(g);
    if (components(g).size() == 1) {
      CHECK(zero_forcing_number(g).value == oracle::forcing_number(ref, false));
      CHECK(psd_forcing_number(g).value == oracle::forcing_number(ref, true));
    }
    CHECK(path_cover_number(g).value == oracle::min_cover(ref, false));
    CHECK(tree_cover_number(g).value == oracle::min_cover(ref, true));
    CHECK(edge_clique_cover_number(g).value == oracle::clique_cover(ref));
  }
}

TEST_CASE("parameters are additive over components") {
  Xorshift64 rng(64);
  for (int t = 0; t < 12; ++t) {
    Graph a = random_er(1 + static_cast<int>(rng.below(5)), 0.5, rng.next());
    Graph b = random_er(1 + static_cast<int>(rng.below(5)), 0.5, rng.next());
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(a.n() + u, a.n() + v);
    Graph both(a.n() + b.n(), edges);
    CHECK(zero_forcing_number(both).value ==
          zero_forcing_number(a).value + zero_forcing_number(b).value);
    CHECK(psd_forcing_number(both).value ==
          psd_forcing_number(a).value + psd_forcing_number(b).value);
    CHECK(path_cover_number(both).value ==
          path_cover_number(a).value + path_cover_number(b).value);
    CHECK(tree_cover_number(both).value ==
          tree_cover_number(a).value + tree_cover_number(b).value);
  }
}

TEST_CASE("budget exhaustion is an explicit error") {
  Graph g = canonical_grid(3, 4);
  SolveOptions tiny{5};
  CHECK_THROWS_AS(zero_forcing_number(g, tiny), BudgetExceeded);
  CHECK_THROWS_AS(path_cover_number(g, tiny), BudgetExceeded);
}

TEST_CASE("solvers reject the empty graph") {
  CHECK_THROWS_AS(zero_forcing_number(Graph{}), std::invalid_argument);
}

TEST_CASE("inequality chain holds") {
  Xorshift64 rng(8080);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_er(2 + static_cast<int>(rng.below(7)), 0.5, rng.next());
    const int z = zero_forcing_number(g).value;
    const int zp = psd_forcing_number(g).value;
    const int p = path_cover_number(g).value;
    const int tc = tree_cover_number(g).value;
    CHECK(tc <= zp);
    CHECK(zp <= z);
    CHECK(tc <= p);
    CHECK(p <= z);
    if (components(g).size() == 1 && g.n() >= 2) {
      CHECK(1 <= zp);
      CHECK(z <= g.n() - 1);
    }
  }
}
