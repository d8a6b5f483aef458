#include <doctest.h>

#include "zf/generators.hpp"
#include "zf/structure.hpp"

using namespace zf;

namespace {

Graph bowtie() { return vertex_sum(canonical_cycle(3), canonical_cycle(3), 0, 0).graph; }

}  // namespace

TEST_CASE("block decomposition of small graphs") {
  auto bt = block_decomposition(bowtie());
  CHECK(bt.blocks.size() == 2);
  CHECK(bt.cut_vertices.count() == 1);
  CHECK(bt.block_adjacency.size() == 1);

  auto p4 = block_decomposition(canonical_path(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices.count() == 2);

  auto c5 = block_decomposition(canonical_cycle(5));
  CHECK(c5.blocks.size() == 1);
  CHECK(c5.cut_vertices.empty());

  // every edge lies in exactly one block
  Xorshift64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_er(2 + static_cast<int>(rng.below(9)), 0.35, rng.next());
    auto dec = block_decomposition(g);
    for (auto [u, v] : g.edges()) {
      int holders = 0;
      for (const VertexSet& b : dec.blocks)
        if (b.contains(u) && b.contains(v)) ++holders;
      CHECK(holders == 1);
    }
  }
}

TEST_CASE("block-cycle classification") {
  Xorshift64 rng(23);
  for (int t = 0; t < 10; ++t) {
    Graph tree = random_tree(2 + static_cast<int>(rng.below(9)), rng.next());
    auto cert = classify_block_cycle(tree);
    REQUIRE(cert.has_value());
    CHECK(cert->cycle_count == 0);
    CHECK(verify_block_cycle_certificate(tree, *cert));
  }
  auto bt = classify_block_cycle(bowtie());
  REQUIRE(bt.has_value());
  CHECK(bt->cycle_count == 2);
  CHECK(verify_block_cycle_certificate(bowtie(), *bt));

  CHECK_FALSE(classify_block_cycle(canonical_complete(4)).has_value());
  CHECK_THROWS_AS(classify_block_cycle(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("pendant block replay invariant") {
  Xorshift64 rng(29);
  for (int t = 0; t < 25; ++t) {
    Graph g = random_block_cycle(1 + static_cast<int>(rng.below(5)), 5, rng.next());
    auto cert = classify_block_cycle(g);
    REQUIRE(cert.has_value());
    CHECK(verify_block_cycle_certificate(g, *cert));
  }
}

TEST_CASE("outerplanar embeddings exist exactly for outerplanar graphs") {
  auto c6 = outerplanar_embedding(canonical_cycle(6));
  REQUIRE(c6.has_value());
  CHECK(c6->inner_edges.empty());
  CHECK(verify_outer_embedding(canonical_cycle(6), *c6));

  CHECK_FALSE(outerplanar_embedding(canonical_complete(4)).has_value());
  CHECK_FALSE(outerplanar_embedding(canonical_complete_bipartite(2, 3)).has_value());
  CHECK_THROWS_AS(outerplanar_embedding(Graph(2, {})), std::invalid_argument);

  Xorshift64 rng(37);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng.below(10));
    Graph g = random_outerplanar(n, 0.6, rng.next());
    auto emb = outerplanar_embedding(g);
    REQUIRE(emb.has_value());
    CHECK(verify_outer_embedding(g, *emb));
  }
  // graphs with cut vertices
  for (int t = 0; t < 15; ++t) {
    Graph a = random_outerplanar(3 + static_cast<int>(rng.below(5)), 0.5, rng.next());
    Graph b = random_tree(2 + static_cast<int>(rng.below(5)), rng.next());
    Graph g = vertex_sum(a, b, static_cast<int>(rng.below(static_cast<std::uint64_t>(a.n()))),
                         static_cast<int>(rng.below(static_cast<std::uint64_t>(b.n()))))
                  .graph;
    auto emb = outerplanar_embedding(g);
    REQUIRE(emb.has_value());
    CHECK(verify_outer_embedding(g, *emb));
  }
}

TEST_CASE("maximal outerplanar generation hits the edge bound") {
  for (int n = 3; n <= 12; ++n) {
    Graph g = random_outerplanar(n, 1.0, 99 + static_cast<std::uint64_t>(n));
    CHECK(g.m() == 2 * n - 3);
    CHECK(outerplanar_embedding(g).has_value());
  }
}

TEST_CASE("chordal recognition") {
  Xorshift64 rng(41);
  for (int t = 0; t < 10; ++t) {
    Graph tree = random_tree(2 + static_cast<int>(rng.below(9)), rng.next());
    auto peo = chordal_peo(tree);
    REQUIRE(peo.has_value());
    CHECK(verify_peo(tree, *peo));
  }
  CHECK_FALSE(chordal_peo(canonical_cycle(4)).has_value());
  CHECK(chordal_peo(canonical_complete(4)).has_value());
  CHECK(chordal_peo(Graph{}).has_value());
}

TEST_CASE("k-tree certificates") {
  // K_3 plus one vertex on an edge: 2-tree and 2-cluster with one used set
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}});
  auto cert = k_tree_certificate(g, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->is_cluster);
  CHECK(cert->used_sets.size() == 1);
  CHECK(verify_k_tree_certificate(g, *cert));

  CHECK_FALSE(k_tree_certificate(canonical_path(4), 2).has_value());

  // K_4 plus two vertices on distinct triangles: 3-cluster with |S| = 2
  Graph h(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
              {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {5, 3}});
  auto hc = k_tree_certificate(h, 3);
  REQUIRE(hc.has_value());
  CHECK(hc->is_cluster);
  CHECK(hc->used_sets.size() == 2);

  Xorshift64 rng(53);
  for (int t = 0; t < 20; ++t) {
    const int k = 2 + static_cast<int>(rng.below(3));
    const int n = k + 1 + static_cast<int>(rng.below(7));
    Graph kt = random_k_tree(n, k, rng.chance(0.5), rng.next());
    auto c = k_tree_certificate(kt, k);
    REQUIRE(c.has_value());
    CHECK(verify_k_tree_certificate(kt, *c));
    if (c->is_cluster)
      CHECK(static_cast<int>(c->used_sets.size()) <= k + 1);
  }
}

TEST_CASE("k-cluster generator hits the requested set count") {
  Xorshift64 rng(59);
  for (int k = 2; k <= 4; ++k) {
    for (int s = 1; s <= k + 1; ++s) {
      const int n = k + 1 + s + 2;
      if (n > 13) continue;
      Graph g = random_k_cluster(n, k, s, rng.next());
      auto cert = k_tree_certificate(g, k);
      REQUIRE(cert.has_value());
      CHECK(cert->is_cluster);
      CHECK(static_cast<int>(cert->used_sets.size()) == s);
    }
  }
}

TEST_CASE("double path recognition") {
  Graph c4 = canonical_cycle(4);
  auto cert = double_path_certificate(c4);
  REQUIRE(cert.has_value());
  CHECK(cert->layers.size() == 2);

  auto grid = double_path_certificate(canonical_grid(3, 3));
  REQUIRE(grid.has_value());
  CHECK(grid->layers.size() == 3);

  CHECK_FALSE(double_path_certificate(canonical_complete(4)).has_value());
  CHECK_THROWS_AS(double_path_certificate(canonical_path(5)), std::invalid_argument);
}

TEST_CASE("series partitions validate") {
  Graph grid = canonical_grid(3, 4);
  std::vector<std::vector<int>> rows = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  auto cert = validate_series_partition(grid, rows);
  REQUIRE(cert.has_value());
  CHECK(cert->layers.size() == 3);

  std::vector<std::vector<int>> wrong = {{0, 1, 2, 3}, {8, 9, 10, 11}, {4, 5, 6, 7}};
  CHECK_FALSE(validate_series_partition(grid, wrong).has_value());
}
