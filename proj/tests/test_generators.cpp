#include <doctest.h>

#include "zf/generators.hpp"
#include "zf/structure.hpp"

using namespace zf;

TEST_CASE("canonical graphs") {
  CHECK(canonical_cycle(5).m() == 5);
  Graph grid = canonical_grid(2, 3);
  CHECK(grid.n() == 6);
  CHECK(grid.m() == 7);
  Graph k23 = canonical_complete_bipartite(2, 3);
  CHECK(k23.n() == 5);
  CHECK(k23.m() == 6);
  CHECK_THROWS_AS(canonical_cycle(2), std::invalid_argument);
}

TEST_CASE("generators are deterministic per spec") {
  GenSpec spec{"outerplanar", {{"n", 9}, {"inner_keep", 0.5}}, 12345};
  CHECK(to_graph6(generate(spec)) == to_graph6(generate(spec)));
  GenSpec other = spec;
  other.seed = 54321;
  CHECK(to_graph6(generate(spec)) != to_graph6(generate(other)));
}

TEST_CASE("every generator output passes its recogniser") {
  Xorshift64 rng(61);
  for (int t = 0; t < 15; ++t) {
    Graph bc = random_block_cycle(1 + static_cast<int>(rng.below(4)), 5, rng.next());
    CHECK(classify_block_cycle(bc).has_value());

    Graph uni = random_unicyclic(1 + static_cast<int>(rng.below(4)), 5, rng.next());
    auto uc = classify_block_cycle(uni);
    REQUIRE(uc.has_value());
    CHECK(uc->unicyclic());

    Graph op = random_outerplanar(3 + static_cast<int>(rng.below(9)), 0.4, rng.next());
    CHECK(outerplanar_embedding(op).has_value());

    const int k = 2 + static_cast<int>(rng.below(2));
    Graph kt = random_k_tree(k + 1 + static_cast<int>(rng.below(6)), k, false, rng.next());
    auto cert = k_tree_certificate(kt, k);
    REQUIRE(cert.has_value());
    CHECK(verify_k_tree_certificate(kt, *cert));

    Graph ch = random_chordal(3 + static_cast<int>(rng.below(7)), rng.next());
    CHECK(chordal_peo(ch).has_value());
    CHECK(is_connected(ch));
  }
}

TEST_CASE("series generator outputs validate on consecutive pairs") {
  Xorshift64 rng(67);
  for (int t = 0; t < 15; ++t) {
    const int k = 2 + static_cast<int>(rng.below(3));
    std::vector<int> lengths;
    for (int i = 0; i < k; ++i) lengths.push_back(1 + static_cast<int>(rng.below(4)));
    for (int i = 0; i + 1 < k; ++i)  // adjacent single-vertex layers induce P_2
      if (lengths[i] == 1 && lengths[i + 1] == 1) lengths[i + 1] = 2;
    Graph g = random_series_parallel_paths(lengths, rng.next());
    std::vector<std::vector<int>> layers;
    int at = 0;
    for (int len : lengths) {
      std::vector<int> layer;
      for (int j = 0; j < len; ++j) layer.push_back(at++);
      layers.push_back(layer);
    }
    auto cert = validate_series_partition(g, layers);
    CHECK(cert.has_value());
  }
  CHECK_THROWS_AS(random_series_parallel_paths({1, 1}, 3), std::invalid_argument);
}

TEST_CASE("k_1 and base cases") {
  Graph base = random_k_tree(3, 2, true, 5);
  CHECK(base == canonical_complete(3));
  Graph single = random_block_cycle(1, 3, 9);
  CHECK(classify_block_cycle(single).has_value());
}
