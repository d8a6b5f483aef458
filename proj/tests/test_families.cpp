#include <doctest.h>

#include "zf/families.hpp"
#include "zf/generators.hpp"

using namespace zf;

namespace {

Graph bowtie() { return vertex_sum(canonical_cycle(3), canonical_cycle(3), 0, 0).graph; }

FamilySolution psd_solution(const Graph& g) {
  return outerplanar_solution(g, *outerplanar_embedding(g));
}

}  // namespace

TEST_CASE("block-cycle solutions match the exact parameters") {
  Graph c5 = canonical_cycle(5);
  FamilySolution sol = block_cycle_solution(c5, *classify_block_cycle(c5));
  CHECK(sol.value() == 2);
  REQUIRE(sol.cover.parts.size() == 2);
  const int small = std::min(sol.cover.parts[0].count(), sol.cover.parts[1].count());
  const int large = std::max(sol.cover.parts[0].count(), sol.cover.parts[1].count());
  CHECK(small == 1);
  CHECK(large == 4);

  Xorshift64 rng(71);
  for (int t = 0; t < 10; ++t) {
    Graph tree = random_tree(2 + static_cast<int>(rng.below(9)), rng.next());
    FamilySolution ts = block_cycle_solution(tree, *classify_block_cycle(tree));
    CHECK(ts.value() == path_cover_number(tree).value);
    CHECK(same_parts(extract_cover(ts.run), ts.cover));
  }

  FamilySolution bt = block_cycle_solution(bowtie(), *classify_block_cycle(bowtie()));
  CHECK(bt.value() == 3);
  CHECK(zero_forcing_number(bowtie()).value == 3);
  CHECK(path_cover_number(bowtie()).value == 3);
}

TEST_CASE("block-cycle edge attachment at an interior vertex") {
  // C_4 with a pendant vertex on 1: the cover must re-anchor so Z = P = 2.
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
  FamilySolution sol = block_cycle_solution(g, *classify_block_cycle(g));
  CHECK(sol.value() == 2);
  CHECK(zero_forcing_number(g).value == 2);
}

TEST_CASE("double path solutions use left endpoints") {
  Graph c4 = canonical_cycle(4);
  auto cert = double_path_certificate(c4);
  REQUIRE(cert.has_value());
  FamilySolution sol = double_path_solution(c4, *cert);
  CHECK(sol.value() == 2);
  CHECK(same_parts(extract_cover(sol.run), sol.cover));

  Graph grid = canonical_grid(3, 3);
  auto rows = validate_series_partition(grid, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  REQUIRE(rows.has_value());
  FamilySolution gs = double_path_solution(grid, *rows);
  CHECK(gs.value() == 3);
  CHECK(zero_forcing_number(grid).value == 3);

  Graph ladder = canonical_grid(2, 4);
  auto lc = double_path_certificate(ladder);
  REQUIRE(lc.has_value());
  CHECK(double_path_solution(ladder, *lc).value() == 2);
  CHECK(zero_forcing_number(ladder).value == 2);
}

TEST_CASE("double tree cut pairs") {
  Graph c4 = canonical_cycle(4);
  for (int v : {0, 1}) {
    auto [u, sol] = double_tree_cut_pair(c4, VertexSet::of({0, 1}), VertexSet::of({2, 3}), v);
    CHECK(sol.value() == 2);
    CHECK(VertexSet::of({2, 3}).contains(u));
    CHECK(same_parts(extract_cover(sol.run), sol.cover));
  }

  Graph c3 = canonical_cycle(3);
  auto [u, sol] = double_tree_cut_pair(c3, VertexSet::of({0, 1}), VertexSet::single(2), 0);
  CHECK(u == 2);
  CHECK(sol.value() == 2);

  CHECK_THROWS_AS(double_tree_cut_pair(canonical_complete_bipartite(2, 3),
                                       VertexSet::of({0, 2, 3}), VertexSet::of({1, 4}), 0),
                  std::invalid_argument);
}

TEST_CASE("consecutive or pendant classification") {
  Graph c6 = canonical_cycle(6);
  Cover two{CoverKind::tree_cover, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}};
  auto cls = consecutive_or_pendant_trees(c6, *outerplanar_embedding(c6), two);
  CHECK(cls.pendant.has_value());  // with two trees each is adjacent only to the other

  Graph p5 = canonical_path(5);
  Cover one{CoverKind::tree_cover, {p5.vertices()}};
  auto single = consecutive_or_pendant_trees(p5, *outerplanar_embedding(p5), one);
  CHECK(single.pendant == 0);

  // C_9 in three arcs is not minimum (T = 2), so the classifier must refuse.
  Graph c9 = canonical_cycle(9);
  Cover arcs{CoverKind::tree_cover,
             {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5}), VertexSet::of({6, 7, 8})}};
  CHECK_THROWS_AS(consecutive_or_pendant_trees(c9, *outerplanar_embedding(c9), arcs),
                  std::invalid_argument);
}

TEST_CASE("consecutive pair rewrite produces a pendant tree") {
  // Triangle of triangles: a 2-connected outerplanar graph whose minimum
  // tree covers can lack a pendant tree.
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 0}});
  auto emb = outerplanar_embedding(g);
  REQUIRE(emb.has_value());
  Cover cover = *tree_cover_number(g).cover;
  auto cls = consecutive_or_pendant_trees(g, *emb, cover);
  if (!cls.pendant) {
    REQUIRE(cls.transformed.has_value());
    CHECK(is_valid_cover(g, *cls.transformed));
    CHECK(cls.transformed->parts.size() == cover.parts.size());
  }
}

TEST_CASE("outerplanar solutions realise a minimum tree cover") {
  Graph c5 = canonical_cycle(5);
  FamilySolution sol = psd_solution(c5);
  CHECK(sol.value() == 2);
  CHECK(psd_forcing_number(c5).value == 2);
  CHECK(tree_cover_number(c5).value == 2);

  Xorshift64 rng(73);
  for (int t = 0; t < 8; ++t) {
    Graph tree = random_tree(2 + static_cast<int>(rng.below(8)), rng.next());
    FamilySolution ts = psd_solution(tree);
    CHECK(ts.value() == 1);
  }

  // maximal outerplanar fan on 6 vertices
  Graph fan(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  FamilySolution fs = psd_solution(fan);
  CHECK(fs.value() == 2);
  CHECK(psd_forcing_number(fan).value == 2);
  CHECK(same_parts(extract_cover(fs.run), fs.cover));
}

TEST_CASE("vertex sum composition") {
  Graph c3 = canonical_cycle(3);
  FamilySolution tri = psd_solution(c3);
  FamilySolution bt = compose_vertex_sum(tri, 0, tri, 0);
  CHECK(bt.value() == 3);
  CHECK(psd_forcing_number(bowtie()).value == 3);

  Graph t1 = random_tree(5, 3), t2 = random_tree(4, 9);
  FamilySolution ts = compose_vertex_sum(psd_solution(t1), 2, psd_solution(t2), 1);
  CHECK(ts.value() == 1);

  Graph c4 = canonical_cycle(4);
  Graph p3 = canonical_path(3);
  FamilySolution cp = compose_vertex_sum(psd_solution(c4), 1, psd_solution(p3), 0);
  CHECK(cp.value() == 2);
  Graph sum = vertex_sum(c4, p3, 1, 0).graph;
  CHECK(psd_forcing_number(sum).value == 2);
}

TEST_CASE("k-cluster closed forms") {
  // k = 2, |S| = 3: Z+ = 3 and T = 3
  Graph a = random_k_cluster(7, 2, 3, 5);
  auto ca = k_tree_certificate(a, 2);
  REQUIRE(ca.has_value());
  auto va = k_cluster_parameters(*ca);
  CHECK(va.z_plus == 3);
  CHECK(va.tree_cover == 3);

  // k = 2, |S| = 1: Z+ = 2 and T = 2
  Graph b = random_k_cluster(6, 2, 1, 6);
  auto cb = k_tree_certificate(b, 2);
  auto vb = k_cluster_parameters(*cb);
  CHECK(vb.z_plus == 2);
  CHECK(vb.tree_cover == 2);

  // k = 3, |S| < 3: Z+ = 3 and T = 2
  Graph c = random_k_cluster(7, 3, 2, 7);
  auto cc_ = k_tree_certificate(c, 3);
  auto vc = k_cluster_parameters(*cc_);
  CHECK(vc.z_plus == 3);
  CHECK(vc.tree_cover == 2);
}

TEST_CASE("odd k-tree tree covers") {
  Graph k4 = canonical_complete(4);
  auto cert = k_tree_certificate(k4, 3);
  REQUIRE(cert.has_value());
  Cover cover = k_tree_tree_cover_odd(k4, *cert);
  CHECK(cover.parts.size() == 2);
  CHECK(is_valid_cover(k4, cover));

  Graph t1 = random_tree(6, 11);
  auto c1 = k_tree_certificate(t1, 1);
  REQUIRE(c1.has_value());
  CHECK(k_tree_tree_cover_odd(t1, *c1).parts.size() == 1);

  Graph t3 = random_k_tree(7, 3, false, 13);
  auto c3 = k_tree_certificate(t3, 3);
  REQUIRE(c3.has_value());
  Cover cov3 = k_tree_tree_cover_odd(t3, *c3);
  CHECK(cov3.parts.size() == 2);
  CHECK(static_cast<int>(cov3.parts.size()) == tree_cover_number(t3).value);

  Graph even = random_k_tree(6, 2, false, 15);
  auto c2 = k_tree_certificate(even, 2);
  CHECK_THROWS_AS(k_tree_tree_cover_odd(even, *c2), std::invalid_argument);
}

TEST_CASE("chordal identity") {
  Graph k4 = canonical_complete(4);
  CHECK(chordal_psd_identity(k4, *chordal_peo(k4)) == 3);
  Graph p4 = canonical_path(4);
  CHECK(chordal_psd_identity(p4, *chordal_peo(p4)) == 1);

  Graph kt = random_k_tree(8, 2, false, 17);
  CHECK(chordal_psd_identity(kt, *chordal_peo(kt)) == psd_forcing_number(kt).value);
}

TEST_CASE("two-path interval witnesses") {
  Graph a = p2_interval_witness(4, 4, 1);
  CHECK(path_cover_number(a).value == 2);
  CHECK(zero_forcing_number(a).value == 2);

  Graph b = p2_interval_witness(5, 5, 3);
  CHECK(zero_forcing_number(b).value == 4);

  Graph c = p2_interval_witness(2, 2, 1);
  CHECK(zero_forcing_number(c).value == 2);

  CHECK_THROWS_AS(p2_interval_witness(3, 3, 4), std::invalid_argument);
}
