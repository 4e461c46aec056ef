#include <doctest.h>

#include <random>

#include "gfvs/random_instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gfvs;

TEST_CASE("add_edge stores the inverse on the reverse arc") {
  auto z4 = testing::cyclic(4);
  LabeledGraph g(z4, 2);
  g.add_edge(0, 1, z4->element(1));
  CHECK(z4->residue(*g.label(0, 1)) == 1);
  CHECK(z4->residue(*g.label(1, 0)) == 3);
  CHECK(g.edge_count() == 1);

  auto z2 = testing::cyclic(2);
  LabeledGraph h(z2, 2);
  h.add_edge(0, 1, z2->element(1));
  CHECK(z2->residue(*h.label(1, 0)) == 1);

  auto free = std::make_shared<FreeGroup>(1);
  LabeledGraph w(free, 2);
  w.add_edge(0, 1, free->parse("g0"));
  CHECK(free->format(*w.label(1, 0)) == "g0^");
}

TEST_CASE("structural errors") {
  auto z2 = testing::cyclic(2);
  LabeledGraph g(z2, 3);
  g.add_edge(0, 1, z2->element(1));
  CHECK_THROWS_AS(g.add_edge(0, 0, z2->element(0)), UsageError);
  CHECK_THROWS_AS(g.add_edge(1, 0, z2->element(1)), UsageError);
  CHECK_THROWS_AS(g.add_edge(0, 3, z2->element(1)), UsageError);
  CyclicGroup stranger(2);
  CHECK_THROWS_AS(g.add_edge(1, 2, stranger.element(1)), UsageError);
}

TEST_CASE("delete_vertices keeps ids") {
  auto tri = testing::cyclic_ring(2, 3, 1);
  auto same = tri.delete_vertices(std::vector<Vertex>{});
  CHECK(same.vertex_count() == 3);
  CHECK(same.edge_count() == 3);

  auto cut = tri.delete_vertices(std::vector<Vertex>{1});
  CHECK(cut.vertex_count() == 2);
  CHECK(cut.edge_count() == 1);
  CHECK(cut.has_arc(2, 0));
  CHECK_FALSE(cut.contains(1));

  auto z2 = testing::cyclic(2);
  LabeledGraph path(z2, 3);
  path.add_edge(0, 1, z2->element(0));
  path.add_edge(1, 2, z2->element(0));
  auto apart = path.delete_vertices(std::vector<Vertex>{1});
  CHECK(apart.edge_count() == 0);
  CHECK(apart.vertices() == std::vector<Vertex>{0, 2});
}

TEST_CASE("cycle values") {
  auto z3 = testing::cyclic(3);
  LabeledGraph trivial(z3, 3);
  for (int i = 0; i < 3; ++i) trivial.add_edge(i, (i + 1) % 3, z3->identity());
  std::vector<Vertex> tri{0, 1, 2};
  CHECK(z3->is_identity(cycle_value(trivial, tri)));

  auto odd = testing::cyclic_ring(2, 3, 1);
  CHECK(!odd.group().is_identity(cycle_value(odd, tri)));
}

TEST_CASE("S3 triangle cycle values and rotation") {
  auto s3 = std::make_shared<SymmetricGroup>(3);
  std::vector<int> images{1, 2, 0};
  Element p = s3->element(images);
  LabeledGraph g(s3, 3);
  g.add_edge(0, 1, p);
  g.add_edge(1, 2, p);
  g.add_edge(2, 0, p);
  std::vector<Vertex> tri{0, 1, 2};
  CHECK(s3->is_identity(cycle_value(g, tri)));

  g.set_label(2, 0, s3->identity());
  Element p2 = s3->mul(p, p);
  CHECK(s3->eq(cycle_value(g, tri), p2));
  std::vector<Vertex> rotated{1, 2, 0};
  CHECK_FALSE(s3->is_identity(cycle_value(g, rotated)));
  CHECK(s3->eq(*g.label(0, 2), s3->identity()));
}

TEST_CASE("consistent labeling on trees") {
  std::mt19937_64 rng(3);
  auto s3 = std::make_shared<SymmetricGroup>(3);
  LabeledGraph tree(s3, 8);
  for (int v = 1; v < 8; ++v) {
    tree.add_edge(static_cast<int>(rng() % v), v, s3->random_element(rng));
  }
  auto result = find_consistent_labeling(tree);
  REQUIRE(std::holds_alternative<Labeling>(result));
  CHECK(is_consistent(tree, std::get<Labeling>(result)));
}

TEST_CASE("odd Z2 cycle yields a witness") {
  auto ring = testing::cyclic_ring(2, 5, 1);
  auto result = find_consistent_labeling(ring);
  REQUIRE(std::holds_alternative<NonNullWitness>(result));
  const auto& w = std::get<NonNullWitness>(result);
  CHECK(w.cycle.size() == 5);
  CHECK(dynamic_cast<const CyclicGroup&>(ring.group()).residue(w.value) == 1);
  CHECK(ring.group().eq(cycle_value(ring, w.cycle), w.value));
}

TEST_CASE("Z4 4-cycle with total 0 is consistent") {
  auto ring = testing::cyclic_ring(4, 4, 1);
  auto result = find_consistent_labeling(ring);
  REQUIRE(std::holds_alternative<Labeling>(result));
  const Labeling& lambda = std::get<Labeling>(result);
  for (Vertex u : ring.vertices()) {
    for (const Arc& arc : ring.arcs_from(u)) {
      CHECK(ring.group().eq(lambda.at(arc.head), ring.group().mul(lambda.at(u), arc.label)));
    }
  }
}

TEST_CASE("is_solution on odd cycles") {
  auto ring = testing::cyclic_ring(2, 5, 1);
  CHECK_FALSE(is_solution(ring, std::vector<Vertex>{}));
  for (Vertex v = 0; v < 5; ++v) CHECK(is_solution(ring, std::vector<Vertex>{v}));
}

TEST_CASE("labeling dichotomy against cycle enumeration") {
  std::mt19937_64 rng(11);
  auto z3 = testing::cyclic(3);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    auto g = random_labeled_graph(z3, n, static_cast<int>(rng() % (2 * n)), rng);
    bool non_null = oracle::has_non_null_cycle(g);
    auto result = find_consistent_labeling(g);
    CHECK(std::holds_alternative<NonNullWitness>(result) == non_null);
    if (auto* w = std::get_if<NonNullWitness>(&result)) {
      CHECK_FALSE(z3->is_identity(oracle::walk_value(g, w->cycle)));
      auto sorted = w->cycle;
      std::ranges::sort(sorted);
      CHECK(std::ranges::adjacent_find(sorted) == sorted.end());
    } else {
      CHECK(is_consistent(g, std::get<Labeling>(result)));
    }
  }
}
