// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "treenet/tree.hpp"

using namespace treenet;

TEST_SUITE("tree") {
  TEST_CASE("path is valid") {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
    CHECK(validate_tree(4, e).ok);
  }

  TEST_CASE("degree four is rejected at its vertex") {
    const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const auto v = validate_tree(5, e);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic == "degree > 3 at vertex 0");
  }

  TEST_CASE("forest is disconnected") {
    const std::vector<Edge> e{{0, 1}, {2, 3}};
    const auto v = validate_tree(4, e);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic == "disconnected");
  }

  TEST_CASE("cycle, self-loop and duplicate are rejected") {
    CHECK_FALSE(validate_tree(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}).ok);
    CHECK_FALSE(validate_tree(3, std::vector<Edge>{{0, 0}, {1, 2}}).ok);
    CHECK_FALSE(validate_tree(3, std::vector<Edge>{{0, 1}, {1, 0}}).ok);
    CHECK_FALSE(validate_tree(3, std::vector<Edge>{{0, 1}, {1, 5}}).ok);
  }

  TEST_CASE("single vertex and empty trees") {
    CHECK(validate_tree(1, std::vector<Edge>{}).ok);
    CHECK(Tree::from_edges(1, std::vector<Edge>{}).size() == 1);
  }

  TEST_CASE("distances on a path") {
    const auto t = Tree::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(tree_distances_from(t, 0) == std::vector<std::uint32_t>{0, 1, 2});
  }

  TEST_CASE("distances from a star leaf") {
    const auto t = Tree::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(tree_distances_from(t, 1) == std::vector<std::uint32_t>{1, 0, 2, 2});
  }

  TEST_CASE("distances agree with Floyd-Warshall on random trees") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      const auto edges = oracle::random_tree(n, rng);
      const auto t = Tree::from_edges(n, edges);
      const auto fw = oracle::floyd_warshall(n, edges);
      for (Vertex s = 0; s < n; ++s) {
        const auto d = tree_distances_from(t, s);
        CHECK(d[s] == 0);
        for (Vertex v = 0; v < n; ++v) CHECK(d[v] == fw[s][v]);
      }
    }
  }

  TEST_CASE("edge edits keep adjacency consistent") {
    auto t = Tree::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    t.remove_edge(2, 1);
    CHECK_FALSE(t.has_edge(1, 2));
    CHECK(t.edge_count() == 2);
    t.add_edge(0, 3);
    CHECK(validate_tree(t).ok);
    CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
    CHECK_THROWS_AS(t.add_edge(0, 3), Error);
    CHECK_THROWS_AS(t.remove_edge(1, 2), Error);
  }

  TEST_CASE("degree cap enforced on insertion") {
    auto t = Tree::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    t.remove_edge(3, 4);
    CHECK_THROWS_AS(t.add_edge(0, 4), Error);
  }

  TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
    CHECK(Permutation::identity(3) == Permutation({0, 1, 2}));
  }
}
