// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "treenet/demand.hpp"

using namespace treenet;

TEST_SUITE("demand") {
  TEST_CASE("dense two-vertex matrix gives one entry") {
    const auto d = demand_from_dense({{0, 5}, {5, 0}});
    CHECK(d.size() == 2);
    CHECK(d.nonzero_pairs() == 1);
    REQUIRE(d.entries().size() == 1);
    CHECK(d.entries()[0] == DemandEntry{0, 1, 5});
  }

  TEST_CASE("zero matrix has no entries") {
    const auto d = demand_from_dense({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(d.size() == 3);
    CHECK(d.nonzero_pairs() == 0);
    CHECK(d.total() == 0);
  }

  TEST_CASE("asymmetric matrix is rejected with the cell") {
    CHECK_THROWS_WITH_AS(demand_from_dense({{0, 1}, {2, 0}}), "asymmetric at (0,1)", Error);
  }

  TEST_CASE("non-zero diagonal is rejected") {
    CHECK_THROWS_WITH_AS(demand_from_dense({{0, 0}, {0, 3}}), "non-zero diagonal at (1,1)",
                         Error);
  }

  TEST_CASE("non-square matrix is rejected") {
    CHECK_THROWS_AS(demand_from_dense({{0, 1}, {1}}), Error);
  }

  TEST_CASE("entries are normalized and indexed both ways") {
    const DemandGraph d(4, {{3, 1, 2}, {0, 2, 7}});
    CHECK(d.weight(1, 3) == 2);
    CHECK(d.weight(3, 1) == 2);
    CHECK(d.weight(2, 0) == 7);
    CHECK(d.weight(0, 1) == 0);
    for (const auto& e : d.entries()) CHECK(e.i < e.j);
    CHECK(d.row_total(1) == 2);
    CHECK(d.row_total(3) == 2);
    CHECK(d.row_total(0) == 7);
    CHECK(d.total() == 9);
    CHECK(d.neighbors(3).size() == 1);
    CHECK(d.neighbors(3)[0].v == 1);
  }

  TEST_CASE("constructor rejects bad entries") {
    CHECK_THROWS_AS(DemandGraph(3, {{1, 1, 2}}), Error);
    CHECK_THROWS_AS(DemandGraph(3, {{0, 1, 0}}), Error);
    CHECK_THROWS_AS(DemandGraph(3, {{0, 1, 1}, {1, 0, 2}}), Error);
    CHECK_THROWS_AS(DemandGraph(3, {{0, 3, 1}}), Error);
  }

  TEST_CASE("dense round trip") {
    const std::vector<std::vector<Weight>> m{{0, 1, 0, 4}, {1, 0, 2, 0}, {0, 2, 0, 3}, {4, 0, 3, 0}};
    CHECK(demand_from_dense(m).to_dense() == m);
  }

  TEST_CASE("builder sums repeated pairs and grows") {
    DemandBuilder b;
    b.add(0, 1, 3);
    b.add(1, 0, 4);
    b.add(2, 5, 1);
    b.add(3, 4, 0);
    const auto d = b.build();
    CHECK(d.size() == 6);
    CHECK(d.weight(0, 1) == 7);
    CHECK(d.weight(2, 5) == 1);
    CHECK(d.nonzero_pairs() == 2);
  }
}
