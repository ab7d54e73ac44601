// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "treenet/workloads.hpp"

using namespace treenet;

namespace {

SyntheticConfig config(std::size_t n, double alpha, std::uint64_t requests, std::uint64_t seed) {
  return {n, all_pairs(n), alpha, requests, seed};
}

std::map<std::pair<std::string, std::string>, Weight> by_label(const LabeledDemand& d) {
  std::map<std::pair<std::string, std::string>, Weight> out;
  for (const auto& e : d.demand.entries())
    out[std::minmax(d.labels[e.i], d.labels[e.j])] = e.w;
  return out;
}

}  // namespace

TEST_SUITE("workloads") {
  TEST_CASE("single pair pool") {
    const auto d = generate_synthetic({2, {{0, 1}}, 0.0, 100, 4});
    REQUIRE(d.entries().size() == 1);
    CHECK(d.entries()[0] == DemandEntry{0, 1, 100});
  }

  TEST_CASE("weights add up to the request count") {
    for (double alpha : {0.0, 0.3, 0.9}) {
      const auto d = generate_synthetic(config(9, alpha, 12345, 7));
      CHECK(d.total() == 12345);
    }
  }

  TEST_CASE("uniform pool counts concentrate") {
    const std::uint64_t requests = 1000000;
    const auto cfg = config(5, 0.0, requests, 11);
    const auto d = generate_synthetic(cfg);
    const double p = 1.0 / static_cast<double>(cfg.pair_pool.size());
    const double mean = static_cast<double>(requests) * p;
    const double sigma = std::sqrt(static_cast<double>(requests) * p * (1 - p));
    CHECK(d.nonzero_pairs() == cfg.pair_pool.size());
    for (const auto& e : d.entries()) CHECK(std::abs(static_cast<double>(e.w) - mean) < 5 * sigma);
  }

  TEST_CASE("repeat fraction follows alpha") {
    for (double alpha : {0.0, 0.5, 0.9}) {
      const auto cfg = config(6, alpha, 100000, 13);
      const auto seq = synthetic_requests(cfg);
      std::size_t repeats = 0;
      for (std::size_t k = 1; k < seq.size(); ++k) repeats += seq[k] == seq[k - 1];
      const double pool = static_cast<double>(cfg.pair_pool.size());
      const double p = alpha + (1 - alpha) / pool;
      const double trials = static_cast<double>(seq.size() - 1);
      const double sigma = std::sqrt(p * (1 - p) / trials);
      CHECK(std::abs(static_cast<double>(repeats) / trials - p) < 3 * sigma);
    }
  }

  TEST_CASE("generation is reproducible") {
    const auto a = generate_synthetic(config(12, 0.5, 5000, 99));
    const auto b = generate_synthetic(config(12, 0.5, 5000, 99));
    const auto c = generate_synthetic(config(12, 0.5, 5000, 100));
    CHECK(a.to_dense() == b.to_dense());
    CHECK(a.to_dense() != c.to_dense());
  }

  TEST_CASE("bad configurations") {
    CHECK_THROWS_AS(validate({3, {}, 0.0, 10, 0}), Error);
    CHECK_THROWS_AS(validate({3, {{0, 1}}, 1.0, 10, 0}), Error);
    CHECK_THROWS_AS(validate({3, {{0, 1}}, -0.1, 10, 0}), Error);
    CHECK_THROWS_AS(validate({3, {{0, 1}, {1, 0}}, 0.0, 10, 0}), Error);
    CHECK_THROWS_AS(validate({3, {{1, 1}}, 0.0, 10, 0}), Error);
    CHECK_THROWS_AS(validate({3, {{0, 3}}, 0.0, 10, 0}), Error);
    CHECK(all_pairs(4).size() == 6);
  }

  TEST_CASE("edge list parsing") {
    const auto d = parse_edgelist("a b 3\nb c 2\n");
    CHECK(d.demand.size() == 3);
    CHECK(d.labels == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(d.demand.entries().size() == 2);
    CHECK(d.demand.entries()[0] == DemandEntry{0, 1, 3});
    CHECK(d.demand.entries()[1] == DemandEntry{1, 2, 2});
  }

  TEST_CASE("repeated lines are summed") {
    const auto d = parse_edgelist("a b 3\na b 4\n");
    REQUIRE(d.demand.entries().size() == 1);
    CHECK(d.demand.entries()[0] == DemandEntry{0, 1, 7});
    CHECK(parse_edgelist("x y 1\ny x 2\n").demand.weight(0, 1) == 3);
  }

  TEST_CASE("edge list errors carry the line") {
    CHECK_THROWS_WITH_AS(parse_edgelist("a a 1"), "self-loop at line 1", Error);
    CHECK_THROWS_WITH_AS(parse_edgelist("a b 1\nc d\n"), "malformed line 2", Error);
    CHECK_THROWS_WITH_AS(parse_edgelist("a b 1\n\nc d -4\n"), "negative weight at line 3", Error);
    CHECK_THROWS_AS(parse_edgelist("a b x\n"), Error);
  }

  TEST_CASE("comments, blank lines and lone labels") {
    const auto d = parse_edgelist("# header\n\na b 2 # trailing\nz\r\n  c   b\t5\n");
    CHECK(d.labels == std::vector<std::string>{"a", "b", "z", "c"});
    CHECK(d.demand.size() == 4);
    CHECK(d.demand.nonzero_pairs() == 2);
    CHECK(d.demand.weight(1, 3) == 5);
  }

  TEST_CASE("zero weights declare vertices only") {
    const auto d = parse_edgelist("a b 0\n");
    CHECK(d.demand.size() == 2);
    CHECK(d.demand.nonzero_pairs() == 0);
  }

  TEST_CASE("matrix parsing") {
    const auto d = parse_matrix("0 2 0\n2 0 1\n0 1 0\n");
    CHECK(d.labels == std::vector<std::string>{"0", "1", "2"});
    CHECK(d.demand.weight(0, 1) == 2);
    CHECK(d.demand.weight(1, 2) == 1);
    CHECK_THROWS_AS(parse_matrix("0 1\n2 0\n"), Error);
  }

  TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(3);
    const auto w = oracle::random_matrix(10, 0.4, 9, rng);
    std::vector<std::string> labels;
    for (int k = 0; k < 10; ++k) labels.push_back("v" + std::to_string(k * 7));
    const LabeledDemand original{oracle::to_demand(w), labels};
    const auto back = parse_edgelist(write_edgelist(original.demand, labels));
    CHECK(back.demand.size() == 10);
    CHECK(by_label(back) == by_label(original));
  }

  TEST_CASE("tree round trip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 30;
      std::vector<std::string> labels;
      for (std::size_t k = 0; k < n; ++k) labels.push_back("n" + std::to_string(n - k));
      const Tree t = Tree::from_edges(n, oracle::random_tree(n, rng));
      const std::string text = write_tree(t, labels);
      CHECK(parse_tree(text, labels) == t);
      CHECK(write_tree(parse_tree(text, labels), labels) == text);
    }
  }

  TEST_CASE("tree parsing rejects bad input") {
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    CHECK_THROWS_AS(parse_tree("a b\nc d\n", labels), Error);
    CHECK_THROWS_AS(parse_tree("a b\nb c\nc a\n", labels), Error);
    CHECK_THROWS_AS(parse_tree("a b\nb c\nc q\n", labels), Error);
    CHECK_THROWS_AS(parse_tree("a b 1\nb c\nc d\n", labels), Error);
    CHECK_NOTHROW(parse_tree("a b\nb c\n# comment\nc d\n", labels));
  }

  TEST_CASE("pair pool files") {
    const auto pool = parse_pair_pool("0 1\n# c\n2 3\n");
    CHECK(pool == std::vector<VertexPair>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(parse_pair_pool("0\n"), Error);
    CHECK_THROWS_AS(parse_pair_pool("0 x\n"), Error);
  }
}
