// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treenet/demand.hpp"
#include "treenet/tree.hpp"

namespace treenet {

using VertexPair = std::pair<Vertex, Vertex>;

/// Request-sequence workload with temporal locality: the first request is
/// uniform over the pool; afterwards the previous pair repeats with
/// probability alpha, otherwise a fresh uniform draw is made.
struct SyntheticConfig {
  std::size_t n = 0;
  std::vector<VertexPair> pair_pool;
  double alpha = 0.0;
  std::uint64_t requests = 0;
  std::uint64_t seed = 0;
};

/// Every unordered pair (i, j), i < j, of n vertices.
std::vector<VertexPair> all_pairs(std::size_t n);

/// Throws Error if the pool is empty, holds an invalid or repeated pair, or
/// alpha is outside [0, 1).
void validate(const SyntheticConfig& config);

/// Indices into the pool, one per request.
std::vector<std::uint32_t> synthetic_requests(const SyntheticConfig& config);

/// W_ij is the number of requests between i and j.
DemandGraph generate_synthetic(const SyntheticConfig& config);

struct LabeledDemand {
  DemandGraph demand;
  std::vector<std::string> labels;
};

/// Lines of `label label weight`; `#` starts a comment; a line holding a
/// single label declares a vertex. Repeated pairs are summed. Labels are
/// numbered by first appearance.
LabeledDemand parse_edgelist(std::string_view text);

/// Whitespace-separated square matrix, one row per line. Labels are "0".."n-1".
LabeledDemand parse_matrix(std::string_view text);

std::string write_edgelist(const DemandGraph& demand, const std::vector<std::string>& labels);

/// One `label label` line per edge, canonical edge order.
std::string write_tree(const Tree& tree, const std::vector<std::string>& labels);

/// Tree over a known label set; unknown labels and non-trees are rejected.
Tree parse_tree(std::string_view text, const std::vector<std::string>& labels);

/// Pairs of 0-based integer indices, one per line, for a custom pool.
std::vector<VertexPair> parse_pair_pool(std::string_view text);

}  // namespace treenet
