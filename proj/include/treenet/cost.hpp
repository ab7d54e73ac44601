// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "treenet/demand.hpp"
#include "treenet/tree.hpp"

namespace treenet {

// All evaluators return the unordered-pair cost sum_{i<j} W_ij * D(i, j).

/// One BFS per vertex with a non-zero demand row. O(n^2) time, O(n) memory.
Cost cost_naive(const Tree& tree, const DemandGraph& demand);

/// Constant-time lowest common ancestor queries via an Euler tour of the tree
/// rooted at vertex 0 and a sparse table of depth minima over the tour.
class LcaIndex {
 public:
  explicit LcaIndex(const Tree& tree);

  Vertex lca(Vertex u, Vertex v) const;
  std::uint32_t depth(Vertex v) const { return vertex_depth_[v]; }
  std::uint32_t distance(Vertex u, Vertex v) const {
    return vertex_depth_[u] + vertex_depth_[v] - 2 * vertex_depth_[lca(u, v)];
  }

  std::size_t size() const { return first_.size(); }
  const std::vector<Vertex>& euler_tour() const { return euler_; }
  const std::vector<std::uint32_t>& first_occurrence() const { return first_; }

 private:
  std::uint32_t argmin(std::uint32_t a, std::uint32_t b) const {
    return euler_depth_[a] <= euler_depth_[b] ? a : b;
  }

  std::vector<Vertex> euler_;
  std::vector<std::uint32_t> euler_depth_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> vertex_depth_;
  std::vector<std::uint8_t> log2_;
  // level k holds, for each tour position i, the position of the shallowest
  // entry in [i, i + 2^k)
  std::vector<std::vector<std::uint32_t>> table_;
};

/// O(m_D) given the index. The index must have been built from `tree`; a stale
/// index silently produces a wrong value.
Cost cost_lca(const Tree& tree, const DemandGraph& demand, const LcaIndex& index);

/// True when the dense evaluator is preferred: 2 * m_D >= n^2 / 2, counting
/// each unordered pair twice as the matrix does.
bool prefers_naive(const DemandGraph& demand);

/// Dispatches to cost_naive or cost_lca by density; both are exact.
Cost cost(const Tree& tree, const DemandGraph& demand);

}  // namespace treenet
