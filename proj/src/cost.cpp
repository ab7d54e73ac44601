// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/cost.hpp"

#include <bit>
#include <limits>

namespace treenet {

namespace {

void check_sizes(const Tree& tree, const DemandGraph& demand) {
  if (tree.size() != demand.size())
    throw Error("tree has " + std::to_string(tree.size()) + " vertices, demand has " +
                std::to_string(demand.size()));
}

}  // namespace

Cost cost_naive(const Tree& tree, const DemandGraph& demand) {
  check_sizes(tree, demand);
  const std::size_t n = tree.size();
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(n);
  Cost total = 0;
  for (Vertex s = 0; s < n; ++s) {
    const auto row = demand.neighbors(s);
    // pairs are counted from their smaller endpoint
    bool has_higher = false;
    for (const auto& nb : row) has_higher |= nb.v > s;
    if (!has_higher) continue;

    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : tree.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (const auto& nb : row)
      if (nb.v > s) total += static_cast<Cost>(nb.w) * dist[nb.v];
    for (Vertex x : queue) dist[x] = kUnseen;
  }
  return total;
}

LcaIndex::LcaIndex(const Tree& tree) {
  const std::size_t n = tree.size();
  if (n == 0) return;
  euler_.reserve(2 * n - 1);
  euler_depth_.reserve(2 * n - 1);
  first_.assign(n, std::numeric_limits<std::uint32_t>::max());
  vertex_depth_.assign(n, 0);

  // iterative DFS: (vertex, parent, next neighbor slot)
  struct Frame {
    Vertex v;
    Vertex parent;
    std::uint8_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  first_[0] = 0;
  euler_.push_back(0);
  euler_depth_.push_back(0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nb = tree.neighbors(top.v);
    if (top.next < nb.size()) {
      const Vertex child = nb[top.next++];
      if (stack.size() > 1 && child == top.parent) continue;
      const std::uint32_t d = vertex_depth_[top.v] + 1;
      vertex_depth_[child] = d;
      first_[child] = static_cast<std::uint32_t>(euler_.size());
      euler_.push_back(child);
      euler_depth_.push_back(d);
      stack.push_back({child, top.v, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        euler_.push_back(stack.back().v);
        euler_depth_.push_back(vertex_depth_[stack.back().v]);
      }
    }
  }
  if (euler_.size() != 2 * n - 1) throw Error("LCA index requires a spanning tree");

  const std::size_t m = euler_.size();
  log2_.assign(m + 1, 0);
  for (std::size_t i = 2; i <= m; ++i) log2_[i] = static_cast<std::uint8_t>(log2_[i / 2] + 1);
  const std::size_t levels = static_cast<std::size_t>(log2_[m]) + 1;
  table_.resize(levels);
  table_[0].resize(m);
  for (std::uint32_t i = 0; i < m; ++i) table_[0][i] = i;
  for (std::size_t k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const std::size_t width = m - (std::size_t{1} << k) + 1;
    auto& cur = table_[k];
    const auto& prev = table_[k - 1];
    cur.resize(width);
    for (std::size_t i = 0; i < width; ++i) cur[i] = argmin(prev[i], prev[i + half]);
  }
}

Vertex LcaIndex::lca(Vertex u, Vertex v) const {
  std::uint32_t a = first_[u], b = first_[v];
  if (a > b) std::swap(a, b);
  const std::uint8_t k = log2_[b - a + 1];
  return euler_[argmin(table_[k][a], table_[k][b + 1 - (std::uint32_t{1} << k)])];
}

Cost cost_lca(const Tree& tree, const DemandGraph& demand, const LcaIndex& index) {
  check_sizes(tree, demand);
  if (index.size() != tree.size()) throw Error("LCA index built for a different tree");
  Cost total = 0;
  for (const auto& e : demand.entries()) total += static_cast<Cost>(e.w) * index.distance(e.i, e.j);
  return total;
}

bool prefers_naive(const DemandGraph& demand) {
  const auto n = static_cast<unsigned __int128>(demand.size());
  return 4 * static_cast<unsigned __int128>(demand.nonzero_pairs()) >= n * n;
}

Cost cost(const Tree& tree, const DemandGraph& demand) {
  check_sizes(tree, demand);
  if (demand.nonzero_pairs() == 0) return 0;
  if (prefers_naive(demand)) return cost_naive(tree, demand);
  const LcaIndex index(tree);
  return cost_lca(tree, demand, index);
}

}  // namespace treenet
