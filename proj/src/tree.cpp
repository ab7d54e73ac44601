// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/tree.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <set>

namespace treenet {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Validation fail(std::string msg) { return {false, std::move(msg)}; }

}  // namespace

Validation validate_tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) return fail("empty vertex set");
  std::vector<std::size_t> degree(n, 0);
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) return fail("edge " + edge_name(e.u, e.v) + " out of range");
    if (e.u == e.v) return fail("self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert(e.canonical()).second)
      return fail("duplicate edge " + edge_name(e.u, e.v));
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] > kMaxDegree) return fail("degree > 3 at vertex " + std::to_string(v));

  // union-find connectivity; also catches wrong edge counts
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a == b) return fail("cycle through edge " + edge_name(e.u, e.v));
    parent[a] = b;
    --components;
  }
  if (components != 1) return fail("disconnected");
  return {};
}

Validation validate_tree(const Tree& tree) {
  const auto edges = tree.edges();
  return validate_tree(tree.size(), edges);
}

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (auto check = validate_tree(n, edges); !check) throw Error("invalid tree: " + check.diagnostic);
  Tree tree(n);
  for (const Edge& e : edges) tree.add_edge(e.u, e.v);
  return tree;
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

void Tree::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw Error("edge " + edge_name(u, v) + " out of range");
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw Error("duplicate edge " + edge_name(u, v));
  if (deg_[u] == kMaxDegree) throw Error("degree > 3 at vertex " + std::to_string(u));
  if (deg_[v] == kMaxDegree) throw Error("degree > 3 at vertex " + std::to_string(v));
  nbr_[u][deg_[u]++] = v;
  nbr_[v][deg_[v]++] = u;
  ++edge_count_;
}

void Tree::remove_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size() || !has_edge(u, v))
    throw Error("edge " + edge_name(u, v) + " not in tree");
  auto drop = [this](Vertex a, Vertex b) {
    auto& slots = nbr_[a];
    auto* end = slots.data() + deg_[a];
    // keep neighbor order stable so traversals stay deterministic
    std::rotate(std::find(slots.data(), end, b), std::find(slots.data(), end, b) + 1, end);
    --deg_[a];
  };
  drop(u, v);
  drop(v, u);
  --edge_count_;
}

std::vector<std::uint32_t> tree_distances_from(const Tree& tree, Vertex source) {
  const std::size_t n = tree.size();
  if (source >= n) throw Error("source vertex " + std::to_string(source) + " out of range");
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : tree.neighbors(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Vertex> mark_side(const Tree& tree, Vertex start, Vertex blocked,
                              std::vector<std::uint8_t>& mark, std::uint8_t label) {
  std::vector<Vertex> side{start};
  mark[start] = label;
  for (std::size_t head = 0; head < side.size(); ++head) {
    const Vertex x = side[head];
    for (Vertex y : tree.neighbors(x)) {
      if (y == blocked && x == start) continue;
      if (mark[y] != label) {
        mark[y] = label;
        side.push_back(y);
      }
    }
  }
  return side;
}

Permutation::Permutation(std::vector<Vertex> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (Vertex v : order_) {
    if (v >= order_.size() || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return Permutation(std::move(order));
}

}  // namespace treenet
