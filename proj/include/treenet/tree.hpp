// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treenet/types.hpp"

namespace treenet {

inline constexpr std::size_t kMaxDegree = 3;

struct Edge {
  Vertex u;
  Vertex v;

  /// Same edge with endpoints ordered u < v.
  Edge canonical() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Checks the spanning-tree invariants on a raw edge list: n-1 edges, no
/// self-loops or duplicates, every degree <= 3, connected.
Validation validate_tree(std::size_t n, std::span<const Edge> edges);

/// Unrooted graph on n vertices with degree at most 3 and no parallel edges.
///
/// Edge insertion enforces the local invariants; the global ones (n-1 edges,
/// connectivity) are only guaranteed for trees obtained from `from_edges` or
/// produced by the mutation operators. Use `validate_tree` to check.
class Tree {
 public:
  Tree() = default;
  explicit Tree(std::size_t n) : nbr_(n), deg_(n, 0) {}

  /// Throws Error with the validation diagnostic if `edges` is not a valid tree.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return deg_.size(); }
  std::size_t degree(Vertex v) const { return deg_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return {nbr_[v].data(), deg_[v]}; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t edge_count() const { return edge_count_; }

  /// Edges in canonical form, sorted.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Tree& a, const Tree& b) { return a.edges() == b.edges(); }

 private:
  std::vector<std::array<Vertex, kMaxDegree>> nbr_;
  std::vector<std::uint8_t> deg_;
  std::size_t edge_count_ = 0;
};

Validation validate_tree(const Tree& tree);

/// Hop distances from `source` to every vertex. Throws if source is out of range.
std::vector<std::uint32_t> tree_distances_from(const Tree& tree, Vertex source);

/// Marks the component of `start` after deleting edge (start, blocked).
/// Returns the vertices of that component in BFS order; `mark[v]` is set to
/// `label` for each of them.
std::vector<Vertex> mark_side(const Tree& tree, Vertex start, Vertex blocked,
                              std::vector<std::uint8_t>& mark, std::uint8_t label);

/// Order of vertices: each of 0..n-1 exactly once.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> order);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  Vertex operator[](std::size_t pos) const { return order_[pos]; }
  std::span<const Vertex> order() const { return order_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> order_;
};

}  // namespace treenet
