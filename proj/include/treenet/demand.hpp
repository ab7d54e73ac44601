// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "treenet/types.hpp"

namespace treenet {

struct DemandEntry {
  Vertex i;
  Vertex j;
  Weight w;

  friend bool operator==(const DemandEntry&, const DemandEntry&) = default;
};

struct DemandNeighbor {
  Vertex v;
  Weight w;
};

/// Symmetric demand matrix with zero diagonal, stored as one entry per
/// unordered pair with positive weight. Immutable after construction.
class DemandGraph {
 public:
  DemandGraph() = default;

  /// Entries must satisfy i != j, w > 0, and name each unordered pair once.
  /// Endpoints are normalized so that i < j.
  DemandGraph(std::size_t n, std::vector<DemandEntry> entries);

  std::size_t size() const { return n_; }
  /// Number of non-zero unordered entries.
  std::size_t nonzero_pairs() const { return entries_.size(); }
  std::span<const DemandEntry> entries() const { return entries_; }

  std::span<const DemandNeighbor> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Sum of the demand row of v.
  Cost row_total(Vertex v) const { return row_total_[v]; }
  Cost total() const { return total_; }

  /// Dense lookup, O(deg(i)).
  Weight weight(Vertex i, Vertex j) const;

  std::vector<std::vector<Weight>> to_dense() const;

 private:
  std::size_t n_ = 0;
  std::vector<DemandEntry> entries_;
  std::vector<std::size_t> offsets_{0};
  std::vector<DemandNeighbor> adj_;
  std::vector<Cost> row_total_;
  Cost total_ = 0;
};

/// Rejects asymmetric matrices and non-zero diagonals, naming the first bad cell.
DemandGraph demand_from_dense(const std::vector<std::vector<Weight>>& matrix);

/// Accumulates demand, summing repeated pairs.
class DemandBuilder {
 public:
  explicit DemandBuilder(std::size_t n = 0) : n_(n) {}

  void resize(std::size_t n) { n_ = std::max(n_, n); }
  void add(Vertex i, Vertex j, Weight w);
  std::size_t size() const { return n_; }
  DemandGraph build() const;

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, Weight> acc_;
};

}  // namespace treenet
