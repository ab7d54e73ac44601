// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "treenet/demand.hpp"
#include "treenet/stream.hpp"
#include "treenet/tree.hpp"

namespace treenet {

/// Union by rank with path compression.
class DisjointSetForest {
 public:
  explicit DisjointSetForest(std::size_t n);

  Vertex find(Vertex v);
  /// False if a and b were already in the same set.
  bool unite(Vertex a, Vertex b);
  std::size_t components() const { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

/// Greedy maximum spanning tree with degree cap 3.
///
/// Demand pairs are sorted by weight once; every call shuffles the runs of
/// equal weight before the Kruskal pass, so repeated calls sample among the
/// tied maximum spanning trees. Components left over (the demand graph need
/// not be connected) are joined by scanning vertices in index order and
/// linking the first open (degree < 3) vertex of each component to the
/// smallest open vertex of the tree grown from vertex 0.
class MstInitializer final : public SolutionStream {
 public:
  /// `demand` must outlive the initializer.
  MstInitializer(const DemandGraph& demand, std::uint64_t seed);
  MstInitializer(DemandGraph&&, std::uint64_t) = delete;

  Tree build();
  std::optional<Solution> pull() override;

 private:
  const DemandGraph* demand_;
  std::vector<DemandEntry> sorted_;
  std::vector<std::size_t> run_starts_;
  std::mt19937_64 rng_;
};

Tree mst_init(const DemandGraph& demand, std::uint64_t seed);

/// Segment tables of the optimal search-tree dynamic program for one vertex
/// order. For positions l <= r of the order:
///   boundary(l, r): demand between {pi_l..pi_r} and the remaining vertices
///   best(l, r):     cheapest tree on the segment, counting only the edges
///                   inside it
///   root(l, r):     position of the root achieving best(l, r)
/// Entries whose right index is below `valid_prefix` depend only on the first
/// `valid_prefix` positions of the order and survive a change of the suffix.
class BstDpTables {
 public:
  explicit BstDpTables(std::size_t n);

  std::size_t size() const { return n_; }
  Cost boundary(std::size_t l, std::size_t r) const { return boundary_[l * n_ + r]; }
  Cost best(std::size_t l, std::size_t r) const { return best_[l * n_ + r]; }
  std::uint32_t root(std::size_t l, std::size_t r) const { return root_[l * n_ + r]; }

  std::size_t valid_prefix() const { return valid_prefix_; }
  /// Keeps only the columns that depend on the first `t` positions.
  void invalidate_from(std::size_t t) { valid_prefix_ = std::min(valid_prefix_, t); }

  /// Number of (l, r) cells evaluated since construction.
  std::uint64_t cells_computed() const { return cells_; }
  /// Number of candidate roots tried since construction.
  std::uint64_t root_trials() const { return trials_; }

 private:
  friend Solution bst_optimal_for_permutation(const DemandGraph&, const Permutation&,
                                              BstDpTables&);

  std::size_t n_;
  std::size_t valid_prefix_ = 0;
  std::vector<Cost> boundary_;
  std::vector<Cost> best_;
  std::vector<std::uint32_t> root_;
  std::vector<Weight> row_scratch_;
  std::uint64_t cells_ = 0;
  std::uint64_t trials_ = 0;
};

/// Minimum-cost tree among those whose hanging subtrees are contiguous
/// segments of `pi`. Recomputes the table columns at positions
/// >= tables.valid_prefix(), then marks all columns valid for `pi`.
/// Ties between roots go to the smallest position.
Solution bst_optimal_for_permutation(const DemandGraph& demand, const Permutation& pi,
                                     BstDpTables& tables);

/// Uniformly random orders; never exhausts.
class BstRandStream final : public SolutionStream {
 public:
  BstRandStream(const DemandGraph& demand, std::uint64_t seed);
  BstRandStream(DemandGraph&&, std::uint64_t) = delete;

  std::optional<Solution> pull() override;
  const Permutation& last_permutation() const { return last_; }

 private:
  const DemandGraph* demand_;
  BstDpTables tables_;
  std::vector<Vertex> order_;
  Permutation last_;
  std::mt19937_64 rng_;
};

/// Advances `order` to the next permutation in lexicographic order whose first
/// element does not exceed its last (the reversed order yields the same tree).
/// Returns false after the last admissible permutation.
bool next_admissible_permutation(std::vector<Vertex>& order);

/// Lexicographic enumeration of admissible orders starting from the identity,
/// reusing the table columns shared with the previously evaluated order.
class BstNextStream final : public SolutionStream {
 public:
  explicit BstNextStream(const DemandGraph& demand);
  explicit BstNextStream(DemandGraph&&) = delete;

  std::optional<Solution> pull() override;
  const Permutation& last_permutation() const { return last_; }
  const BstDpTables& tables() const { return tables_; }

 private:
  const DemandGraph* demand_;
  BstDpTables tables_;
  std::vector<Vertex> order_;
  Permutation last_;
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace treenet
