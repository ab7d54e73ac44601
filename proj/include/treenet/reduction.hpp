// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

// Executable form of the reduction from simple optimal linear arrangement
// (OLA) to the optimal binary tree problem (OBT), plus exact oracles for both.
//
// Vertex layout of the reduced instance: originals 0..n-1, then the helper
// line h_1..h_{n+2} at indices n..2n+1. Demand is 1 on every OLA edge, d1 from
// every original to h_2 and to h_{n+1}, and d2 between consecutive helpers.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treenet/demand.hpp"
#include "treenet/tree.hpp"

namespace treenet {

struct OlaInstance {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::uint64_t bound = 0;
};

/// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
void validate_ola(const OlaInstance& ola);

/// phi[v] is the label in 1..n of original vertex v.
class Bijection {
 public:
  Bijection() = default;
  /// Throws Error unless `labels` is a permutation of 1..n.
  explicit Bijection(std::vector<std::uint32_t> labels);

  std::size_t size() const { return labels_.size(); }
  std::uint32_t operator()(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  std::vector<std::uint32_t> labels_;
};

std::uint64_t ola_cost(const OlaInstance& ola, const Bijection& phi);

struct ObtInstance {
  DemandGraph demand;
  std::size_t originals = 0;
  Weight d1 = 0;
  Weight d2 = 0;
  Cost bound = 0;

  std::size_t helper_count() const { return originals + 2; }
  /// Index of helper h_i, 1-based as in h_1..h_{n+2}.
  Vertex helper(std::size_t i) const { return static_cast<Vertex>(originals + i - 1); }
};

ObtInstance build_obt_instance(const OlaInstance& ola);

/// Helper line plus each original v hung below h_{1+phi(v)}.
Tree tree_from_bijection(const OlaInstance& ola, const Bijection& phi);

enum class ReductionViolation : std::uint8_t {
  kHelperLineBroken,   // some consecutive helpers are not adjacent
  kHelperOverloaded,   // an interior helper carries more than one original
  kOriginalNotOnLine,  // an original is not attached to one of h_2..h_{n+1}
};

std::string_view to_string(ReductionViolation v);

struct Infeasible {
  ReductionViolation violation;
  std::string detail;
};

/// Reads the labeling off a tree of the reduced instance. Any tree with cost
/// at most the bound has the required structure; a violation means the tree
/// is more expensive than the bound.
std::variant<Bijection, Infeasible> bijection_from_tree(const OlaInstance& ola,
                                                        const ObtInstance& obt, const Tree& tree);

struct OlaOptimum {
  std::uint64_t cost = 0;
  Bijection phi;
};

/// Exhaustive over all n! labelings, n <= 9.
OlaOptimum brute_force_ola(const OlaInstance& ola);

struct ObtOptimum {
  Cost cost = 0;
  Tree tree;
};

/// Exhaustive over all labeled trees with maximum degree 3, enumerated as
/// Prüfer sequences in which no label occurs more than twice. n <= 9.
ObtOptimum brute_force_obt(const DemandGraph& demand);

/// Exact optimum by dynamic programming over vertex subsets: a rooted subtree
/// on S pays the boundary demand of S for its edge to the parent, so
///   F(S) = boundary(S) + min_r min_{A u B = S - r} F(A) + F(B).
/// O(n * 3^n) time, n <= 16.
ObtOptimum exact_obt(const DemandGraph& demand);

}  // namespace treenet
