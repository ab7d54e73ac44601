// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treenet/demand.hpp"
#include "treenet/stream.hpp"
#include "treenet/tree.hpp"

namespace treenet {

using Rng = std::mt19937_64;

enum class MutationKind : std::uint8_t {
  kEdgeSwitch,
  kEdgeReplaceRandom,
  kEdgeReplaceOptimal,
  kSubtreeSwap,
};

std::string_view to_string(MutationKind kind);

struct MutationOutcome {
  Tree tree;
  Cost cost = 0;
  MutationKind kind = MutationKind::kEdgeSwitch;
  std::vector<Edge> removed;
  std::vector<Edge> added;

  Solution solution() && { return {std::move(tree), cost}; }
};

/// Exchanges the roles of the endpoints of tree edge uv: every other neighbor
/// of u moves to v and vice versa. The cost is updated incrementally from
/// the demand rows of u and v in O(n + deg(u) + deg(v)).
MutationOutcome edge_switch(const Solution& parent, const DemandGraph& demand, Edge uv);

/// Removes `removed` and inserts `added`, which must reconnect the two
/// components. Cost is recomputed from scratch.
MutationOutcome edge_replace(const Solution& parent, const DemandGraph& demand, Edge removed,
                             Edge added);

/// Removes a uniformly chosen edge and reconnects the two components through
/// a uniformly chosen pair of open (degree < 3) vertices. Requires n >= 2.
MutationOutcome edge_replace_random(const Solution& parent, const DemandGraph& demand, Rng& rng);

/// Removes uv and reconnects the components through the cheapest pair of open
/// vertices. Each side is a weighted 1-median problem solved by one rerooting
/// pass, O(n + m_D). Ties go to the first candidate in DFS preorder from u
/// (resp. v).
MutationOutcome edge_replace_optimal(const Solution& parent, const DemandGraph& demand, Edge uv);

/// Neighbors (u1, u2) of v1 and v2 on the v1-v2 path. Throws if v1 == v2 or
/// they are adjacent.
std::pair<Vertex, Vertex> subtree_swap_anchors(const Tree& tree, Vertex v1, Vertex v2);

/// Replaces edges v1u1, v2u2 with v1u2, v2u1. Degrees are unchanged. Cost is
/// recomputed from scratch.
MutationOutcome subtree_swap(const Solution& parent, const DemandGraph& demand, Vertex v1,
                             Vertex v2);

/// Per-parent sampling of tree edges without replacement.
class EdgeTracker {
 public:
  void reset() { primed_ = false; }
  std::optional<Edge> next(const Tree& tree, Rng& rng);
  std::size_t remaining() const { return pending_.size(); }

 private:
  bool primed_ = false;
  std::vector<Edge> pending_;
};

/// Per-parent sampling of unordered vertex pairs without replacement
/// (sparse Fisher-Yates over the pair index space).
class PairTracker {
 public:
  void reset(std::size_t n);
  std::optional<std::pair<Vertex, Vertex>> next(Rng& rng);
  std::size_t tried() const { return drawn_; }

 private:
  std::pair<Vertex, Vertex> decode(std::uint64_t index) const;

  std::size_t n_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t drawn_ = 0;
  std::vector<std::uint64_t> row_start_;
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

/// A mutation with its exhaustion state for the current parent. An empty
/// proposal means the neighborhood of the parent has been fully tried.
class MutationOperator {
 public:
  virtual ~MutationOperator() = default;
  virtual std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) = 0;
  /// Called whenever the parent is replaced (acceptance or restart).
  virtual void parent_changed() = 0;
};

class EdgeSwitchOperator final : public MutationOperator {
 public:
  explicit EdgeSwitchOperator(const DemandGraph& demand) : demand_(&demand) {}
  explicit EdgeSwitchOperator(DemandGraph&&) = delete;
  std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) override;
  void parent_changed() override { tracker_.reset(); }

 private:
  const DemandGraph* demand_;
  EdgeTracker tracker_;
};

/// Never gives up.
class EdgeReplaceRandomOperator final : public MutationOperator {
 public:
  explicit EdgeReplaceRandomOperator(const DemandGraph& demand) : demand_(&demand) {}
  explicit EdgeReplaceRandomOperator(DemandGraph&&) = delete;
  std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) override;
  void parent_changed() override {}

 private:
  const DemandGraph* demand_;
};

class EdgeReplaceOptimalOperator final : public MutationOperator {
 public:
  explicit EdgeReplaceOptimalOperator(const DemandGraph& demand) : demand_(&demand) {}
  explicit EdgeReplaceOptimalOperator(DemandGraph&&) = delete;
  std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) override;
  void parent_changed() override { tracker_.reset(); }

 private:
  const DemandGraph* demand_;
  EdgeTracker tracker_;
};

/// Tracks tried pairs only for trees of at most `kTrackedLimit` vertices;
/// larger trees sample with replacement and never give up.
class SubtreeSwapOperator final : public MutationOperator {
 public:
  static constexpr std::size_t kTrackedLimit = 1000;

  explicit SubtreeSwapOperator(const DemandGraph& demand) : demand_(&demand) {}
  explicit SubtreeSwapOperator(DemandGraph&&) = delete;
  std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) override;
  void parent_changed() override { primed_ = false; }

 private:
  const DemandGraph* demand_;
  PairTracker tracker_;
  bool primed_ = false;
};

/// Uniform choice among edge switch, subtree swap and optimal edge
/// replacement. An exhausted operator is skipped until the parent changes;
/// exhaustion is reported once all three are exhausted.
class MixedOperator final : public MutationOperator {
 public:
  explicit MixedOperator(const DemandGraph& demand);
  explicit MixedOperator(DemandGraph&&) = delete;
  std::optional<MutationOutcome> propose(const Solution& parent, Rng& rng) override;
  void parent_changed() override;

 private:
  EdgeSwitchOperator edge_switch_;
  SubtreeSwapOperator subtree_swap_;
  EdgeReplaceOptimalOperator replace_optimal_;
  std::array<bool, 3> exhausted_{};
};

/// Always exhausted; turns local search into repeated initialization.
class NoMutation final : public MutationOperator {
 public:
  std::optional<MutationOutcome> propose(const Solution&, Rng&) override { return std::nullopt; }
  void parent_changed() override {}
};

/// Names: "switch", "subtree", "replaceR", "replaceO", "random", "" (none).
/// Throws Error on an unknown name.
std::unique_ptr<MutationOperator> make_mutation(std::string_view name, const DemandGraph& demand);

}  // namespace treenet
