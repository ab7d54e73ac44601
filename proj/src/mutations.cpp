// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/mutations.hpp"

#include <algorithm>

#include "treenet/cost.hpp"

namespace treenet {

std::string_view to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::kEdgeSwitch:
      return "switch";
    case MutationKind::kEdgeReplaceRandom:
      return "replaceR";
    case MutationKind::kEdgeReplaceOptimal:
      return "replaceO";
    case MutationKind::kSubtreeSwap:
      return "subtree";
  }
  return "?";
}

namespace {

void require_edge(const Tree& tree, Edge e) {
  if (e.u >= tree.size() || e.v >= tree.size() || !tree.has_edge(e.u, e.v))
    throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in tree");
}

struct Attachment {
  Vertex vertex;
  CostDelta value;       // sum of mass * distance to `vertex`
  CostDelta root_value;  // same sum measured at the component root
};

/// Weighted 1-median of the component of `root` in `forest`, restricted to
/// vertices with a free degree slot. First minimum in DFS preorder wins.
class MedianFinder {
 public:
  explicit MedianFinder(std::size_t n) : parent_(n), depth_(n), subtree_(n), value_(n) {}

  Attachment solve(const Tree& forest, Vertex root, const std::vector<Cost>& mass) {
    order_.clear();
    stack_.assign(1, root);
    parent_[root] = root;
    depth_[root] = 0;
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      order_.push_back(x);
      const auto nb = forest.neighbors(x);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (x != root && *it == parent_[x]) continue;
        parent_[*it] = x;
        depth_[*it] = depth_[x] + 1;
        stack_.push_back(*it);
      }
    }

    CostDelta at_root = 0;
    for (Vertex x : order_) {
      subtree_[x] = mass[x];
      at_root += static_cast<CostDelta>(mass[x]) * depth_[x];
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      if (*it != root) subtree_[parent_[*it]] += subtree_[*it];
    const auto total = static_cast<CostDelta>(subtree_[root]);

    // moving the attachment point from p to its child c brings subtree(c)
    // one step closer and the rest of the mass one step further away
    Attachment best{root, at_root, at_root};
    value_[root] = at_root;
    for (Vertex x : order_) {
      if (x != root) {
        const auto closer = static_cast<CostDelta>(subtree_[x]);
        value_[x] = value_[parent_[x]] + total - 2 * closer;
      }
      if (forest.degree(x) < kMaxDegree && value_[x] < best.value) {
        best.vertex = x;
        best.value = value_[x];
      }
    }
    return best;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<Cost> subtree_;
  std::vector<CostDelta> value_;
};

}  // namespace

MutationOutcome edge_switch(const Solution& parent, const DemandGraph& demand, Edge uv) {
  const Tree& tree = parent.tree;
  require_edge(tree, uv);
  const Vertex u = uv.u, v = uv.v;

  std::vector<std::uint8_t> in_u(tree.size(), 0);
  mark_side(tree, u, v, in_u, 1);

  // distances from u grow by one inside U and shrink by one inside V; the
  // mirror image holds for v
  CostDelta delta = 0;
  for (const auto& nb : demand.neighbors(u)) {
    if (nb.v == v) continue;
    delta += in_u[nb.v] ? static_cast<CostDelta>(nb.w) : -static_cast<CostDelta>(nb.w);
  }
  for (const auto& nb : demand.neighbors(v)) {
    if (nb.v == u) continue;
    delta += in_u[nb.v] ? -static_cast<CostDelta>(nb.w) : static_cast<CostDelta>(nb.w);
  }

  MutationOutcome out{tree, static_cast<Cost>(static_cast<CostDelta>(parent.cost) + delta),
                      MutationKind::kEdgeSwitch, {}, {}};
  std::vector<Vertex> from_u, from_v;
  for (Vertex x : tree.neighbors(u))
    if (x != v) from_u.push_back(x);
  for (Vertex x : tree.neighbors(v))
    if (x != u) from_v.push_back(x);
  for (Vertex x : from_u) {
    out.tree.remove_edge(u, x);
    out.removed.push_back({u, x});
  }
  for (Vertex x : from_v) {
    out.tree.remove_edge(v, x);
    out.removed.push_back({v, x});
  }
  for (Vertex x : from_u) {
    out.tree.add_edge(v, x);
    out.added.push_back({v, x});
  }
  for (Vertex x : from_v) {
    out.tree.add_edge(u, x);
    out.added.push_back({u, x});
  }
  return out;
}

MutationOutcome edge_replace(const Solution& parent, const DemandGraph& demand, Edge removed,
                             Edge added) {
  require_edge(parent.tree, removed);
  MutationOutcome out{parent.tree, 0, MutationKind::kEdgeReplaceRandom, {removed}, {added}};
  out.tree.remove_edge(removed.u, removed.v);
  if (added.u >= out.tree.size() || added.v >= out.tree.size())
    throw Error("replacement edge out of range");
  std::vector<std::uint8_t> side(out.tree.size(), 0);
  mark_side(out.tree, removed.u, removed.v, side, 1);
  if (side[added.u] == side[added.v])
    throw Error("replacement edge does not reconnect the two components");
  out.tree.add_edge(added.u, added.v);
  out.cost = cost(out.tree, demand);
  return out;
}

MutationOutcome edge_replace_random(const Solution& parent, const DemandGraph& demand, Rng& rng) {
  const Tree& tree = parent.tree;
  if (tree.size() < 2) throw Error("edge replacement needs at least two vertices");
  const auto edges = tree.edges();
  const Edge removed =
      edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];

  Tree cut = tree;
  cut.remove_edge(removed.u, removed.v);
  std::vector<std::uint8_t> mark(tree.size(), 0);
  const auto side_u = mark_side(cut, removed.u, removed.v, mark, 1);
  const auto side_v = mark_side(cut, removed.v, removed.u, mark, 2);

  // each side keeps a constant fraction of open vertices, so rejection is cheap
  auto sample_open = [&](const std::vector<Vertex>& side) {
    std::uniform_int_distribution<std::size_t> pick(0, side.size() - 1);
    for (;;) {
      const Vertex x = side[pick(rng)];
      if (cut.degree(x) < kMaxDegree) return x;
    }
  };
  const Vertex a = sample_open(side_u);
  const Vertex b = sample_open(side_v);

  MutationOutcome out{std::move(cut), 0, MutationKind::kEdgeReplaceRandom, {removed}, {{a, b}}};
  out.tree.add_edge(a, b);
  out.cost = cost(out.tree, demand);
  return out;
}

MutationOutcome edge_replace_optimal(const Solution& parent, const DemandGraph& demand, Edge uv) {
  const Tree& tree = parent.tree;
  require_edge(tree, uv);
  const std::size_t n = tree.size();
  if (demand.size() != n) throw Error("tree and demand sizes differ");

  Tree cut = tree;
  cut.remove_edge(uv.u, uv.v);
  std::vector<std::uint8_t> in_u(n, 0);
  mark_side(cut, uv.u, uv.v, in_u, 1);

  // mass[x]: demand between x and the other component
  std::vector<Cost> mass(n, 0);
  for (const auto& e : demand.entries()) {
    if (in_u[e.i] != in_u[e.j]) {
      mass[e.i] += e.w;
      mass[e.j] += e.w;
    }
  }

  MedianFinder finder(n);
  const Attachment a = finder.solve(cut, uv.u, mass);
  const Attachment b = finder.solve(cut, uv.v, mass);

  // cross pairs pay d(i, a) + 1 + d(b, j); the "+1" part and the in-component
  // distances are unchanged
  const CostDelta delta = (a.value - a.root_value) + (b.value - b.root_value);
  MutationOutcome out{std::move(cut),
                      static_cast<Cost>(static_cast<CostDelta>(parent.cost) + delta),
                      MutationKind::kEdgeReplaceOptimal,
                      {uv},
                      {{a.vertex, b.vertex}}};
  out.tree.add_edge(a.vertex, b.vertex);
  return out;
}

std::pair<Vertex, Vertex> subtree_swap_anchors(const Tree& tree, Vertex v1, Vertex v2) {
  const std::size_t n = tree.size();
  if (v1 >= n || v2 >= n) throw Error("subtree swap vertex out of range");
  if (v1 == v2) throw Error("subtree swap needs two different vertices");
  if (tree.has_edge(v1, v2)) throw Error("subtree swap vertices are adjacent");

  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::vector<Vertex> stack{v1};
  parent[v1] = v1;
  while (!stack.empty() && parent[v2] == n) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : tree.neighbors(x)) {
      if (parent[y] == n) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  if (parent[v2] == n) throw Error("subtree swap vertices are not connected");
  const Vertex u2 = parent[v2];
  Vertex u1 = v2;
  while (parent[u1] != v1) u1 = parent[u1];
  return {u1, u2};
}

MutationOutcome subtree_swap(const Solution& parent, const DemandGraph& demand, Vertex v1,
                             Vertex v2) {
  const auto [u1, u2] = subtree_swap_anchors(parent.tree, v1, v2);
  MutationOutcome out{parent.tree, 0, MutationKind::kSubtreeSwap, {{v1, u1}, {v2, u2}},
                      {{v1, u2}, {v2, u1}}};
  out.tree.remove_edge(v1, u1);
  out.tree.remove_edge(v2, u2);
  out.tree.add_edge(v1, u2);
  out.tree.add_edge(v2, u1);
  out.cost = cost(out.tree, demand);
  return out;
}

std::optional<Edge> EdgeTracker::next(const Tree& tree, Rng& rng) {
  if (!primed_) {
    pending_ = tree.edges();
    std::shuffle(pending_.begin(), pending_.end(), rng);
    primed_ = true;
  }
  if (pending_.empty()) return std::nullopt;
  const Edge e = pending_.back();
  pending_.pop_back();
  return e;
}

void PairTracker::reset(std::size_t n) {
  n_ = n;
  total_ = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  drawn_ = 0;
  displaced_.clear();
  row_start_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    row_start_[i] = static_cast<std::uint64_t>(i) * (2 * n - i - 1) / 2;
}

std::pair<Vertex, Vertex> PairTracker::decode(std::uint64_t index) const {
  const auto it = std::upper_bound(row_start_.begin(), row_start_.end(), index) - 1;
  const auto i = static_cast<std::uint64_t>(it - row_start_.begin());
  return {static_cast<Vertex>(i), static_cast<Vertex>(i + 1 + (index - *it))};
}

std::optional<std::pair<Vertex, Vertex>> PairTracker::next(Rng& rng) {
  if (drawn_ == total_) return std::nullopt;
  const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(drawn_, total_ - 1)(rng);
  auto value_at = [this](std::uint64_t pos) {
    const auto it = displaced_.find(pos);
    return it == displaced_.end() ? pos : it->second;
  };
  const std::uint64_t chosen = value_at(k);
  displaced_[k] = value_at(drawn_);
  displaced_.erase(drawn_);
  ++drawn_;
  return decode(chosen);
}

std::optional<MutationOutcome> EdgeSwitchOperator::propose(const Solution& parent, Rng& rng) {
  const auto e = tracker_.next(parent.tree, rng);
  if (!e) return std::nullopt;
  return edge_switch(parent, *demand_, *e);
}

std::optional<MutationOutcome> EdgeReplaceRandomOperator::propose(const Solution& parent,
                                                                  Rng& rng) {
  if (parent.tree.size() < 2) return std::nullopt;
  return edge_replace_random(parent, *demand_, rng);
}

std::optional<MutationOutcome> EdgeReplaceOptimalOperator::propose(const Solution& parent,
                                                                   Rng& rng) {
  const auto e = tracker_.next(parent.tree, rng);
  if (!e) return std::nullopt;
  return edge_replace_optimal(parent, *demand_, *e);
}

std::optional<MutationOutcome> SubtreeSwapOperator::propose(const Solution& parent, Rng& rng) {
  const Tree& tree = parent.tree;
  const std::size_t n = tree.size();
  if (n <= kTrackedLimit) {
    if (!primed_) {
      tracker_.reset(n);
      primed_ = true;
    }
    while (const auto pair = tracker_.next(rng)) {
      if (tree.has_edge(pair->first, pair->second)) continue;
      return subtree_swap(parent, *demand_, pair->first, pair->second);
    }
    return std::nullopt;
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (;;) {
    const Vertex v1 = pick(rng), v2 = pick(rng);
    if (v1 != v2 && !tree.has_edge(v1, v2)) return subtree_swap(parent, *demand_, v1, v2);
  }
}

MixedOperator::MixedOperator(const DemandGraph& demand)
    : edge_switch_(demand), subtree_swap_(demand), replace_optimal_(demand) {}

std::optional<MutationOutcome> MixedOperator::propose(const Solution& parent, Rng& rng) {
  const std::array<MutationOperator*, 3> ops{&edge_switch_, &subtree_swap_, &replace_optimal_};
  for (;;) {
    std::array<std::size_t, 3> live{};
    std::size_t count = 0;
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (!exhausted_[i]) live[count++] = i;
    if (count == 0) return std::nullopt;
    const std::size_t pick = live[std::uniform_int_distribution<std::size_t>(0, count - 1)(rng)];
    if (auto out = ops[pick]->propose(parent, rng)) return out;
    exhausted_[pick] = true;
  }
}

void MixedOperator::parent_changed() {
  edge_switch_.parent_changed();
  subtree_swap_.parent_changed();
  replace_optimal_.parent_changed();
  exhausted_.fill(false);
}

std::unique_ptr<MutationOperator> make_mutation(std::string_view name, const DemandGraph& demand) {
  if (name.empty()) return std::make_unique<NoMutation>();
  if (name == "switch") return std::make_unique<EdgeSwitchOperator>(demand);
  if (name == "subtree") return std::make_unique<SubtreeSwapOperator>(demand);
  if (name == "replaceR") return std::make_unique<EdgeReplaceRandomOperator>(demand);
  if (name == "replaceO") return std::make_unique<EdgeReplaceOptimalOperator>(demand);
  if (name == "random") return std::make_unique<MixedOperator>(demand);
  throw Error("unknown mutation '" + std::string(name) + "'");
}

}  // namespace treenet
