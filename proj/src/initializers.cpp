// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/initializers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "treenet/cost.hpp"

namespace treenet {

DisjointSetForest::DisjointSetForest(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSetForest::find(Vertex v) {
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) v = std::exchange(parent_[v], root);
  return root;
}

bool DisjointSetForest::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

MstInitializer::MstInitializer(const DemandGraph& demand, std::uint64_t seed)
    : demand_(&demand),
      sorted_(demand.entries().begin(), demand.entries().end()),
      rng_(seed) {
  std::stable_sort(sorted_.begin(), sorted_.end(),
                   [](const DemandEntry& a, const DemandEntry& b) { return a.w > b.w; });
  for (std::size_t k = 0; k < sorted_.size(); ++k)
    if (k == 0 || sorted_[k].w != sorted_[k - 1].w) run_starts_.push_back(k);
  run_starts_.push_back(sorted_.size());
}

Tree MstInitializer::build() {
  for (std::size_t r = 0; r + 1 < run_starts_.size(); ++r) {
    auto first = sorted_.begin() + static_cast<std::ptrdiff_t>(run_starts_[r]);
    auto last = sorted_.begin() + static_cast<std::ptrdiff_t>(run_starts_[r + 1]);
    if (last - first > 1) std::shuffle(first, last, rng_);
  }

  const std::size_t n = demand_->size();
  Tree tree(n);
  DisjointSetForest dsu(n);
  for (const auto& e : sorted_) {
    if (dsu.components() == 1) break;
    if (tree.degree(e.i) == kMaxDegree || tree.degree(e.j) == kMaxDegree) continue;
    if (!dsu.unite(e.i, e.j)) continue;
    tree.add_edge(e.i, e.j);
  }
  if (dsu.components() == 1) return tree;

  // join the leftover components; every component has an open vertex
  // (a leaf or an isolated vertex)
  const Vertex main_root = dsu.find(0);
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[dsu.find(v)].push_back(v);
  std::set<Vertex> open;
  for (Vertex v : members[main_root])
    if (tree.degree(v) < kMaxDegree) open.insert(v);

  std::vector<bool> joined(n, false);
  joined[main_root] = true;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = dsu.find(v);
    if (joined[root]) continue;
    joined[root] = true;
    const auto& comp = members[root];
    const Vertex local = *std::find_if(comp.begin(), comp.end(),
                                       [&](Vertex x) { return tree.degree(x) < kMaxDegree; });
    const Vertex anchor = *open.begin();
    tree.add_edge(local, anchor);
    if (tree.degree(anchor) == kMaxDegree) open.erase(anchor);
    for (Vertex x : comp)
      if (tree.degree(x) < kMaxDegree) open.insert(x);
  }
  return tree;
}

std::optional<Solution> MstInitializer::pull() {
  Tree tree = build();
  const Cost c = cost(tree, *demand_);
  return Solution{std::move(tree), c};
}

Tree mst_init(const DemandGraph& demand, std::uint64_t seed) {
  return MstInitializer(demand, seed).build();
}

BstDpTables::BstDpTables(std::size_t n)
    : n_(n), boundary_(n * n, 0), best_(n * n, 0), root_(n * n, 0), row_scratch_(n, 0) {}

Solution bst_optimal_for_permutation(const DemandGraph& demand, const Permutation& pi,
                                     BstDpTables& tables) {
  const std::size_t n = tables.n_;
  if (pi.size() != n || demand.size() != n)
    throw Error("BST tables sized for " + std::to_string(n) + " vertices");
  if (n == 0) return {Tree(0), 0};

  auto at = [n](std::size_t l, std::size_t r) { return l * n + r; };
  auto& boundary = tables.boundary_;
  auto& best = tables.best_;
  auto& root = tables.root_;
  auto& row = tables.row_scratch_;

  for (std::size_t r = tables.valid_prefix_; r < n; ++r) {
    const Vertex vr = pi[r];
    for (const auto& nb : demand.neighbors(vr)) row[nb.v] = nb.w;

    // boundary of [l, r] from [l, r-1]: add the row of pi_r, then remove
    // twice its demand into [l, r-1]
    const Cost row_total = demand.row_total(vr);
    boundary[at(r, r)] = row_total;
    best[at(r, r)] = 0;
    root[at(r, r)] = static_cast<std::uint32_t>(r);
    ++tables.cells_;
    Cost inner = 0;
    for (std::size_t l = r; l-- > 0;) {
      inner += row[pi[l]];
      boundary[at(l, r)] = boundary[at(l, r - 1)] + row_total - 2 * inner;

      // child segments pay their boundary for the edge to the root
      Cost best_value = best[at(l + 1, r)] + boundary[at(l + 1, r)];
      std::uint32_t best_root = static_cast<std::uint32_t>(l);
      for (std::size_t k = l + 1; k <= r; ++k) {
        Cost value = best[at(l, k - 1)] + boundary[at(l, k - 1)];
        if (k < r) value += best[at(k + 1, r)] + boundary[at(k + 1, r)];
        if (value < best_value) {
          best_value = value;
          best_root = static_cast<std::uint32_t>(k);
        }
      }
      tables.trials_ += r - l + 1;
      best[at(l, r)] = best_value;
      root[at(l, r)] = best_root;
      ++tables.cells_;
    }

    for (const auto& nb : demand.neighbors(vr)) row[nb.v] = 0;
  }
  tables.valid_prefix_ = n;

  Tree tree(n);
  struct Segment {
    std::size_t l, r;
    Vertex parent;
    bool has_parent;
  };
  std::vector<Segment> stack{{0, n - 1, 0, false}};
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    const std::size_t k = root[at(s.l, s.r)];
    const Vertex v = pi[k];
    if (s.has_parent) tree.add_edge(s.parent, v);
    if (k + 1 <= s.r) stack.push_back({k + 1, s.r, v, true});
    if (k > s.l) stack.push_back({s.l, k - 1, v, true});
  }
  return {std::move(tree), best[at(0, n - 1)]};
}

BstRandStream::BstRandStream(const DemandGraph& demand, std::uint64_t seed)
    : demand_(&demand), tables_(demand.size()), order_(demand.size()), rng_(seed) {
  std::iota(order_.begin(), order_.end(), Vertex{0});
}

std::optional<Solution> BstRandStream::pull() {
  std::shuffle(order_.begin(), order_.end(), rng_);
  last_ = Permutation(order_);
  tables_.invalidate_from(0);
  return bst_optimal_for_permutation(*demand_, last_, tables_);
}

bool next_admissible_permutation(std::vector<Vertex>& order) {
  do {
    if (!std::next_permutation(order.begin(), order.end())) return false;
  } while (order.front() > order.back());
  return true;
}

BstNextStream::BstNextStream(const DemandGraph& demand)
    : demand_(&demand), tables_(demand.size()), order_(demand.size()) {
  std::iota(order_.begin(), order_.end(), Vertex{0});
}

std::optional<Solution> BstNextStream::pull() {
  if (exhausted_ || order_.empty()) {
    exhausted_ = true;
    return std::nullopt;
  }
  if (started_) {
    if (!next_admissible_permutation(order_)) {
      exhausted_ = true;
      return std::nullopt;
    }
    const auto prev = last_.order();
    const auto diverge = std::mismatch(prev.begin(), prev.end(), order_.begin());
    tables_.invalidate_from(static_cast<std::size_t>(diverge.first - prev.begin()));
  }
  started_ = true;
  last_ = Permutation(order_);
  return bst_optimal_for_permutation(*demand_, last_, tables_);
}

}  // namespace treenet
