// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/reduction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <limits>
#include <numeric>
#include <set>

#include "treenet/cost.hpp"

namespace treenet {

void validate_ola(const OlaInstance& ola) {
  std::set<Edge> seen;
  for (const Edge& e : ola.edges) {
    if (e.u >= ola.n || e.v >= ola.n) throw Error("OLA edge out of range");
    if (e.u == e.v) throw Error("OLA self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert(e.canonical()).second)
      throw Error("duplicate OLA edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
}

Bijection::Bijection(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  std::vector<bool> used(labels_.size() + 1, false);
  for (std::uint32_t label : labels_) {
    if (label == 0 || label > labels_.size() || used[label])
      throw Error("labels are not a bijection onto 1..n");
    used[label] = true;
  }
}

std::uint64_t ola_cost(const OlaInstance& ola, const Bijection& phi) {
  if (phi.size() != ola.n) throw Error("bijection size differs from the OLA instance");
  std::uint64_t total = 0;
  for (const Edge& e : ola.edges) {
    const auto a = phi(e.u), b = phi(e.v);
    total += a > b ? a - b : b - a;
  }
  return total;
}

ObtInstance build_obt_instance(const OlaInstance& ola) {
  validate_ola(ola);
  const auto n = static_cast<unsigned __int128>(ola.n);
  const auto m = static_cast<unsigned __int128>(ola.edges.size());
  const unsigned __int128 d1 = ola.bound + 2 * m + 1;
  const unsigned __int128 d2 = (n * n + n + 1) * d1;
  if (d2 > std::numeric_limits<Weight>::max()) throw Error("reduced demand exceeds 64 bits");

  ObtInstance obt;
  obt.originals = ola.n;
  obt.d1 = static_cast<Weight>(d1);
  obt.d2 = static_cast<Weight>(d2);
  obt.bound = (n + 1) * d2 + n * (n + 1) * d1 + ola.bound + 2 * m;

  DemandBuilder builder(2 * ola.n + 2);
  for (const Edge& e : ola.edges) builder.add(e.u, e.v, 1);
  // with a single original h_2 and h_{n+1} coincide and the two pairs add up
  for (Vertex v = 0; v < ola.n; ++v) {
    builder.add(v, obt.helper(2), obt.d1);
    builder.add(v, obt.helper(ola.n + 1), obt.d1);
  }
  for (std::size_t i = 1; i < obt.helper_count(); ++i)
    builder.add(obt.helper(i), obt.helper(i + 1), obt.d2);
  obt.demand = builder.build();
  return obt;
}

Tree tree_from_bijection(const OlaInstance& ola, const Bijection& phi) {
  if (phi.size() != ola.n) throw Error("bijection size differs from the OLA instance");
  const std::size_t helpers = ola.n + 2;
  const auto helper = [&](std::size_t i) { return static_cast<Vertex>(ola.n + i - 1); };
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < helpers; ++i) edges.push_back({helper(i), helper(i + 1)});
  for (Vertex v = 0; v < ola.n; ++v) edges.push_back({v, helper(1 + phi(v))});
  return Tree::from_edges(ola.n + helpers, edges);
}

std::string_view to_string(ReductionViolation v) {
  switch (v) {
    case ReductionViolation::kHelperLineBroken:
      return "helper line broken";
    case ReductionViolation::kHelperOverloaded:
      return "helper carries more than one original";
    case ReductionViolation::kOriginalNotOnLine:
      return "original not attached to an interior helper";
  }
  return "?";
}

std::variant<Bijection, Infeasible> bijection_from_tree(const OlaInstance& ola,
                                                        const ObtInstance& obt, const Tree& tree) {
  const std::size_t n = ola.n;
  if (tree.size() != n + obt.helper_count() || obt.originals != n)
    throw Error("tree does not match the reduced instance");

  for (std::size_t i = 1; i < obt.helper_count(); ++i) {
    if (!tree.has_edge(obt.helper(i), obt.helper(i + 1)))
      return Infeasible{ReductionViolation::kHelperLineBroken,
                        "h" + std::to_string(i) + " and h" + std::to_string(i + 1) +
                            " are not adjacent"};
  }
  for (std::size_t j = 2; j <= n + 1; ++j) {
    const auto nb = tree.neighbors(obt.helper(j));
    const auto originals = std::count_if(nb.begin(), nb.end(), [&](Vertex x) { return x < n; });
    if (originals > 1)
      return Infeasible{ReductionViolation::kHelperOverloaded,
                        "h" + std::to_string(j) + " carries " + std::to_string(originals)};
  }

  std::vector<std::uint32_t> labels(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x : tree.neighbors(v)) {
      if (x >= obt.helper(2) && x <= obt.helper(n + 1))
        labels[v] = static_cast<std::uint32_t>(x - obt.helper(1));
    }
    if (labels[v] == 0)
      return Infeasible{ReductionViolation::kOriginalNotOnLine,
                        "vertex " + std::to_string(v) + " is not adjacent to h2..h" +
                            std::to_string(n + 1)};
  }
  return Bijection(std::move(labels));
}

OlaOptimum brute_force_ola(const OlaInstance& ola) {
  if (ola.n > 9) throw Error("brute-force OLA is limited to 9 vertices");
  validate_ola(ola);
  std::vector<std::uint32_t> labels(ola.n);
  std::iota(labels.begin(), labels.end(), 1u);
  OlaOptimum best{std::numeric_limits<std::uint64_t>::max(), Bijection(labels)};
  do {
    Bijection phi(labels);
    const auto c = ola_cost(ola, phi);
    if (c < best.cost) best = {c, std::move(phi)};
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

namespace {

/// Decodes a Prüfer sequence into n-1 edges (O(n^2), n is tiny here).
void decode_pruefer(const std::vector<Vertex>& seq, std::size_t n, std::vector<Edge>& edges) {
  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  edges.clear();
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, x});
    --degree[leaf];
    --degree[x];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.push_back({a, b});
}

}  // namespace

ObtOptimum brute_force_obt(const DemandGraph& demand) {
  const std::size_t n = demand.size();
  if (n == 0) throw Error("empty demand");
  if (n > 9) throw Error("brute-force OBT is limited to 9 vertices");
  if (n == 1) return {0, Tree(1)};
  if (n == 2) {
    const std::vector<Edge> e{{0, 1}};
    Tree t = Tree::from_edges(2, e);
    return {cost_naive(t, demand), std::move(t)};
  }

  std::vector<Vertex> seq(n - 2, 0);
  std::vector<std::uint8_t> uses(n, 0);
  std::vector<Edge> edges;
  std::optional<ObtOptimum> best;

  // labels already used twice would give degree 4
  auto visit = [&]() {
    decode_pruefer(seq, n, edges);
    Tree t(n);
    for (const Edge& e : edges) t.add_edge(e.u, e.v);
    const Cost c = cost_naive(t, demand);
    if (!best || c < best->cost) best = ObtOptimum{c, std::move(t)};
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == seq.size()) {
      visit();
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (uses[x] == 2) continue;
      ++uses[x];
      seq[pos] = x;
      rec(pos + 1);
      --uses[x];
    }
  };
  rec(0);
  return std::move(*best);
}

ObtOptimum exact_obt(const DemandGraph& demand) {
  const std::size_t n = demand.size();
  if (n == 0) throw Error("empty demand");
  if (n > 16) throw Error("exact OBT is limited to 16 vertices");
  if (n == 1) return {0, Tree(1)};

  const std::uint32_t full = (1u << n) - 1;
  std::vector<Cost> boundary(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const auto x = static_cast<Vertex>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    Cost inside = 0;
    for (const auto& nb : demand.neighbors(x))
      if (rest >> nb.v & 1u) inside += nb.w;
    boundary[s] = boundary[rest] + demand.row_total(x) - 2 * inside;
  }

  // F: rooted subtree on S whose root has room for the parent edge, paying
  // boundary(S) for that edge. G: up to two such subtrees covering S.
  constexpr Cost kInf = ~Cost{0};
  std::vector<Cost> f(full + 1, kInf), g(full + 1, kInf);
  std::vector<std::uint8_t> f_root(full + 1, 0);
  std::vector<std::uint32_t> g_split(full + 1, 0);
  f[0] = 0;
  g[0] = 0;
  for (std::uint32_t s = 1; s < full; ++s) {
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      const auto r = static_cast<std::uint8_t>(std::countr_zero(bits));
      const Cost value = g[s & ~(1u << r)];
      if (value < f[s]) {
        f[s] = value;
        f_root[s] = r;
      }
    }
    f[s] += boundary[s];

    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t a = s; a != 0; a = (a - 1) & s) {
      if (!(a & low)) continue;
      const Cost value = f[a] + f[s & ~a];
      if (value < g[s]) {
        g[s] = value;
        g_split[s] = a;
      }
    }
  }

  Cost best = kInf;
  std::uint8_t best_root = 0;
  std::uint32_t best_first = 0;
  for (std::uint8_t r = 0; r < n; ++r) {
    const std::uint32_t rest = full & ~(1u << r);
    for (std::uint32_t a = rest;; a = (a - 1) & rest) {
      const Cost value = f[a] + g[rest & ~a];
      if (value < best) {
        best = value;
        best_root = r;
        best_first = a;
      }
      if (a == 0) break;
    }
  }

  Tree tree(n);
  std::vector<std::pair<std::uint32_t, Vertex>> todo;  // (subset, parent)
  auto push_pair = [&](std::uint32_t s, Vertex parent) {
    if (s == 0) return;
    const std::uint32_t a = g_split[s];
    todo.emplace_back(a, parent);
    if (s & ~a) todo.emplace_back(s & ~a, parent);
  };
  if (best_first) todo.emplace_back(best_first, best_root);
  push_pair(full & ~(1u << best_root) & ~best_first, best_root);
  while (!todo.empty()) {
    const auto [s, parent] = todo.back();
    todo.pop_back();
    const Vertex r = f_root[s];
    tree.add_edge(parent, r);
    push_pair(s & ~(1u << r), r);
  }
  return {best, std::move(tree)};
}

}  // namespace treenet
