// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/demand.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace treenet {

std::string to_string(Cost value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Cost parse_cost(std::string_view text) {
  if (text.empty()) throw Error("empty cost");
  Cost value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error("invalid cost '" + std::string(text) + "'");
    const Cost next = value * 10 + static_cast<Cost>(c - '0');
    if (next / 10 != value) throw Error("cost overflow '" + std::string(text) + "'");
    value = next;
  }
  return value;
}

DemandGraph::DemandGraph(std::size_t n, std::vector<DemandEntry> entries)
    : n_(n), entries_(std::move(entries)), row_total_(n, 0) {
  for (auto& e : entries_) {
    if (e.i >= n || e.j >= n) throw Error("demand entry out of range");
    if (e.i == e.j) throw Error("self-demand at vertex " + std::to_string(e.i));
    if (e.w == 0) throw Error("zero-weight demand entry");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(entries_.begin(), entries_.end(), [](const DemandEntry& a, const DemandEntry& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k].i == entries_[k - 1].i && entries_[k].j == entries_[k - 1].j)
      throw Error("duplicate demand pair (" + std::to_string(entries_[k].i) + "," +
                  std::to_string(entries_[k].j) + ")");
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : entries_) {
    ++degree[e.i];
    ++degree[e.j];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : entries_) {
    adj_[fill[e.i]++] = {e.j, e.w};
    adj_[fill[e.j]++] = {e.i, e.w};
    row_total_[e.i] += e.w;
    row_total_[e.j] += e.w;
    total_ += e.w;
  }
}

Weight DemandGraph::weight(Vertex i, Vertex j) const {
  for (const auto& nb : neighbors(i))
    if (nb.v == j) return nb.w;
  return 0;
}

std::vector<std::vector<Weight>> DemandGraph::to_dense() const {
  std::vector<std::vector<Weight>> m(n_, std::vector<Weight>(n_, 0));
  for (const auto& e : entries_) m[e.i][e.j] = m[e.j][e.i] = e.w;
  return m;
}

DemandGraph demand_from_dense(const std::vector<std::vector<Weight>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<DemandEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error("matrix is not square at row " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0)
      throw Error("non-zero diagonal at (" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i])
        throw Error("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (matrix[i][j] > 0)
        entries.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), matrix[i][j]});
    }
  }
  return DemandGraph(n, std::move(entries));
}

void DemandBuilder::add(Vertex i, Vertex j, Weight w) {
  if (i == j) throw Error("self-demand at vertex " + std::to_string(i));
  if (i > j) std::swap(i, j);
  n_ = std::max<std::size_t>(n_, j + 1);
  if (w == 0) return;
  Weight& slot = acc_[{i, j}];
  if (slot > std::numeric_limits<Weight>::max() - w) throw Error("demand weight overflow");
  slot += w;
}

DemandGraph DemandBuilder::build() const {
  std::vector<DemandEntry> entries;
  entries.reserve(acc_.size());
  for (const auto& [pair, w] : acc_) entries.push_back({pair.first, pair.second, w});
  return DemandGraph(n_, std::move(entries));
}

}  // namespace treenet
