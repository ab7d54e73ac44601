// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/workloads.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace treenet {

std::vector<VertexPair> all_pairs(std::size_t n) {
  std::vector<VertexPair> pairs;
  pairs.reserve(n * (n - (n > 0)) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

void validate(const SyntheticConfig& config) {
  if (config.pair_pool.empty()) throw Error("empty pair pool");
  if (!(config.alpha >= 0.0 && config.alpha < 1.0)) throw Error("alpha must lie in [0, 1)");
  std::set<VertexPair> seen;
  for (auto [i, j] : config.pair_pool) {
    if (i >= config.n || j >= config.n) throw Error("pool pair out of range");
    if (i == j) throw Error("pool pair is a self-loop");
    if (!seen.insert(std::minmax(i, j)).second) throw Error("repeated pool pair");
  }
}

std::vector<std::uint32_t> synthetic_requests(const SyntheticConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint32_t> draw(
      0, static_cast<std::uint32_t>(config.pair_pool.size() - 1));
  std::bernoulli_distribution repeat(config.alpha);
  std::vector<std::uint32_t> out;
  out.reserve(config.requests);
  for (std::uint64_t k = 0; k < config.requests; ++k) {
    if (k > 0 && repeat(rng))
      out.push_back(out.back());
    else
      out.push_back(draw(rng));
  }
  return out;
}

DemandGraph generate_synthetic(const SyntheticConfig& config) {
  const auto requests = synthetic_requests(config);
  std::vector<Weight> counts(config.pair_pool.size(), 0);
  for (auto idx : requests) ++counts[idx];
  DemandBuilder builder(config.n);
  for (std::size_t k = 0; k < counts.size(); ++k)
    builder.add(config.pair_pool[k].first, config.pair_pool[k].second, counts[k]);
  return builder.build();
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(++line_no, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

std::string at_line(std::size_t line_no) { return " at line " + std::to_string(line_no); }

Weight parse_weight(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '-') throw Error("negative weight" + at_line(line_no));
  Weight w = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw Error("malformed weight" + at_line(line_no));
  return w;
}

class LabelTable {
 public:
  Vertex intern(std::string_view label) {
    const auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
    if (inserted) labels_.emplace_back(label);
    return static_cast<Vertex>(it->second);
  }
  std::vector<std::string> take() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> labels_;
};

}  // namespace

LabeledDemand parse_edgelist(std::string_view text) {
  LabelTable labels;
  DemandBuilder builder;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    if (fields.size() == 1) {
      labels.intern(fields[0]);
      return;
    }
    if (fields.size() != 3) throw Error("malformed line " + std::to_string(line_no));
    if (fields[0] == fields[1]) throw Error("self-loop" + at_line(line_no));
    const Weight w = parse_weight(fields[2], line_no);
    const Vertex i = labels.intern(fields[0]);
    const Vertex j = labels.intern(fields[1]);
    builder.add(i, j, w);
  });
  builder.resize(labels.size());
  return {builder.build(), labels.take()};
}

LabeledDemand parse_matrix(std::string_view text) {
  std::vector<std::vector<Weight>> rows;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    auto& row = rows.emplace_back();
    for (auto f : fields) row.push_back(parse_weight(f, line_no));
  });
  LabeledDemand out{demand_from_dense(rows), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) out.labels.push_back(std::to_string(i));
  return out;
}

std::string write_edgelist(const DemandGraph& demand, const std::vector<std::string>& labels) {
  if (labels.size() != demand.size()) throw Error("label count differs from demand size");
  std::ostringstream out;
  std::vector<bool> mentioned(demand.size(), false);
  for (const auto& e : demand.entries()) {
    out << labels[e.i] << ' ' << labels[e.j] << ' ' << e.w << '\n';
    mentioned[e.i] = mentioned[e.j] = true;
  }
  for (std::size_t v = 0; v < demand.size(); ++v)
    if (!mentioned[v]) out << labels[v] << '\n';
  return out.str();
}

std::string write_tree(const Tree& tree, const std::vector<std::string>& labels) {
  if (labels.size() != tree.size()) throw Error("label count differs from tree size");
  std::string out;
  for (const Edge& e : tree.edges()) out += labels[e.u] + ' ' + labels[e.v] + '\n';
  return out;
}

Tree parse_tree(std::string_view text, const std::vector<std::string>& labels) {
  std::unordered_map<std::string_view, Vertex> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], static_cast<Vertex>(k));
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    if (fields.size() != 2) throw Error("malformed line " + std::to_string(line_no));
    Vertex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto it = index.find(fields[k]);
      if (it == index.end())
        throw Error("unknown label '" + std::string(fields[k]) + "'" + at_line(line_no));
      ends[k] = it->second;
    }
    edges.push_back({ends[0], ends[1]});
  });
  return Tree::from_edges(labels.size(), edges);
}

std::vector<VertexPair> parse_pair_pool(std::string_view text) {
  std::vector<VertexPair> pool;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    if (fields.size() != 2) throw Error("malformed line " + std::to_string(line_no));
    Vertex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto [ptr, ec] =
          std::from_chars(fields[k].data(), fields[k].data() + fields[k].size(), ends[k]);
      if (ec != std::errc{} || ptr != fields[k].data() + fields[k].size())
        throw Error("malformed vertex index" + at_line(line_no));
    }
    pool.emplace_back(ends[0], ends[1]);
  });
  return pool;
}

}  // namespace treenet
