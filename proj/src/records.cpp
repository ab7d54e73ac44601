// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/records.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "treenet/cost.hpp"

namespace treenet {

using nlohmann::json;

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunRecord make_record(const RunResult& result, std::uint64_t seed, Budget budget,
                      const std::vector<std::string>& labels, std::string digest) {
  RunRecord r;
  r.algorithm = result.algorithm;
  r.seed = seed;
  r.budget = budget;
  r.best_cost = result.best.cost;
  r.queries = result.queries;
  r.wall_ms = result.wall_ms;
  r.exhausted = result.exhausted;
  for (const Edge& e : result.best.tree.edges()) r.tree.emplace_back(labels.at(e.u), labels.at(e.v));
  r.input_digest = std::move(digest);
  return r;
}

std::string to_json_line(const RunRecord& record) {
  json budget = record.budget.kind == Budget::Kind::kSeconds
                    ? json{{"kind", "seconds"}, {"value", record.budget.seconds}}
                    : json{{"kind", "queries"}, {"value", record.budget.queries}};
  json tree = json::array();
  for (const auto& [a, b] : record.tree) tree.push_back({a, b});
  const json j{{"algorithm", record.algorithm},
               {"seed", record.seed},
               {"budget", budget},
               {"best_cost", to_string(record.best_cost)},
               {"queries", record.queries},
               {"wall_ms", record.wall_ms},
               {"exhausted", record.exhausted},
               {"tree", tree},
               {"input_digest", record.input_digest}};
  return j.dump();
}

RunRecord parse_record(std::string_view line) {
  try {
    const json j = json::parse(line);
    RunRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto& budget = j.at("budget");
    const auto kind = budget.at("kind").get<std::string>();
    if (kind == "seconds")
      r.budget = Budget::wall_seconds(budget.at("value").get<double>());
    else if (kind == "queries")
      r.budget = Budget::query_count(budget.at("value").get<std::uint64_t>());
    else
      throw Error("unknown budget kind '" + kind + "'");
    r.best_cost = parse_cost(j.at("best_cost").get<std::string>());
    r.queries = j.at("queries").get<std::uint64_t>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.exhausted = j.at("exhausted").get<bool>();
    for (const auto& e : j.at("tree")) {
      if (!e.is_array() || e.size() != 2) throw Error("tree edge must be a label pair");
      r.tree.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    r.input_digest = j.at("input_digest").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("bad run record: ") + e.what());
  }
}

std::vector<RunRecord> read_records(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

Tree record_tree(const RunRecord& record, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t k = 0; k < labels.size(); ++k) index.emplace(labels[k], static_cast<Vertex>(k));
  std::vector<Edge> edges;
  edges.reserve(record.tree.size());
  for (const auto& [a, b] : record.tree) {
    const auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw Error("record names an unknown label");
    edges.push_back({ia->second, ib->second});
  }
  return Tree::from_edges(labels.size(), edges);
}

bool verify_record(const RunRecord& record, const LabeledDemand& input, std::string_view digest) {
  if (record.input_digest != digest) return false;
  try {
    return cost(record_tree(record, input.labels), input.demand) == record.best_cost;
  } catch (const Error&) {
    return false;
  }
}

std::map<std::string, CostSummary> summarize_by_algorithm(std::span<const RunRecord> records) {
  std::map<std::string, std::pair<std::vector<Cost>, std::vector<std::uint64_t>>> groups;
  for (const auto& r : records) {
    auto& g = groups[r.algorithm];
    g.first.push_back(r.best_cost);
    g.second.push_back(r.queries);
  }
  std::map<std::string, CostSummary> out;
  for (const auto& [name, g] : groups) out.emplace(name, summarize(g.first, g.second));
  return out;
}

std::string format_summary(const std::map<std::string, CostSummary>& rows) {
  std::size_t width = 9;
  for (const auto& [name, s] : rows) width = std::max(width, name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "algorithm" << std::right
      << std::setw(6) << "runs" << std::setw(16) << "min" << std::setw(16) << "median"
      << std::setw(16) << "max" << std::setw(16) << "med_queries" << '\n';
  for (const auto& [name, s] : rows)
    out << std::left << std::setw(static_cast<int>(width)) << name << std::right << std::setw(6)
        << s.runs << std::setw(16) << to_string(s.min) << std::setw(16) << to_string(s.median)
        << std::setw(16) << to_string(s.max) << std::setw(16) << s.median_queries << '\n';
  return out.str();
}

}  // namespace treenet
