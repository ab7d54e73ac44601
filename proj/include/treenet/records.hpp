// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treenet/search.hpp"
#include "treenet/stats.hpp"
#include "treenet/workloads.hpp"

namespace treenet {

/// One optimization run, persisted as a single JSON line.
struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  Budget budget;
  Cost best_cost = 0;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
  bool exhausted = false;
  std::vector<std::pair<std::string, std::string>> tree;
  std::string input_digest;
};

/// FNV-1a 64 of the input bytes, as 16 hex digits.
std::string input_digest(std::string_view bytes);

RunRecord make_record(const RunResult& result, std::uint64_t seed, Budget budget,
                      const std::vector<std::string>& labels, std::string digest);

std::string to_json_line(const RunRecord& record);
/// Throws Error on malformed JSON or missing fields.
RunRecord parse_record(std::string_view line);
/// Skips blank lines.
std::vector<RunRecord> read_records(std::istream& in);

Tree record_tree(const RunRecord& record, const std::vector<std::string>& labels);

/// Re-evaluates the stored tree; true iff it matches the stored cost and the
/// digest matches `digest`.
bool verify_record(const RunRecord& record, const LabeledDemand& input, std::string_view digest);

/// Records grouped by algorithm name, in name order.
std::map<std::string, CostSummary> summarize_by_algorithm(std::span<const RunRecord> records);

/// Min / median / max cost and median queries per algorithm; medians are the
/// lower-middle element for even counts.
std::string format_summary(const std::map<std::string, CostSummary>& rows);

}  // namespace treenet
