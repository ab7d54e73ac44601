// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "treenet/demand.hpp"
#include "treenet/mutations.hpp"
#include "treenet/stream.hpp"

namespace treenet {

/// Either a wall-clock limit (checked between queries) or a limit on the
/// number of evaluated candidate solutions, which makes runs reproducible.
struct Budget {
  enum class Kind : std::uint8_t { kSeconds, kQueries };

  Kind kind = Kind::kQueries;
  double seconds = 0.0;
  std::uint64_t queries = 0;

  static Budget wall_seconds(double s) { return {Kind::kSeconds, s, 0}; }
  static Budget query_count(std::uint64_t q) { return {Kind::kQueries, 0.0, q}; }
};

/// (1+1) local search with restarts. Each pull runs until the global best
/// strictly improves and yields it; the stream ends at the budget or when
/// both the mutation and the initializer are exhausted.
///
/// The parent is replaced only by a strictly cheaper offspring. When the
/// mutation reports exhaustion, a fresh parent is pulled from the
/// initializer. The mutation is notified of every parent change.
class LocalSearch final : public SolutionStream {
 public:
  /// `initializer` and `mutation` must outlive the search. The budget clock
  /// starts here.
  LocalSearch(SolutionStream& initializer, MutationOperator& mutation, Budget budget,
              std::uint64_t seed);

  std::optional<Solution> pull() override;

  std::uint64_t queries() const { return queries_; }
  const std::optional<Solution>& best() const { return best_; }
  const std::optional<Solution>& parent() const { return parent_; }
  std::uint64_t restarts() const { return restarts_; }
  /// True when the search space ran out (as opposed to the budget).
  bool exhausted() const { return exhausted_; }

 private:
  bool budget_left() const;

  SolutionStream* initializer_;
  MutationOperator* mutation_;
  Budget budget_;
  std::chrono::steady_clock::time_point deadline_;
  Rng rng_;
  std::optional<Solution> parent_;
  std::optional<Solution> best_;
  std::uint64_t queries_ = 0;
  std::uint64_t restarts_ = 0;
  bool exhausted_ = false;
  bool finished_ = false;
};

/// "<init>[+<mutation>]" with init in {mst, bst-rand, bst-next} ("bst" is an
/// alias of bst-rand) and mutation in {switch, subtree, replaceR, replaceO,
/// random}.
struct AlgorithmSpec {
  std::string initializer;
  std::string mutation;

  static AlgorithmSpec parse(std::string_view text);
  std::string name() const { return mutation.empty() ? initializer : initializer + "+" + mutation; }
};

struct RunResult {
  std::string algorithm;
  Solution best;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
  bool exhausted = false;
};

/// Wires the named initializer and mutation into LocalSearch and runs it to
/// the end of the budget. Throws Error on an unknown algorithm name, or if the budget
/// ends before the first solution.
RunResult run_algorithm(std::string_view spec, const DemandGraph& demand, Budget budget,
                        std::uint64_t seed);

}  // namespace treenet
