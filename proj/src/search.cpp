// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/search.hpp"

#include <array>
#include <memory>
#include <random>

#include "treenet/initializers.hpp"

namespace treenet {

LocalSearch::LocalSearch(SolutionStream& initializer, MutationOperator& mutation, Budget budget,
                         std::uint64_t seed)
    : initializer_(&initializer), mutation_(&mutation), budget_(budget), rng_(seed) {
  const auto now = std::chrono::steady_clock::now();
  deadline_ = budget.kind == Budget::Kind::kSeconds
                  ? now + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget.seconds))
                  : now;
}

bool LocalSearch::budget_left() const {
  if (budget_.kind == Budget::Kind::kQueries) return queries_ < budget_.queries;
  return budget_.seconds > 0 && std::chrono::steady_clock::now() < deadline_;
}

std::optional<Solution> LocalSearch::pull() {
  while (!finished_) {
    if (!budget_left()) {
      finished_ = true;
      break;
    }
    if (!parent_) {
      auto start = initializer_->pull();
      if (!start) {
        exhausted_ = finished_ = true;
        break;
      }
      ++queries_;
      if (best_) ++restarts_;
      parent_ = std::move(start);
      mutation_->parent_changed();
      if (!best_ || parent_->cost < best_->cost) {
        best_ = parent_;
        return best_;
      }
      continue;
    }

    auto offspring = mutation_->propose(*parent_, rng_);
    if (!offspring) {
      parent_.reset();  // restart from a fresh initial solution
      continue;
    }
    ++queries_;
    if (offspring->cost < parent_->cost) {
      parent_ = std::move(*offspring).solution();
      mutation_->parent_changed();
      if (parent_->cost < best_->cost) {
        best_ = parent_;
        return best_;
      }
    }
  }
  return std::nullopt;
}

AlgorithmSpec AlgorithmSpec::parse(std::string_view text) {
  AlgorithmSpec spec;
  const auto plus = text.find('+');
  spec.initializer = std::string(text.substr(0, plus));
  if (plus != std::string_view::npos) {
    spec.mutation = std::string(text.substr(plus + 1));
    if (spec.mutation.empty()) throw Error("empty mutation in '" + std::string(text) + "'");
  }
  if (spec.initializer == "bst") spec.initializer = "bst-rand";
  if (spec.initializer != "mst" && spec.initializer != "bst-rand" && spec.initializer != "bst-next")
    throw Error("unknown initializer '" + spec.initializer + "'");
  if (!spec.mutation.empty() && spec.mutation != "switch" && spec.mutation != "subtree" &&
      spec.mutation != "replaceR" && spec.mutation != "replaceO" && spec.mutation != "random")
    throw Error("unknown mutation '" + spec.mutation + "'");
  return spec;
}

RunResult run_algorithm(std::string_view spec_text, const DemandGraph& demand, Budget budget,
                        std::uint64_t seed) {
  const AlgorithmSpec spec = AlgorithmSpec::parse(spec_text);
  const auto start = std::chrono::steady_clock::now();

  // independent streams for the initializer and the mutation
  std::seed_seq seq{seed, std::uint64_t{0x7265656e74}};
  std::array<std::uint64_t, 2> seeds{};
  seq.generate(seeds.begin(), seeds.end());

  std::unique_ptr<SolutionStream> init;
  if (spec.initializer == "mst")
    init = std::make_unique<MstInitializer>(demand, seeds[0]);
  else if (spec.initializer == "bst-rand")
    init = std::make_unique<BstRandStream>(demand, seeds[0]);
  else
    init = std::make_unique<BstNextStream>(demand);
  auto mutation = make_mutation(spec.mutation, demand);

  LocalSearch search(*init, *mutation, budget, seeds[1]);
  while (search.pull()) {
  }
  if (!search.best()) throw Error("budget ended before the first solution");

  RunResult result;
  result.algorithm = spec.name();
  result.best = *search.best();
  result.queries = search.queries();
  result.exhausted = search.exhausted();
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace treenet
