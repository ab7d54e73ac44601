// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "treenet/tree.hpp"

namespace treenet {

struct Solution {
  Tree tree;
  Cost cost = 0;
};

/// Pull-based producer of solutions. An empty result means the stream is
/// exhausted; once exhausted it stays exhausted.
class SolutionStream {
 public:
  virtual ~SolutionStream() = default;
  virtual std::optional<Solution> pull() = 0;
};

}  // namespace treenet
