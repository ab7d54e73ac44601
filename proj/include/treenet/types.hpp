// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treenet {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;

/// Demand-weighted sum of tree distances. 128 bits so that n^2 * max_weight * n
/// cannot wrap for any realistic instance.
using Cost = unsigned __int128;
using CostDelta = __int128;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Cost value);
Cost parse_cost(std::string_view text);

}  // namespace treenet
