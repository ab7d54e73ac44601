// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "treenet/types.hpp"

namespace treenet {

/// Lower-middle element for even counts. Throws Error on an empty input.
template <class T>
T lower_median(std::vector<T> values) {
  if (values.empty()) throw Error("median of an empty sample");
  auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

struct CostSummary {
  Cost min = 0;
  Cost median = 0;
  Cost max = 0;
  std::uint64_t median_queries = 0;
  std::size_t runs = 0;
};

CostSummary summarize(std::span<const Cost> costs, std::span<const std::uint64_t> queries);

enum class Alternative : std::uint8_t { kTwoSided, kLess, kGreater };
enum class PValueMethod : std::uint8_t { kAuto, kExact, kNormal };

struct RankSumResult {
  /// Mann-Whitney U of the first sample: its rank sum minus n_a(n_a+1)/2.
  double statistic = 0.0;
  double p_value = 1.0;
  bool exact = false;
};

namespace detail {

/// `twice_u` is 2U (integral even with midranks), `tie_term` is sum(t^3 - t)
/// over tie groups.
RankSumResult rank_sum_p_value(std::int64_t twice_u, std::size_t na, std::size_t nb,
                               double tie_term, Alternative alternative, PValueMethod method);

}  // namespace detail

/// Wilcoxon rank sum test. kAuto uses the exact null distribution when there
/// are no ties and both samples have fewer than 50 elements, otherwise the
/// normal approximation with tie and continuity corrections. kLess tests
/// whether `a` tends to be smaller than `b`.
template <class T>
RankSumResult wilcoxon_rank_sum(std::span<const T> a, std::span<const T> b,
                                Alternative alternative = Alternative::kTwoSided,
                                PValueMethod method = PValueMethod::kAuto) {
  if (a.empty() || b.empty()) throw Error("rank sum test needs two non-empty samples");
  std::vector<std::pair<T, bool>> pooled;
  pooled.reserve(a.size() + b.size());
  for (const T& x : a) pooled.emplace_back(x, true);
  for (const T& x : b) pooled.emplace_back(x, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  // ranks are doubled so midranks stay integral
  std::int64_t twice_rank_sum = 0;
  double tie_term = 0.0;
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i + 1;
    while (j < pooled.size() && !(pooled[i].first < pooled[j].first)) ++j;
    const auto twice_mid = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k)
      if (pooled[k].second) twice_rank_sum += twice_mid;
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const auto na = static_cast<std::int64_t>(a.size());
  return detail::rank_sum_p_value(twice_rank_sum - na * (na + 1), a.size(), b.size(), tie_term,
                                  alternative, method);
}

}  // namespace treenet
