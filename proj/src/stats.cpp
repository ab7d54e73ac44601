// Copyright 2026 The treenet Authors
// SPDX-License-Identifier: Apache-2.0

#include "treenet/stats.hpp"

#include <cmath>

namespace treenet {

CostSummary summarize(std::span<const Cost> costs, std::span<const std::uint64_t> queries) {
  if (costs.empty()) throw Error("summary of zero runs");
  if (costs.size() != queries.size()) throw Error("cost and query counts differ");
  CostSummary s;
  s.runs = costs.size();
  s.min = *std::min_element(costs.begin(), costs.end());
  s.max = *std::max_element(costs.begin(), costs.end());
  s.median = lower_median(std::vector<Cost>(costs.begin(), costs.end()));
  s.median_queries = lower_median(std::vector<std::uint64_t>(queries.begin(), queries.end()));
  return s;
}

namespace detail {
namespace {

// Number of arrangements of na and nb items with U = u, for every u.
std::vector<unsigned __int128> u_distribution(std::size_t na, std::size_t nb) {
  const std::size_t top = na * nb;
  // layer[i][u] holds counts for i items of the first kind and j of the second
  std::vector<std::vector<unsigned __int128>> layer(na + 1,
                                                    std::vector<unsigned __int128>(top + 1, 0));
  for (std::size_t i = 0; i <= na; ++i) layer[i][0] = 1;  // j = 0
  for (std::size_t j = 1; j <= nb; ++j) {
    // f(i, j, u) = f(i - 1, j, u - j) + f(i, j - 1, u)
    for (std::size_t i = 1; i <= na; ++i)
      for (std::size_t u = j; u <= top; ++u) layer[i][u] += layer[i - 1][u - j];
  }
  return std::move(layer[na]);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

RankSumResult rank_sum_p_value(std::int64_t twice_u, std::size_t na, std::size_t nb,
                               double tie_term, Alternative alternative, PValueMethod method) {
  if (na == 0 || nb == 0) throw Error("rank sum test needs two non-empty samples");
  RankSumResult r;
  r.statistic = static_cast<double>(twice_u) / 2.0;
  const bool ties = tie_term > 0.0;
  bool exact = false;
  switch (method) {
    case PValueMethod::kAuto: exact = !ties && na < 50 && nb < 50; break;
    case PValueMethod::kExact:
      if (ties) throw Error("exact p-value needs tie-free samples");
      exact = true;
      break;
    case PValueMethod::kNormal: exact = false; break;
  }
  const double half = static_cast<double>(na) * static_cast<double>(nb) / 2.0;

  if (exact) {
    const auto dist = u_distribution(na, nb);
    const auto u = static_cast<std::size_t>(twice_u / 2);
    unsigned __int128 total = 0, le = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      total += dist[k];
      if (k <= u) le += dist[k];
    }
    const unsigned __int128 ge = total - le + dist[u];
    const auto ratio = [&](unsigned __int128 x) {
      return static_cast<double>(static_cast<long double>(x) / static_cast<long double>(total));
    };
    switch (alternative) {
      case Alternative::kLess: r.p_value = ratio(le); break;
      case Alternative::kGreater: r.p_value = ratio(ge); break;
      case Alternative::kTwoSided:
        r.p_value = std::min(1.0, 2.0 * (r.statistic > half ? ratio(ge) : ratio(le)));
        break;
    }
    r.exact = true;
    return r;
  }

  const double a = static_cast<double>(na), b = static_cast<double>(nb);
  const double sigma =
      std::sqrt(a * b / 12.0 * ((a + b + 1.0) - tie_term / ((a + b) * (a + b - 1.0))));
  if (!(sigma > 0.0)) {
    r.p_value = 1.0;
    return r;
  }
  const double diff = r.statistic - half;
  double correction = 0.0;
  switch (alternative) {
    case Alternative::kTwoSided: correction = diff > 0 ? 0.5 : (diff < 0 ? -0.5 : 0.0); break;
    case Alternative::kGreater: correction = 0.5; break;
    case Alternative::kLess: correction = -0.5; break;
  }
  const double z = (diff - correction) / sigma;
  switch (alternative) {
    case Alternative::kTwoSided:
      r.p_value = std::min(1.0, 2.0 * std::min(normal_cdf(z), normal_cdf(-z)));
      break;
    case Alternative::kGreater: r.p_value = normal_cdf(-z); break;
    case Alternative::kLess: r.p_value = normal_cdf(z); break;
  }
  return r;
}

}  // namespace detail
}  // namespace treenet
