// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPPC_GREEDY_COVER_HPP_
#define DPPC_GREEDY_COVER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dppc/budget.hpp"
#include "dppc/mechanisms.hpp"
#include "dppc/noise.hpp"
#include "dppc/set_system.hpp"

namespace dppc {

// Derived parameters of the private greedy partial-cover solver at budget
// (eps, delta) on a system with m sets over n elements.
//
// The permutation stage selects with per-pick weight eps' = eps/(2 ln(e/d)),
// and the threshold stage scans prefix coverage against
// T = rho*n + 12 ln(m)/eps with noise scales 2/eps and 4/eps. All logs are
// natural; the slack term uses the stage budget eps, not eps'.
struct GreedyParams {
  PrivacyBudget budget;
  double epsilon_prime = 0.0;
  double threshold = 0.0;        // T
  double threshold_slack = 0.0;  // 12 ln(m)/eps
  std::vector<std::string> warnings;

  static GreedyParams for_system(std::size_t universe_size,
                                 std::size_t set_count, double rho,
                                 PrivacyBudget budget) {
    validate_budget(budget);
    if (!(budget.delta > 0.0))
      throw ValidationError(
          "greedy cover requires delta > 0 (epsilon' would degenerate)");
    if (!(rho > 0.0 && rho < 1.0))
      throw ValidationError("rho must lie in (0, 1)");
    GreedyParams p;
    p.budget = budget;
    p.epsilon_prime = budget.epsilon / (2.0 * std::log(std::exp(1.0) / budget.delta));
    p.threshold_slack =
        12.0 * std::log(static_cast<double>(set_count)) / budget.epsilon;
    p.threshold = rho * static_cast<double>(universe_size) + p.threshold_slack;
    if (budget.epsilon >= 1.0)
      p.warnings.push_back(
          "epsilon >= 1: outside the range of the stated utility guarantee");
    if (budget.delta >= 1.0 / std::exp(1.0))
      p.warnings.push_back("delta >= 1/e: epsilon' derivation is degenerate");
    const double window_top =
        rho * static_cast<double>(universe_size) + 2.0 * p.threshold_slack;
    if (window_top > static_cast<double>(universe_size))
      p.warnings.push_back(
          "coverage window [rho n, rho n + 24 ln(m)/eps] exceeds n; the "
          "threshold stage may never fire at this scale");
    return p;
  }
};

// Private greedy order over all m sets: at each step a set is drawn with
// probability proportional to exp(eps' * |S \ covered|), then removed along
// with the elements it covers. Zero-noise sources reduce this to classical
// greedy with smallest-id tie-breaking.
//
// `max_gain_trace`, when given, receives the best available marginal gain at
// each iteration (a diagnostic: it shows where the selection signal fades
// into the noise floor).
inline std::vector<SetId> private_greedy_permutation(
    const SetSystem& system, double epsilon_prime, NoiseSource& noise,
    std::vector<std::int64_t>* max_gain_trace = nullptr) {
  if (!(epsilon_prime > 0.0))
    throw ValidationError("epsilon' must be positive");
  const std::size_t m = system.set_count();
  std::vector<SetId> remaining(m);
  for (std::size_t i = 0; i < m; ++i) remaining[i] = static_cast<SetId>(i);
  std::vector<SetId> permutation;
  permutation.reserve(m);
  Bitset covered(system.universe_size());
  std::vector<double> gains;
  while (!remaining.empty()) {
    gains.resize(remaining.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
      gains[i] = static_cast<double>(
          Bitset::count_and_not(system.set_mask(remaining[i]), covered));
    if (max_gain_trace != nullptr)
      max_gain_trace->push_back(static_cast<std::int64_t>(
          *std::max_element(gains.begin(), gains.end())));
    const std::size_t pick = exponential_choice(gains, epsilon_prime, noise);
    const SetId chosen = remaining[pick];
    permutation.push_back(chosen);
    covered |= system.set_mask(chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return permutation;
}

struct GreedyCoverResult {
  PartialCoverSolution solution;
  std::int64_t coverage = 0;  // elements covered by the first k sets
  std::int64_t target = 0;    // ceil(rho * n)
  double threshold = 0.0;     // T handed to the threshold stage
  bool exhausted = false;     // threshold never fired; k = m
  std::vector<std::int64_t> prefix_coverage;  // f_1..f_m
  std::vector<std::int64_t> max_gain_trace;   // best gain seen per iteration
  std::vector<std::string> warnings;
  PrivacyLedger ledger;
};

// Private partial set cover: the greedy permutation above followed by an
// offline AboveThreshold scan of its prefix coverage. Spends (2 eps, delta):
// (eps, delta) for the permutation and (eps, 0) for the threshold.
//
// The permutation always runs to full length; the threshold stage consumes
// the whole prefix-coverage sequence. If the noisy threshold never fires the
// result takes all m sets and is flagged `exhausted`. Uncoverable instances
// and unsatisfiable coverage windows are reported as warnings, not errors:
// the mechanism is well defined (and private) regardless, only the utility
// statement needs those preconditions.
inline GreedyCoverResult partial_set_cover_greedy(const SetSystem& system,
                                                  double rho,
                                                  PrivacyBudget budget,
                                                  NoiseSource& noise) {
  if (system.set_count() == 0)
    throw ValidationError("partial_set_cover_greedy: no sets");
  GreedyParams params = GreedyParams::for_system(
      system.universe_size(), system.set_count(), rho, budget);

  GreedyCoverResult result;
  result.warnings = params.warnings;
  result.target = coverage_target(system.universe_size(), rho);
  result.threshold = params.threshold;
  if (!system.covers_universe())
    result.warnings.push_back(
        "the union of all sets does not cover the universe");

  result.solution.permutation = private_greedy_permutation(
      system, params.epsilon_prime, noise, &result.max_gain_trace);

  Bitset covered(system.universe_size());
  result.prefix_coverage.reserve(system.set_count());
  std::vector<double> prefix_as_double;
  prefix_as_double.reserve(system.set_count());
  for (SetId id : result.solution.permutation) {
    covered |= system.set_mask(id);
    result.prefix_coverage.push_back(static_cast<std::int64_t>(covered.count()));
    prefix_as_double.push_back(static_cast<double>(result.prefix_coverage.back()));
  }

  const auto crossing = above_threshold_offline(
      prefix_as_double, params.threshold, budget.epsilon, noise);
  if (crossing.has_value()) {
    result.solution.k = *crossing + 1;
  } else {
    result.solution.k = system.set_count();
    result.exhausted = true;
  }
  result.coverage = result.prefix_coverage[result.solution.k - 1];

  result.ledger.charge("greedy permutation", {budget.epsilon, budget.delta});
  result.ledger.charge("threshold selection", {budget.epsilon, 0.0});
  return result;
}

}  // namespace dppc

#endif  // DPPC_GREEDY_COVER_HPP_
