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

#ifndef DPPC_MAXCOV_COVER_HPP_
#define DPPC_MAXCOV_COVER_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dppc/budget.hpp"
#include "dppc/mechanisms.hpp"
#include "dppc/noise.hpp"
#include "dppc/set_system.hpp"

namespace dppc {

// Constants of the max-coverage route. The amplified variant boosts the
// in-expectation guarantee to a with-high-probability 0.15-approximation by
// repetition plus an exponential-mechanism runoff.
struct MaxCovParams {
  static constexpr double kAlpha = 0.5;

  // C = (1 - 1/e - alpha) * ln(1 + alpha) / 2.
  static double amplification_constant() {
    return (1.0 - 1.0 / std::exp(1.0) - kAlpha) * std::log1p(kAlpha) / 2.0;
  }

  // Per-pick selection weight of the in-expectation variant is eps0 / k.
  static double expected_epsilon0(PrivacyBudget budget) {
    validate_budget(budget);
    if (!(budget.delta > 0.0))
      throw ValidationError("max cover requires delta > 0");
    return budget.epsilon / (2.0 * std::log(std::exp(1.0) / budget.delta));
  }

  // Number of amplification repeats, T = ceil(ln n / ln(1 + alpha)).
  static std::size_t repeat_count(std::size_t universe_size) {
    const double n = static_cast<double>(std::max<std::size_t>(universe_size, 2));
    return static_cast<std::size_t>(std::ceil(std::log(n) / std::log1p(kAlpha)));
  }

  // Budget of each repeat: the full budget scaled by ln(1 + alpha) / ln n.
  static PrivacyBudget per_repeat_budget(PrivacyBudget budget,
                                         std::size_t universe_size) {
    const double n = static_cast<double>(std::max<std::size_t>(universe_size, 2));
    const double f = std::log1p(kAlpha) / std::log(n);
    return {budget.epsilon * f, budget.delta * f};
  }
};

namespace detail {

// Greedy max cover restricted to the elements of `alive` and the sets in
// `candidates`. k is clamped to the candidate count.
inline std::vector<SetId> dp_max_cover_masked(const SetSystem& system,
                                              const Bitset& alive,
                                              const std::vector<SetId>& candidates,
                                              std::size_t k, PrivacyBudget budget,
                                              NoiseSource& noise) {
  const double eps0 = MaxCovParams::expected_epsilon0(budget);
  std::vector<SetId> pool = candidates;
  std::vector<SetId> chosen;
  k = std::min(k, pool.size());
  if (k == 0) return chosen;
  const double weight = eps0 / static_cast<double>(k);
  Bitset covered(system.universe_size());
  std::vector<double> gains;
  for (std::size_t pick = 0; pick < k; ++pick) {
    gains.resize(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
      gains[i] = static_cast<double>(Bitset::count_and_and_not(
          system.set_mask(pool[i]), alive, covered));
    const std::size_t idx = exponential_choice(gains, weight, noise);
    chosen.push_back(pool[idx]);
    covered |= system.set_mask(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return chosen;
}

inline std::int64_t covered_in(const SetSystem& system, const Bitset& alive,
                               const std::vector<SetId>& family) {
  Bitset covered(system.universe_size());
  for (SetId id : family) covered |= system.set_mask(id);
  covered &= alive;
  return static_cast<std::int64_t>(covered.count());
}

// Amplified max cover on a sub-instance. Runs the in-expectation variant T
// times at the per-repeat budget, then picks among the T families with the
// exponential mechanism on coverage (sensitivity 1, weight eps/2).
inline std::vector<SetId> dp_max_cover_amplified_masked(
    const SetSystem& system, const Bitset& alive,
    const std::vector<SetId>& candidates, std::size_t k, PrivacyBudget budget,
    NoiseSource& noise) {
  const std::size_t n_alive = alive.count();
  const std::size_t repeats = MaxCovParams::repeat_count(n_alive);
  const PrivacyBudget per_repeat =
      MaxCovParams::per_repeat_budget(budget, n_alive);
  std::vector<std::vector<SetId>> families;
  std::vector<double> coverages;
  families.reserve(repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    families.push_back(
        dp_max_cover_masked(system, alive, candidates, k, per_repeat, noise));
    coverages.push_back(
        static_cast<double>(covered_in(system, alive, families.back())));
  }
  const std::size_t winner =
      exponential_choice(coverages, budget.epsilon / 2.0, noise);
  return families[winner];
}

}  // namespace detail

// In-expectation private max cover: k adaptive greedy picks, each by the
// exponential mechanism on marginal gains with weight eps0/k.
inline std::vector<SetId> dp_max_cover_expected(const SetSystem& system,
                                                std::size_t k,
                                                PrivacyBudget budget,
                                                NoiseSource& noise) {
  if (k > system.set_count())
    throw ValidationError("dp_max_cover_expected: k exceeds the set count");
  Bitset alive(system.universe_size());
  for (std::size_t i = 0; i < system.universe_size(); ++i) alive.set(i);
  std::vector<SetId> all(system.set_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<SetId>(i);
  return detail::dp_max_cover_masked(system, alive, all, k, budget, noise);
}

// High-probability variant; spends (2 eps, delta): (eps, delta) across the
// repeats and (eps, 0) on the runoff. Zero-noise sources make every repeat
// identical, so the result equals a single greedy run.
inline std::vector<SetId> dp_max_cover_amplified(const SetSystem& system,
                                                 std::size_t k,
                                                 PrivacyBudget budget,
                                                 NoiseSource& noise,
                                                 PrivacyLedger* ledger = nullptr) {
  if (k > system.set_count())
    throw ValidationError("dp_max_cover_amplified: k exceeds the set count");
  Bitset alive(system.universe_size());
  for (std::size_t i = 0; i < system.universe_size(); ++i) alive.set(i);
  std::vector<SetId> all(system.set_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<SetId>(i);
  std::vector<SetId> family =
      detail::dp_max_cover_amplified_masked(system, alive, all, k, budget, noise);
  if (ledger != nullptr) {
    ledger->charge("max-cover repeats", {budget.epsilon, budget.delta});
    ledger->charge("max-cover selection", {budget.epsilon, 0.0});
  }
  return family;
}

// Search parameters of the binary-search partial-cover route at budget
// (eps, delta) on n elements: the amplified solver runs `stitch_rounds` (t)
// times per guess, each guess is checked with a biased noisy count, and the
// guess space is {1, ..., upper}.
struct MaxCovSearchPlan {
  double rho_prime = 0.0;            // (rho + 1) / 2
  std::size_t stitch_rounds = 0;     // t = ceil(log_0.85(1 - rho'))
  std::size_t upper = 0;             // floor(C (1 - rho/2) n eps0 / ln^3 n)
  double epsilon_prime = 0.0;        // eps / (t log2 n)
  double delta_prime = 0.0;
  double acceptance_bias = 0.0;      // ln(n) / eps'
};

inline MaxCovSearchPlan plan_partial_cover_search(std::size_t universe_size,
                                                  double rho,
                                                  PrivacyBudget budget) {
  if (universe_size < 2)
    throw ValidationError("partial cover via max cover needs n >= 2");
  if (!(rho > 0.0 && rho < 1.0))
    throw ValidationError("rho must lie in (0, 1)");
  validate_budget(budget);
  const double n = static_cast<double>(universe_size);
  MaxCovSearchPlan plan;
  plan.rho_prime = (rho + 1.0) / 2.0;
  plan.stitch_rounds = static_cast<std::size_t>(
      std::ceil(std::log(1.0 - plan.rho_prime) / std::log(0.85)));
  const double eps0 = MaxCovParams::expected_epsilon0(budget);
  const double raw = MaxCovParams::amplification_constant() * (1.0 - rho / 2.0) *
                     n * eps0 / std::pow(std::log(n), 3.0);
  plan.upper = raw < 1.0 ? 0 : static_cast<std::size_t>(std::floor(raw));
  const double split =
      static_cast<double>(plan.stitch_rounds) * std::log2(n);
  plan.epsilon_prime = budget.epsilon / split;
  plan.delta_prime = budget.delta / split;
  plan.acceptance_bias = std::log(n) / plan.epsilon_prime;
  return plan;
}

struct MaxCovGuess {
  std::size_t opt_guess = 0;
  std::size_t solution_size = 0;
  std::int64_t coverage = 0;
  double gamma_hat = 0.0;
  bool accepted = false;
};

struct MaxCovGuessOutcome {
  MaxCovGuess guess;
  std::vector<SetId> solution;
};

// One binary-search iteration at a fixed guess: stitches t amplified
// max-cover families on the shrinking residual, then applies the biased
// noisy acceptance check.
inline MaxCovGuessOutcome evaluate_partial_cover_guess(
    const SetSystem& system, double rho, const MaxCovSearchPlan& plan,
    std::size_t guess, NoiseSource& noise) {
  const PrivacyBudget per_call{plan.epsilon_prime, plan.delta_prime};
  Bitset alive(system.universe_size());
  for (std::size_t i = 0; i < system.universe_size(); ++i) alive.set(i);
  std::vector<SetId> candidates(system.set_count());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    candidates[i] = static_cast<SetId>(i);

  MaxCovGuessOutcome outcome;
  for (std::size_t round = 0; round < plan.stitch_rounds; ++round) {
    if (candidates.empty()) break;
    const std::vector<SetId> family = detail::dp_max_cover_amplified_masked(
        system, alive, candidates, guess, per_call, noise);
    for (SetId id : family) {
      outcome.solution.push_back(id);
      std::erase(candidates, id);
      for (ElementId e : system.set_elements(id))
        if (alive.test(e)) alive.reset(e);
    }
  }
  MaxCovGuess& g = outcome.guess;
  g.opt_guess = guess;
  g.solution_size = outcome.solution.size();
  g.coverage =
      static_cast<std::int64_t>(system.universe_size() - alive.count());
  g.gamma_hat = static_cast<double>(g.coverage) + plan.acceptance_bias +
                laplace(1.0 / plan.epsilon_prime, noise);
  g.accepted = g.gamma_hat >= rho * static_cast<double>(system.universe_size());
  return outcome;
}

struct MaxCovCoverResult {
  std::vector<SetId> solution;
  bool accepted = false;     // some guess passed the coverage check
  std::size_t opt_guess = 0;  // smallest accepted guess
  std::int64_t coverage = 0;
  MaxCovSearchPlan plan;
  std::vector<MaxCovGuess> trace;
  std::vector<std::string> warnings;
  PrivacyLedger ledger;
};

struct MaxCovOptions {
  // Replaces the theoretical upper bound on the guess space. The closed-form
  // bound is calibrated for populations far beyond desk scale and collapses
  // to zero on small instances; benchmarks on such instances must supply an
  // explicit cap (at most m) to run the search at all.
  std::optional<std::size_t> max_opt_guess;
};

// Partial set cover by binary search on the optimum: each guess OPT' stitches
// t amplified max-cover families of size OPT' on the shrinking residual
// instance, then accepts iff the biased noisy coverage gamma_hat clears
// rho * n. Returns the solution of the smallest accepted guess.
//
// Spend is (2 eps, delta): (eps, delta) across all max-cover calls and
// (eps, 0) across the acceptance checks, with the search charged its
// worst-case log2(n) iterations.
inline MaxCovCoverResult partial_cover_via_maxcov(const SetSystem& system,
                                                  double rho,
                                                  PrivacyBudget budget,
                                                  NoiseSource& noise,
                                                  const MaxCovOptions& options = {}) {
  if (system.set_count() == 0)
    throw ValidationError("partial_cover_via_maxcov: no sets");
  MaxCovCoverResult result;
  result.plan = plan_partial_cover_search(system.universe_size(), rho, budget);
  if (!system.covers_universe())
    result.warnings.push_back(
        "the union of all sets does not cover the universe");

  std::size_t upper = result.plan.upper;
  if (options.max_opt_guess.has_value()) {
    upper = std::min(*options.max_opt_guess, system.set_count());
    result.warnings.push_back(
        "guess-space bound overridden; the pseudo-approximation guarantee "
        "assumes the optimum fits the theoretical regime");
  }
  if (upper < 1)
    throw RegimeError(
        "instance is below the max-cover parameter regime (guess bound < 1); "
        "use the greedy solver instead");
  upper = std::min(upper, system.set_count());

  std::size_t lo = 1, hi = upper;
  std::optional<std::vector<SetId>> best;
  std::vector<SetId> fallback;
  std::int64_t fallback_coverage = -1;
  while (lo <= hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    MaxCovGuessOutcome outcome =
        evaluate_partial_cover_guess(system, rho, result.plan, mid, noise);
    result.trace.push_back(outcome.guess);
    if (outcome.guess.accepted) {
      best = std::move(outcome.solution);
      result.opt_guess = outcome.guess.opt_guess;
      result.coverage = outcome.guess.coverage;
      if (mid == 1) break;
      hi = mid - 1;
    } else {
      if (outcome.guess.coverage > fallback_coverage) {
        fallback = std::move(outcome.solution);
        fallback_coverage = outcome.guess.coverage;
      }
      lo = mid + 1;
    }
  }

  if (best.has_value()) {
    result.accepted = true;
    result.solution = std::move(*best);
  } else {
    result.solution = std::move(fallback);
    result.coverage = fallback_coverage;
  }
  result.ledger.charge("max-cover calls", {budget.epsilon, budget.delta});
  result.ledger.charge("coverage checks", {budget.epsilon, 0.0});
  return result;
}

}  // namespace dppc

#endif  // DPPC_MAXCOV_COVER_HPP_
