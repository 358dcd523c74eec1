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

#ifndef DPPC_ORACLES_HPP_
#define DPPC_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dppc/errors.hpp"
#include "dppc/facility.hpp"
#include "dppc/set_system.hpp"
#include "dppc/vacc_instance.hpp"

namespace dppc {

// Classical greedy order over all sets: max marginal gain, smallest id on
// ties. The zero-noise private permutation must match this exactly.
inline std::vector<SetId> greedy_permutation(const SetSystem& system) {
  const std::size_t m = system.set_count();
  std::vector<bool> used(m, false);
  std::vector<SetId> order;
  order.reserve(m);
  Bitset covered(system.universe_size());
  for (std::size_t step = 0; step < m; ++step) {
    std::int64_t best_gain = -1;
    SetId best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      const std::int64_t gain = static_cast<std::int64_t>(
          Bitset::count_and_not(system.set_mask(static_cast<SetId>(i)), covered));
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<SetId>(i);
      }
    }
    used[best] = true;
    order.push_back(best);
    covered |= system.set_mask(best);
  }
  return order;
}

// Non-private baseline: greedy until ceil(rho * n) elements are covered.
inline std::vector<SetId> greedy_partial_cover(const SetSystem& system,
                                               double rho) {
  const std::int64_t target = coverage_target(system.universe_size(), rho);
  const std::vector<SetId> order = greedy_permutation(system);
  std::vector<SetId> chosen;
  Bitset covered(system.universe_size());
  for (SetId id : order) {
    chosen.push_back(id);
    covered |= system.set_mask(id);
    if (static_cast<std::int64_t>(covered.count()) >= target) return chosen;
  }
  throw ValidationError("greedy_partial_cover: target " +
                        std::to_string(target) +
                        " is not coverable by the set system");
}

struct CoverOracleResult {
  std::size_t opt_size = 0;
  std::vector<SetId> witness;  // lexicographically smallest optimum
  std::uint64_t nodes_explored = 0;
};

namespace detail {

struct CoverSearch {
  const SetSystem* system;
  std::int64_t target;
  std::vector<std::int64_t> suffix_best;  // max set size over ids >= i
  std::vector<SetId> stack;
  std::uint64_t nodes = 0;
  std::optional<std::vector<SetId>> found;

  bool dfs(std::size_t next_id, const Bitset& covered, std::size_t slots_left) {
    ++nodes;
    const std::int64_t have = static_cast<std::int64_t>(covered.count());
    if (have >= target) {
      found = stack;
      return true;
    }
    if (slots_left == 0 || next_id >= system->set_count()) return false;
    // Even taking the largest remaining sets cannot reach the target.
    if (have + static_cast<std::int64_t>(slots_left) * suffix_best[next_id] <
        target)
      return false;
    for (std::size_t id = next_id; id < system->set_count(); ++id) {
      Bitset with = covered;
      with |= system->set_mask(static_cast<SetId>(id));
      stack.push_back(static_cast<SetId>(id));
      if (dfs(id + 1, with, slots_left - 1)) return true;
      stack.pop_back();
    }
    return false;
  }
};

}  // namespace detail

// Exact partial-cover optimum by iterative deepening over the family size
// with a coverage bound; sets are tried in id order, so the first hit at the
// optimal cardinality is the lexicographically smallest witness.
inline CoverOracleResult exact_partial_cover(const SetSystem& system,
                                             double rho) {
  if (system.set_count() > 24)
    throw ValidationError("exact_partial_cover: m > 24 is intractable");
  const std::int64_t target = coverage_target(system.universe_size(), rho);
  if (static_cast<std::int64_t>(system.union_of_all().count()) < target)
    throw ValidationError("exact_partial_cover: target is not coverable");

  detail::CoverSearch search;
  search.system = &system;
  search.target = target;
  search.suffix_best.assign(system.set_count() + 1, 0);
  for (std::size_t i = system.set_count(); i-- > 0;)
    search.suffix_best[i] =
        std::max(search.suffix_best[i + 1],
                 static_cast<std::int64_t>(
                     system.set_mask(static_cast<SetId>(i)).count()));

  CoverOracleResult result;
  for (std::size_t size = 0; size <= system.set_count(); ++size) {
    Bitset empty(system.universe_size());
    search.stack.clear();
    if (search.dfs(0, empty, size)) {
      result.opt_size = size;
      result.witness = *search.found;
      result.nodes_explored = search.nodes;
      return result;
    }
  }
  throw ValidationError("exact_partial_cover: unreachable");
}

struct ClientOracleResult {
  double opt_radius = 0.0;
  std::vector<LocationId> witness;
  std::uint64_t nodes_explored = 0;
};

// Exact facility optimum: minimizes the percentile objective over every
// k-subset of locations. Enumeration is in lexicographic order and ties keep
// the first witness.
inline ClientOracleResult exact_client_cover(const VaccInstance& instance,
                                             std::size_t k, double rho) {
  const std::size_t locations = instance.location_count();
  if (k == 0 || k > locations)
    throw ValidationError("exact_client_cover: k out of range");
  double combinations = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    combinations *= static_cast<double>(locations - i) / static_cast<double>(i + 1);
  if (combinations > 1e6)
    throw ValidationError("exact_client_cover: C(locations, k) exceeds 1e6");

  std::vector<LocationId> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<LocationId>(i);
  ClientOracleResult result;
  result.opt_radius = std::numeric_limits<double>::infinity();

  while (true) {
    ++result.nodes_explored;
    const double objective = objective_percentile(instance, subset, rho);
    if (objective < result.opt_radius) {
      result.opt_radius = objective;
      result.witness = subset;
    }
    // Next k-combination of {0, ..., locations-1}.
    std::size_t i = k;
    while (i-- > 0) {
      if (subset[i] != static_cast<LocationId>(locations - k + i)) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j)
          subset[j] = subset[j - 1] + 1;
        break;
      }
      if (i == 0) return result;
    }
  }
}

// Non-private client cover: the same radius binary search as the private
// solver, with classical greedy inside and plain |F| <= k acceptance.
inline FacilitySolution baseline_client_cover(const VaccInstance& instance,
                                              double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ValidationError("gamma must lie in (0, 1)");
  if (instance.budget_k() == 0)
    throw ValidationError("facility budget k must be positive");
  FacilitySolution solution;
  solution.budget_multiplier_used = 1.0;

  double low = 0.0, high = 1.0;
  bool have_best = false;
  std::vector<LocationId> best;
  double best_radius = 1.0;
  std::vector<LocationId> smallest_family;

  while (high - low > gamma) {
    const double radius = (high + low) / 2.0;
    const SetSystem radius_sets = build_radius_sets(instance, radius);
    ClientCoverRound round;
    round.radius = radius;
    // Greedy can only fail if even every location misses the target, which
    // unit-diameter instances avoid at radius >= d(S_p, C); treat failure as
    // rejection.
    std::vector<SetId> family;
    bool reached = true;
    try {
      family = greedy_partial_cover(radius_sets, instance.rho());
    } catch (const ValidationError&) {
      reached = false;
    }
    if (reached) {
      round.facilities.assign(family.begin(), family.end());
      round.coverage = coverage_count(radius_sets, family);
      round.accepted = family.size() <= instance.budget_k();
    }
    solution.trace.push_back(round);
    if (reached && (smallest_family.empty() || family.size() < smallest_family.size()))
      smallest_family.assign(family.begin(), family.end());

    if (round.accepted) {
      if (!have_best || radius < best_radius) {
        best.assign(family.begin(), family.end());
        best_radius = radius;
        have_best = true;
      }
      high = radius;
    } else {
      low = radius;
    }
  }

  if (have_best) {
    solution.feasible = true;
    solution.facilities = std::move(best);
    solution.selected_radius = best_radius;
    solution.achieved_radius =
        objective_percentile(instance, solution.facilities, instance.rho());
  } else {
    solution.feasible = false;
    solution.facilities = std::move(smallest_family);
    solution.selected_radius = 1.0;
    if (!solution.facilities.empty())
      solution.achieved_radius =
          objective_percentile(instance, solution.facilities, instance.rho());
    else
      solution.achieved_radius = 1.0;
  }
  return solution;
}

}  // namespace dppc

#endif  // DPPC_ORACLES_HPP_
