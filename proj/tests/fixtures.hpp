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

#ifndef DPPC_TESTS_FIXTURES_HPP_
#define DPPC_TESTS_FIXTURES_HPP_

#include <set>
#include <vector>

#include "dppc/noise.hpp"
#include "dppc/set_system.hpp"
#include "dppc/vacc_instance.hpp"

namespace dppc {
namespace testing {

// Random system in which every element is planted in at least one set.
inline SetSystem random_coverable_system(std::size_t n, std::size_t m,
                                         std::size_t set_size,
                                         NoiseSource& rng) {
  std::vector<std::set<ElementId>> sets(m);
  for (ElementId e = 0; e < n; ++e) sets[rng.next_u64() % m].insert(e);
  for (std::size_t s = 0; s < m; ++s)
    while (sets[s].size() < set_size)
      sets[s].insert(static_cast<ElementId>(rng.next_u64() % n));
  std::vector<std::vector<ElementId>> out(m);
  for (std::size_t s = 0; s < m; ++s)
    out[s].assign(sets[s].begin(), sets[s].end());
  return SetSystem::from_membership(n, std::move(out));
}

// Two tight clusters of locations a unit apart on the line, four people per
// location, each visiting exactly their home location. 24 people, 6
// locations; the optimal pair of facilities is one mid-cluster location per
// side.
inline VaccInstance two_cluster_line_fixture(std::size_t budget_k = 2,
                                             double rho = 0.9) {
  const std::vector<std::pair<double, double>> points{
      {0.00, 0}, {0.01, 0}, {0.02, 0}, {1.00, 0}, {1.01, 0}, {1.02, 0}};
  std::vector<std::vector<LocationId>> visits;
  for (LocationId l = 0; l < 6; ++l)
    for (int copies = 0; copies < 4; ++copies) visits.push_back({l});
  VaccInstance v = VaccInstance::from_parts(MetricSpace::from_points(points),
                                            std::move(visits));
  v.set_budget_k(budget_k);
  v.set_rho(rho);
  return v;
}

}  // namespace testing
}  // namespace dppc

#endif  // DPPC_TESTS_FIXTURES_HPP_
