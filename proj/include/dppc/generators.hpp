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

#ifndef DPPC_GENERATORS_HPP_
#define DPPC_GENERATORS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dppc/errors.hpp"
#include "dppc/noise.hpp"
#include "dppc/set_system.hpp"
#include "dppc/vacc_instance.hpp"

namespace dppc {

// Vertex-cover system of two stars on n/2 vertices each, centers joined by
// one edge. Universe = edges, one set per vertex. At rho = 1/2 either center
// alone is optimal, which is what makes the construction a worst case for
// exact private solving.
//
// Vertex ids: 0 and 1 are the centers; 2 .. n/2 are the first star's leaves,
// the rest belong to the second star.
inline SetSystem gen_star_lower_bound(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw ValidationError("star construction needs an even n >= 4");
  const std::size_t leaves_per_star = n / 2 - 1;
  std::vector<std::vector<ElementId>> vertex_sets(n);
  ElementId edge = 0;
  auto add_edge = [&](std::size_t a, std::size_t b) {
    vertex_sets[a].push_back(edge);
    vertex_sets[b].push_back(edge);
    ++edge;
  };
  add_edge(0, 1);
  for (std::size_t l = 0; l < leaves_per_star; ++l) add_edge(0, 2 + l);
  for (std::size_t l = 0; l < leaves_per_star; ++l)
    add_edge(1, 2 + leaves_per_star + l);
  const std::size_t edges = n - 1;
  return SetSystem::from_membership(edges, std::move(vertex_sets));
}

// The group-privacy neighbor of the star construction: the same graph with
// `extra_edges` additional leaf-leaf edges (never touching a center). At
// rho = 1/2 the larger edge count pushes the target past what one center
// covers.
inline SetSystem gen_star_lower_bound_perturbed(std::size_t n,
                                                std::size_t extra_edges = 3) {
  if (n < 4 || n % 2 != 0)
    throw ValidationError("star construction needs an even n >= 4");
  const std::size_t leaves_per_star = n / 2 - 1;
  const std::size_t leaves = 2 * leaves_per_star;
  if (extra_edges > leaves / 2)
    throw ValidationError("not enough leaves to place " +
                          std::to_string(extra_edges) + " disjoint extra edges");
  std::vector<std::vector<ElementId>> vertex_sets(n);
  ElementId edge = 0;
  auto add_edge = [&](std::size_t a, std::size_t b) {
    vertex_sets[a].push_back(edge);
    vertex_sets[b].push_back(edge);
    ++edge;
  };
  add_edge(0, 1);
  for (std::size_t l = 0; l < leaves_per_star; ++l) add_edge(0, 2 + l);
  for (std::size_t l = 0; l < leaves_per_star; ++l)
    add_edge(1, 2 + leaves_per_star + l);
  for (std::size_t e = 0; e < extra_edges; ++e) add_edge(2 + 2 * e, 3 + 2 * e);
  return SetSystem::from_membership(n - 1 + extra_edges,
                                    std::move(vertex_sets));
}

// Reduction from partial set cover to the facility problem: one location per
// set, laid out on a line, and one person per element visiting exactly the
// locations of the sets containing it. A radius-0 facility family of size k
// is a partial cover of size k and vice versa.
inline VaccInstance gen_psc_to_vacc(const SetSystem& system, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw ValidationError("rho must lie in (0, 1)");
  const std::size_t m = system.set_count();
  if (m == 0) throw ValidationError("reduction needs at least one set");
  std::vector<std::pair<double, double>> points(m);
  for (std::size_t i = 0; i < m; ++i)
    points[i] = {static_cast<double>(i), 0.0};

  std::vector<std::vector<LocationId>> visit_sets(system.universe_size());
  for (std::size_t s = 0; s < m; ++s)
    for (ElementId e : system.set_elements(static_cast<SetId>(s)))
      visit_sets[e].push_back(static_cast<LocationId>(s));
  for (std::size_t e = 0; e < visit_sets.size(); ++e)
    if (visit_sets[e].empty())
      throw ValidationError("element " + std::to_string(e) +
                            " belongs to no set; the reduced person would "
                            "have an empty visit set");

  VaccInstance instance = VaccInstance::from_parts(
      MetricSpace::from_points(std::move(points)), std::move(visit_sets));
  instance.set_rho(rho);
  return instance;
}

struct MobilityConfig {
  std::size_t people = 1000;
  std::size_t locations = 100;
  std::size_t clusters = 5;
  double spread = 0.05;  // relative to unit cluster separation
  std::uint64_t seed = 0;
};

// Synthetic planar mobility data: cluster centers on a circle, locations
// scattered around them, and each person visiting 1-5 locations biased
// toward a home cluster. Deterministic per seed.
//
// If every location coincides (one cluster, zero spread) the metric has no
// diameter to normalize by; two sentinel locations at unit separation are
// appended to pin the diameter while all real distances stay 0.
inline VaccInstance gen_synthetic_mobility(const MobilityConfig& config) {
  if (config.people < 1 || config.locations < 1 || config.clusters < 1)
    throw ValidationError("mobility generator needs people/locations/clusters >= 1");
  NoiseSource rng(config.seed);
  auto uniform = [&rng]() { return rng.uniform_open01(); };

  std::vector<std::pair<double, double>> centers(config.clusters);
  for (std::size_t c = 0; c < config.clusters; ++c) {
    const double angle =
        2.0 * 3.14159265358979323846 * static_cast<double>(c) /
        static_cast<double>(config.clusters);
    centers[c] = {std::cos(angle), std::sin(angle)};
  }

  std::vector<std::pair<double, double>> points(config.locations);
  std::vector<std::size_t> location_cluster(config.locations);
  for (std::size_t l = 0; l < config.locations; ++l) {
    const std::size_t c = l % config.clusters;
    location_cluster[l] = c;
    const double dx = (uniform() - 0.5) * 2.0 * config.spread;
    const double dy = (uniform() - 0.5) * 2.0 * config.spread;
    points[l] = {centers[c].first + dx, centers[c].second + dy};
  }

  // Degenerate-diameter guard: sentinels pin the diameter at unit length.
  double diameter = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[i].first - points[j].first;
      const double dy = points[i].second - points[j].second;
      diameter = std::max(diameter, dx * dx + dy * dy);
    }
  if (diameter < 1e-24) {
    points.push_back({points[0].first + 1.0, points[0].second});
    points.push_back({points[0].first - 1.0, points[0].second});
  }

  std::vector<std::vector<LocationId>> visit_sets(config.people);
  for (std::size_t p = 0; p < config.people; ++p) {
    const std::size_t home =
        static_cast<std::size_t>(uniform() * static_cast<double>(config.clusters)) %
        config.clusters;
    const std::size_t visits = 1 + static_cast<std::size_t>(uniform() * 5.0) % 5;
    std::vector<LocationId> chosen;
    for (std::size_t v = 0; v < visits; ++v) {
      // 80% of visits stay in the home cluster.
      const bool local = uniform() < 0.8;
      LocationId pick = 0;
      for (int attempt = 0; attempt < 64; ++attempt) {
        pick = static_cast<LocationId>(uniform() *
                                       static_cast<double>(config.locations)) %
               static_cast<LocationId>(config.locations);
        if (!local || location_cluster[pick] == home) break;
      }
      bool duplicate = false;
      for (LocationId c : chosen) duplicate = duplicate || c == pick;
      if (!duplicate) chosen.push_back(pick);
    }
    if (chosen.empty()) chosen.push_back(static_cast<LocationId>(p % config.locations));
    visit_sets[p] = std::move(chosen);
  }

  return VaccInstance::from_parts(MetricSpace::from_points(std::move(points)),
                                  std::move(visit_sets));
}

}  // namespace dppc

#endif  // DPPC_GENERATORS_HPP_
