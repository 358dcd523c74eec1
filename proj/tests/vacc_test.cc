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

#include "dppc/vacc_instance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <vector>

#include "dppc/noise.hpp"
#include "gtest/gtest.h"

namespace dppc {
namespace {

VaccInstance random_vacc(std::size_t people, std::size_t locations,
                         NoiseSource& rng) {
  std::vector<std::pair<double, double>> points(locations);
  for (auto& p : points)
    p = {rng.uniform_open01() * 10.0, rng.uniform_open01() * 10.0};
  std::vector<std::vector<LocationId>> visits(people);
  for (auto& v : visits) {
    const std::size_t count = 1 + rng.next_u64() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      const LocationId l = static_cast<LocationId>(rng.next_u64() % locations);
      if (std::find(v.begin(), v.end(), l) == v.end()) v.push_back(l);
    }
  }
  return VaccInstance::from_parts(MetricSpace::from_points(std::move(points)),
                                  std::move(visits));
}

TEST(MetricSpace, PointsNormalizeToUnitDiameter) {
  MetricSpace m = MetricSpace::from_points({{0, 0}, {4, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(m.scale(), 4.0);
  double diameter = 0.0;
  for (LocationId i = 0; i < 3; ++i)
    for (LocationId j = 0; j < 3; ++j)
      diameter = std::max(diameter, m.distance(i, j));
  EXPECT_NEAR(diameter, 1.0, 1e-9);
}

TEST(MetricSpace, MatrixValidation) {
  // Asymmetric.
  EXPECT_THROW(MetricSpace::from_matrix(2, {0, 1, 2, 0}), ValidationError);
  // Triangle violation: d(0,2) = 9 > d(0,1) + d(1,2) = 2.
  EXPECT_THROW(MetricSpace::from_matrix(3, {0, 1, 9, 1, 0, 1, 9, 1, 0}),
               ValidationError);
  const MetricSpace ok = MetricSpace::from_matrix(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
  EXPECT_DOUBLE_EQ(ok.scale(), 2.0);
  EXPECT_NEAR(ok.distance(0, 2), 1.0, 1e-12);
}

TEST(VaccInstance, RejectsEmptyVisitSets) {
  EXPECT_THROW(VaccInstance::from_parts(
                   MetricSpace::from_points({{0, 0}, {1, 0}}), {{0}, {}}),
               ValidationError);
  EXPECT_THROW(VaccInstance::from_parts(
                   MetricSpace::from_points({{0, 0}, {1, 0}}), {{0}, {2}}),
               ValidationError);
}

TEST(LoadVaccInstance, PointsFormat) {
  std::istringstream in(
      "# two clusters on a line\n"
      "3 2\n"
      "loc 0 0 0\n"
      "loc 1 8 0\n"
      "person 0: 0\n"
      "person 1: 0 1\n"
      "person 2: 1\n");
  const VaccInstance v = load_vacc_instance(in);
  EXPECT_EQ(v.people_count(), 3u);
  EXPECT_EQ(v.location_count(), 2u);
  EXPECT_DOUBLE_EQ(v.metric().scale(), 8.0);
  EXPECT_NEAR(v.person_location_distance(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(v.person_location_distance(1, 1), 0.0, 1e-12);
}

TEST(LoadVaccInstance, MatrixFormatAndErrors) {
  std::istringstream in(
      "2 3\n"
      "dist 0 1 1\n"
      "dist 0 2 2\n"
      "dist 1 2 1\n"
      "person 0: 0\n"
      "person 1: 2\n");
  const VaccInstance v = load_vacc_instance(in);
  EXPECT_EQ(v.location_count(), 3u);
  EXPECT_DOUBLE_EQ(v.metric().scale(), 2.0);

  std::istringstream missing(
      "1 3\n"
      "dist 0 1 1\n"
      "person 0: 0\n");
  EXPECT_THROW(load_vacc_instance(missing), Error);

  std::istringstream empty_visits(
      "1 2\n"
      "loc 0 0 0\n"
      "loc 1 1 0\n"
      "person 0:\n");
  EXPECT_THROW(load_vacc_instance(empty_visits), ParseError);
}

TEST(LoadVaccInstance, MalformedInputsThrowTypedErrorsOnly) {
  const char* cases[] = {
      "",                                           // empty
      "2 0\n",                                      // no locations
      "1 1\nloc 0 0 0\n",                           // missing person
      "1 1\nloc 0 0 0\ndist 0 0 0\nperson 0: 0\n",  // mixed metric blocks
      "1 2\nloc 0 0 0\nperson 0: 0\n",              // undeclared location
      "1 1\nloc 0 0 0\nperson 0: 5\n",              // unknown visit target
      "1 1\nloc 0 0 0\nbogus 1 2 3\nperson 0: 0\n", // unknown record
      "2 1\nloc 0 0 0\nperson 0: 0\nperson 0: 0\n", // duplicate person
  };
  for (const char* text : cases) {
    std::istringstream in(text);
    EXPECT_THROW(load_vacc_instance(in), Error) << "input: " << text;
  }
}

TEST(LoadVaccInstance, SaveLoadRoundTrip) {
  NoiseSource rng(77);
  VaccInstance v = random_vacc(12, 5, rng);
  std::ostringstream out;
  save_vacc_instance(v, out);
  std::istringstream in(out.str());
  const VaccInstance back = load_vacc_instance(in);
  ASSERT_EQ(back.people_count(), v.people_count());
  ASSERT_EQ(back.location_count(), v.location_count());
  for (PersonId p = 0; p < v.people_count(); ++p)
    for (LocationId l = 0; l < v.location_count(); ++l)
      EXPECT_NEAR(back.person_location_distance(p, l),
                  v.person_location_distance(p, l), 1e-9);
}

TEST(BuildRadiusSets, DiameterAndZeroRadius) {
  NoiseSource rng(5);
  const VaccInstance v = random_vacc(10, 4, rng);
  const SetSystem at_one = build_radius_sets(v, 1.0);
  for (SetId j = 0; j < 4; ++j)
    EXPECT_EQ(at_one.set_elements(j).size(), 10u);  // everyone within diameter

  const SetSystem at_zero = build_radius_sets(v, 0.0);
  for (LocationId j = 0; j < 4; ++j) {
    for (PersonId p = 0; p < 10; ++p) {
      const bool visits =
          std::find(v.visit_sets()[p].begin(), v.visit_sets()[p].end(), j) !=
          v.visit_sets()[p].end();
      const bool in_set = std::find(at_zero.set_elements(j).begin(),
                                    at_zero.set_elements(j).end(),
                                    p) != at_zero.set_elements(j).end();
      EXPECT_EQ(in_set, visits);
    }
  }
}

TEST(BuildRadiusSets, LineMetricMatchesBruteForce) {
  // 3 locations at 0, 5, 10; 5 people with known visit sets; R = 0.3 after
  // normalization by diameter 10.
  std::vector<std::vector<LocationId>> visits{{0}, {1}, {2}, {0, 2}, {1, 2}};
  const VaccInstance v = VaccInstance::from_parts(
      MetricSpace::from_points({{0, 0}, {5, 0}, {10, 0}}), std::move(visits));
  const SetSystem s = build_radius_sets(v, 0.3);
  for (LocationId j = 0; j < 3; ++j) {
    for (PersonId p = 0; p < 5; ++p) {
      double best = 1e9;
      for (LocationId l : v.visit_sets()[p])
        best = std::min(best, std::fabs(static_cast<double>(l) - j) * 5.0 / 10.0);
      const bool expected = best <= 0.3;
      const bool got = std::find(s.set_elements(j).begin(),
                                 s.set_elements(j).end(), p) !=
                       s.set_elements(j).end();
      EXPECT_EQ(got, expected) << "person " << p << " location " << j;
    }
  }
}

TEST(BuildRadiusSets, MonotoneInRadius) {
  NoiseSource rng(31);
  const VaccInstance v = random_vacc(20, 6, rng);
  const SetSystem small = build_radius_sets(v, 0.2);
  const SetSystem large = build_radius_sets(v, 0.55);
  for (SetId j = 0; j < 6; ++j)
    EXPECT_TRUE(Bitset::is_subset(small.set_mask(j), large.set_mask(j)));
}

TEST(ObjectivePercentile, HandCases) {
  // Costs to F = {location 0} are 0.1, 0.2, 0.3, 0.9; diameter already 1.
  const VaccInstance v = VaccInstance::from_parts(
      MetricSpace::from_points(
          {{0, 0}, {0.1, 0}, {0.2, 0}, {0.3, 0}, {0.9, 0}, {1.0, 0}}),
      {{1}, {2}, {3}, {4}});
  const std::vector<LocationId> f{0};
  EXPECT_NEAR(objective_percentile(v, f, 0.75), 0.3, 1e-12);
  EXPECT_THROW(objective_percentile(v, std::vector<LocationId>{}, 0.75),
               ValidationError);

  // Everyone visiting a facility drives the objective to zero.
  const VaccInstance zero = VaccInstance::from_parts(
      MetricSpace::from_points({{0, 0}, {1, 0}}), {{0}, {0}, {0, 1}});
  EXPECT_DOUBLE_EQ(
      objective_percentile(zero, std::vector<LocationId>{0}, 0.9), 0.0);
}

TEST(ObjectivePercentile, MatchesSubsetBruteForce) {
  NoiseSource rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t people = 6 + rng.next_u64() % 7;  // up to 12
    const VaccInstance v = random_vacc(people, 4, rng);
    const double rho = 0.5 + 0.4 * rng.uniform_open01();
    std::vector<LocationId> facilities{
        static_cast<LocationId>(rng.next_u64() % 4),
        static_cast<LocationId>(rng.next_u64() % 4)};

    std::vector<double> costs(people);
    for (PersonId p = 0; p < people; ++p) {
      costs[p] = 1e9;
      for (LocationId f : facilities)
        costs[p] = std::min(costs[p], v.person_location_distance(p, f));
    }
    const std::size_t take =
        static_cast<std::size_t>(coverage_target(people, rho));
    // min over all take-subsets of the max cost == take-th order statistic.
    double best = 1e9;
    for (std::uint64_t mask = 0; mask < (1ull << people); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != take) continue;
      double worst = 0.0;
      for (std::size_t p = 0; p < people; ++p)
        if ((mask >> p) & 1) worst = std::max(worst, costs[p]);
      best = std::min(best, worst);
    }
    EXPECT_NEAR(objective_percentile(v, facilities, rho), best, 1e-12);
  }
}

// The pivot the radius search rests on: the percentile objective is within R
// exactly when the radius-R sets admit a cover of the target by F.
TEST(Duality, PercentileAgreesWithRadiusCoverage) {
  NoiseSource rng(2025);
  for (int trial = 0; trial < 30; ++trial) {
    const VaccInstance v = random_vacc(15, 5, rng);
    const double rho = 0.6;
    const double radius = rng.uniform_open01();
    std::vector<LocationId> facilities;
    for (LocationId l = 0; l < 5; ++l)
      if (rng.next_u64() % 2) facilities.push_back(l);
    if (facilities.empty()) facilities.push_back(0);

    const SetSystem sets = build_radius_sets(v, radius);
    std::vector<SetId> as_sets(facilities.begin(), facilities.end());
    const bool covered =
        coverage_count(sets, as_sets) >= coverage_target(15, rho);
    const bool within =
        objective_percentile(v, facilities, rho) <= radius;
    EXPECT_EQ(covered, within);
  }
}

}  // namespace
}  // namespace dppc
