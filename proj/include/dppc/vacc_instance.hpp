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

#ifndef DPPC_VACC_INSTANCE_HPP_
#define DPPC_VACC_INSTANCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dppc/errors.hpp"
#include "dppc/set_system.hpp"

namespace dppc {

using LocationId = std::uint32_t;
using PersonId = std::uint32_t;

// Metric on the location set: either points in the plane (line instances use
// y = 0) or an explicit symmetric matrix. Stored pre-normalized to unit
// diameter; `scale` converts normalized distances back to original units.
class MetricSpace {
 public:
  enum class Kind { kPoints, kMatrix };

  static MetricSpace from_points(std::vector<std::pair<double, double>> points) {
    MetricSpace m;
    m.kind_ = Kind::kPoints;
    m.points_ = std::move(points);
    m.normalize();
    return m;
  }

  // `matrix` is row-major size x size. Must be symmetric with zero diagonal
  // and satisfy the triangle inequality (checked after normalization).
  static MetricSpace from_matrix(std::size_t size, std::vector<double> matrix) {
    if (matrix.size() != size * size)
      throw ValidationError("distance matrix has wrong dimensions");
    MetricSpace m;
    m.kind_ = Kind::kMatrix;
    m.size_ = size;
    m.matrix_ = std::move(matrix);
    for (std::size_t i = 0; i < size; ++i) {
      if (m.matrix_[i * size + i] != 0.0)
        throw ValidationError("distance matrix diagonal must be zero");
      for (std::size_t j = 0; j < size; ++j) {
        const double d = m.matrix_[i * size + j];
        if (!(d >= 0.0) || !std::isfinite(d))
          throw ValidationError("distances must be finite and nonnegative");
        if (std::fabs(d - m.matrix_[j * size + i]) > 1e-12)
          throw ValidationError("distance matrix must be symmetric");
      }
    }
    m.normalize();
    m.check_triangle();
    return m;
  }

  Kind kind() const { return kind_; }
  std::size_t size() const {
    return kind_ == Kind::kPoints ? points_.size() : size_;
  }

  double distance(LocationId a, LocationId b) const {
    if (kind_ == Kind::kPoints) {
      const double dx = points_[a].first - points_[b].first;
      const double dy = points_[a].second - points_[b].second;
      return std::sqrt(dx * dx + dy * dy);
    }
    return matrix_[static_cast<std::size_t>(a) * size_ + b];
  }

  // Original diameter; 0 for the degenerate all-coincident case, in which
  // distances are left untouched (all zero).
  double scale() const { return scale_; }

  const std::vector<std::pair<double, double>>& points() const { return points_; }

 private:
  void normalize() {
    double diameter = 0.0;
    const std::size_t n = size();
    for (LocationId i = 0; i < n; ++i)
      for (LocationId j = i + 1; j < n; ++j)
        diameter = std::max(diameter, distance(i, j));
    scale_ = diameter;
    if (diameter <= 0.0) return;
    if (kind_ == Kind::kPoints) {
      for (auto& p : points_) {
        p.first /= diameter;
        p.second /= diameter;
      }
    } else {
      for (double& d : matrix_) d /= diameter;
    }
  }

  void check_triangle() const {
    const std::size_t n = size_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (matrix_[i * n + j] >
              matrix_[i * n + k] + matrix_[k * n + j] + 1e-9)
            throw ValidationError("triangle inequality violated at (" +
                                  std::to_string(i) + ", " + std::to_string(j) +
                                  ", " + std::to_string(k) + ")");
  }

  Kind kind_ = Kind::kPoints;
  std::vector<std::pair<double, double>> points_;
  std::size_t size_ = 0;
  std::vector<double> matrix_;
  double scale_ = 0.0;
};

// A facility-location instance: locations, people with nonempty visit sets,
// a unit-diameter metric, and the public problem parameters k and rho.
//
// The person-to-location distance matrix d(S_p, j) = min_{l in S_p} d(l, j)
// is materialized at construction; everything downstream reads it. The data
// is fixed once built (only k and rho are settable), so instances can be
// shared across solver threads.
class VaccInstance {
 public:
  static VaccInstance from_parts(MetricSpace metric,
                                 std::vector<std::vector<LocationId>> visit_sets,
                                 std::size_t budget_k = 1, double rho = 0.9) {
    VaccInstance v;
    v.metric_ = std::move(metric);
    v.visit_sets_ = std::move(visit_sets);
    v.budget_k_ = budget_k;
    v.rho_ = rho;
    const std::size_t locations = v.metric_.size();
    if (locations == 0) throw ValidationError("instance has no locations");
    for (std::size_t p = 0; p < v.visit_sets_.size(); ++p) {
      if (v.visit_sets_[p].empty())
        throw ValidationError("person " + std::to_string(p) +
                              " has an empty visit set");
      for (LocationId l : v.visit_sets_[p])
        if (l >= locations)
          throw ValidationError("person " + std::to_string(p) +
                                " visits unknown location " + std::to_string(l));
    }
    v.service_distance_.assign(v.visit_sets_.size() * locations, 0.0);
    for (std::size_t p = 0; p < v.visit_sets_.size(); ++p) {
      for (LocationId j = 0; j < locations; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (LocationId l : v.visit_sets_[p])
          best = std::min(best, v.metric_.distance(l, j));
        v.service_distance_[p * locations + j] = best;
      }
    }
    v.person_labels_.resize(v.visit_sets_.size());
    for (std::size_t p = 0; p < v.visit_sets_.size(); ++p)
      v.person_labels_[p] = static_cast<std::int64_t>(p);
    v.location_labels_.resize(locations);
    for (std::size_t l = 0; l < locations; ++l)
      v.location_labels_[l] = static_cast<std::int64_t>(l);
    return v;
  }

  std::size_t people_count() const { return visit_sets_.size(); }
  std::size_t location_count() const { return metric_.size(); }
  const MetricSpace& metric() const { return metric_; }
  const std::vector<std::vector<LocationId>>& visit_sets() const {
    return visit_sets_;
  }

  std::size_t budget_k() const { return budget_k_; }
  double rho() const { return rho_; }
  void set_budget_k(std::size_t k) {
    if (k == 0) throw ValidationError("budget k must be positive");
    budget_k_ = k;
  }
  void set_rho(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
      throw ValidationError("rho must lie in (0, 1)");
    rho_ = rho;
  }

  // d(S_p, j) in normalized units.
  double person_location_distance(PersonId p, LocationId j) const {
    return service_distance_[static_cast<std::size_t>(p) * location_count() + j];
  }

  const std::vector<std::int64_t>& person_labels() const { return person_labels_; }
  const std::vector<std::int64_t>& location_labels() const {
    return location_labels_;
  }
  void set_person_labels(std::vector<std::int64_t> labels) {
    if (labels.size() != people_count())
      throw ValidationError("person label map has wrong size");
    person_labels_ = std::move(labels);
  }
  void set_location_labels(std::vector<std::int64_t> labels) {
    if (labels.size() != location_count())
      throw ValidationError("location label map has wrong size");
    location_labels_ = std::move(labels);
  }

 private:
  MetricSpace metric_;
  std::vector<std::vector<LocationId>> visit_sets_;
  std::vector<double> service_distance_;
  std::size_t budget_k_ = 1;
  double rho_ = 0.9;
  std::vector<std::int64_t> person_labels_;
  std::vector<std::int64_t> location_labels_;
};

// The radius-R reduction to set cover: universe = people, one set per
// location j holding the people within service distance R of j.
inline SetSystem build_radius_sets(const VaccInstance& instance, double radius) {
  if (!(radius >= 0.0))
    throw ValidationError("build_radius_sets: radius must be nonnegative");
  std::vector<std::vector<ElementId>> sets(instance.location_count());
  for (LocationId j = 0; j < instance.location_count(); ++j)
    for (PersonId p = 0; p < instance.people_count(); ++p)
      if (instance.person_location_distance(p, j) <= radius)
        sets[j].push_back(p);
  return SetSystem::from_membership(instance.people_count(), std::move(sets));
}

// Service cost of the ceil(rho * n)-th best-served person under facilities F
// (1-based order statistic over ascending per-person costs).
inline double objective_percentile(const VaccInstance& instance,
                                   std::span<const LocationId> facilities,
                                   double rho) {
  if (facilities.empty())
    throw ValidationError("objective_percentile: empty facility set");
  std::vector<double> costs(instance.people_count());
  for (PersonId p = 0; p < instance.people_count(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (LocationId f : facilities) {
      if (f >= instance.location_count())
        throw ValidationError("objective_percentile: unknown facility id");
      best = std::min(best, instance.person_location_distance(p, f));
    }
    costs[p] = best;
  }
  const std::int64_t rank = coverage_target(instance.people_count(), rho);
  if (rank < 1 || rank > static_cast<std::int64_t>(costs.size()))
    throw ValidationError("objective_percentile: rank outside population");
  std::nth_element(costs.begin(), costs.begin() + (rank - 1), costs.end());
  return costs[rank - 1];
}

inline double objective_percentile(const VaccInstance& instance,
                                   const std::vector<LocationId>& facilities,
                                   double rho) {
  return objective_percentile(instance, std::span<const LocationId>(facilities),
                              rho);
}

// Text format: first data line "P L"; then either "loc id x y" lines (planar
// points) or "dist i j value" lines (explicit matrix; symmetric closure is
// applied); then "person id: loc1 loc2 ..." lines. '#' starts a comment.
inline VaccInstance load_vacc_instance(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t people = 0, locations = 0;

  std::unordered_map<std::int64_t, LocationId> loc_remap;
  std::vector<std::int64_t> loc_labels;
  std::vector<std::pair<double, double>> points;
  std::vector<double> matrix;
  bool saw_points = false, saw_matrix = false;

  std::unordered_map<std::int64_t, PersonId> person_remap;
  std::vector<std::int64_t> person_labels;
  std::vector<std::vector<std::int64_t>> visit_labels;

  auto location_id = [&](std::int64_t label, std::size_t lineno) -> LocationId {
    auto it = loc_remap.find(label);
    if (it != loc_remap.end()) return it->second;
    if (loc_remap.size() == locations)
      throw ParseError("more locations than the header's L", lineno);
    const LocationId id = static_cast<LocationId>(loc_remap.size());
    loc_remap.emplace(label, id);
    loc_labels.push_back(label);
    return id;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long hp, hl;
      if (!(ls >> hp >> hl) || hp < 0 || hl <= 0)
        throw ParseError("expected header \"P L\"", lineno);
      people = static_cast<std::size_t>(hp);
      locations = static_cast<std::size_t>(hl);
      have_header = true;
      continue;
    }
    std::string tag;
    ls >> tag;
    if (tag == "loc") {
      std::int64_t label;
      double x, y;
      if (!(ls >> label >> x >> y))
        throw ParseError("expected \"loc id x y\"", lineno);
      if (saw_matrix)
        throw ParseError("cannot mix loc and dist blocks", lineno);
      saw_points = true;
      const LocationId id = location_id(label, lineno);
      if (points.size() <= id) points.resize(id + 1);
      points[id] = {x, y};
    } else if (tag == "dist") {
      std::int64_t a, b;
      double d;
      if (!(ls >> a >> b >> d))
        throw ParseError("expected \"dist i j value\"", lineno);
      if (saw_points)
        throw ParseError("cannot mix loc and dist blocks", lineno);
      saw_matrix = true;
      if (matrix.empty()) matrix.assign(locations * locations, -1.0);
      const LocationId ia = location_id(a, lineno);
      const LocationId ib = location_id(b, lineno);
      matrix[static_cast<std::size_t>(ia) * locations + ib] = d;
      matrix[static_cast<std::size_t>(ib) * locations + ia] = d;
    } else if (tag == "person") {
      std::string head;
      if (!(ls >> head)) throw ParseError("malformed person line", lineno);
      if (head.empty() || head.back() != ':')
        throw ParseError("expected \"person id:\" prefix", lineno);
      std::int64_t label;
      try {
        label = std::stoll(head.substr(0, head.size() - 1));
      } catch (const std::exception&) {
        throw ParseError("person id is not an integer", lineno);
      }
      if (person_remap.count(label))
        throw ParseError("person " + std::to_string(label) + " defined twice",
                         lineno);
      if (visit_labels.size() == people)
        throw ParseError("more person lines than the header's P", lineno);
      person_remap.emplace(label, static_cast<PersonId>(visit_labels.size()));
      person_labels.push_back(label);
      std::vector<std::int64_t> visits;
      std::int64_t l;
      while (ls >> l) visits.push_back(l);
      if (!ls.eof()) throw ParseError("location id is not an integer", lineno);
      if (visits.empty())
        throw ParseError("person " + std::to_string(label) +
                         " has an empty visit set", lineno);
      visit_labels.push_back(std::move(visits));
    } else {
      throw ParseError("unknown record \"" + tag + "\"", lineno);
    }
  }
  if (!have_header) throw ParseError("missing header \"P L\"");
  if (visit_labels.size() != people)
    throw ParseError("header declares " + std::to_string(people) +
                     " people but " + std::to_string(visit_labels.size()) +
                     " were given");

  MetricSpace metric;
  if (saw_matrix) {
    if (loc_remap.size() != locations)
      throw ValidationError("dist block does not mention every location");
    for (std::size_t i = 0; i < locations; ++i)
      for (std::size_t j = 0; j < locations; ++j) {
        if (i == j) {
          if (matrix[i * locations + j] < 0.0) matrix[i * locations + j] = 0.0;
        } else if (matrix[i * locations + j] < 0.0) {
          throw ValidationError("distance between locations " +
                                std::to_string(loc_labels[i]) + " and " +
                                std::to_string(loc_labels[j]) + " missing");
        }
      }
    metric = MetricSpace::from_matrix(locations, std::move(matrix));
  } else {
    if (!saw_points && locations > 0)
      throw ValidationError("no location block present");
    if (loc_remap.size() != locations)
      throw ValidationError("loc block does not mention every location");
    metric = MetricSpace::from_points(std::move(points));
  }

  std::vector<std::vector<LocationId>> visit_sets(visit_labels.size());
  for (std::size_t p = 0; p < visit_labels.size(); ++p) {
    for (std::int64_t label : visit_labels[p]) {
      auto it = loc_remap.find(label);
      if (it == loc_remap.end())
        throw ValidationError("person " + std::to_string(person_labels[p]) +
                              " visits undeclared location " +
                              std::to_string(label));
      visit_sets[p].push_back(it->second);
    }
  }

  VaccInstance instance =
      VaccInstance::from_parts(std::move(metric), std::move(visit_sets));
  instance.set_person_labels(std::move(person_labels));
  instance.set_location_labels(std::move(loc_labels));
  return instance;
}

inline void save_vacc_instance(const VaccInstance& instance, std::ostream& out) {
  out << instance.people_count() << ' ' << instance.location_count() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  const MetricSpace& metric = instance.metric();
  if (metric.kind() == MetricSpace::Kind::kPoints) {
    // Points are stored normalized; write them back in original units.
    const double s = metric.scale() > 0.0 ? metric.scale() : 1.0;
    for (LocationId l = 0; l < instance.location_count(); ++l)
      out << "loc " << instance.location_labels()[l] << ' '
          << metric.points()[l].first * s << ' ' << metric.points()[l].second * s
          << '\n';
  } else {
    const double s = metric.scale() > 0.0 ? metric.scale() : 1.0;
    for (LocationId i = 0; i < instance.location_count(); ++i)
      for (LocationId j = i + 1; j < instance.location_count(); ++j)
        out << "dist " << instance.location_labels()[i] << ' '
            << instance.location_labels()[j] << ' ' << metric.distance(i, j) * s
            << '\n';
  }
  for (PersonId p = 0; p < instance.people_count(); ++p) {
    out << "person " << instance.person_labels()[p] << ':';
    for (LocationId l : instance.visit_sets()[p])
      out << ' ' << instance.location_labels()[l];
    out << '\n';
  }
}

}  // namespace dppc

#endif  // DPPC_VACC_INSTANCE_HPP_
