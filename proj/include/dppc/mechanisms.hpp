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

#ifndef DPPC_MECHANISMS_HPP_
#define DPPC_MECHANISMS_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dppc/errors.hpp"
#include "dppc/noise.hpp"

namespace dppc {

// One draw from Lap(scale), density proportional to exp(-|x|/scale).
//
// Sampled by inverting the CDF on a single uniform draw: branch-free and
// reproducible across platforms given the same engine stream. Zero-noise
// sources return 0. Plain double-precision sampling; no mitigation is
// attempted for floating-point side channels of the kind discrete/secure
// noise mechanisms address.
inline double laplace(double scale, NoiseSource& noise) {
  if (!(scale > 0.0)) throw ValidationError("laplace: scale must be positive");
  if (noise.is_zero_noise()) return 0.0;
  const double u = noise.uniform_open01() - 0.5;  // (-1/2, 1/2)
  const double mag = std::log1p(-2.0 * std::fabs(u));
  return u < 0.0 ? scale * mag : -scale * mag;
}

// Exponential mechanism: returns index i with probability proportional to
// exp(weight_factor * scores[i]).
//
// The caller folds epsilon and sensitivity into weight_factor; the generic
// mechanism uses eps / (2 * sensitivity), while the greedy cover loop passes
// its per-pick weight directly. Scores are shifted by their maximum before
// exponentiation so large utilities cannot overflow. Zero-noise sources
// return the smallest argmax index.
inline std::size_t exponential_choice(std::span<const double> scores,
                                      double weight_factor, NoiseSource& noise) {
  if (scores.empty())
    throw ValidationError("exponential_choice: empty candidate list");
  if (!(weight_factor > 0.0))
    throw ValidationError("exponential_choice: weight factor must be positive");

  double max_score = scores[0];
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i]))
      throw ValidationError("exponential_choice: non-finite score");
    if (scores[i] > max_score) {
      max_score = scores[i];
      argmax = i;
    }
  }
  if (noise.is_zero_noise()) return argmax;

  std::vector<double> cumulative(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    total += std::exp(weight_factor * (scores[i] - max_score));
    cumulative[i] = total;
  }
  const double target = noise.uniform_open01() * total;
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
    if (cumulative[i] > target) return i;
  return cumulative.size() - 1;
}

inline std::size_t exponential_choice(const std::vector<double>& scores,
                                      double weight_factor, NoiseSource& noise) {
  return exponential_choice(std::span<const double>(scores), weight_factor,
                            noise);
}

// Offline AboveThreshold on a nondecreasing sequence.
//
// Draws threshold_hat = threshold + Lap(2/eps) once, then compares each
// value + Lap(4/eps) against it with a fresh draw per index, returning the
// first index that clears the bar or nullopt if none does. The per-index
// draws are independent (offline variant); the nondecreasing precondition is
// what lets a single crossing stand in for the whole prefix. Zero-noise
// sources reduce to the first deterministic crossing of `threshold`.
inline std::optional<std::size_t> above_threshold_offline(
    std::span<const double> values, double threshold, double epsilon,
    NoiseSource& noise) {
  if (!(epsilon > 0.0))
    throw ValidationError("above_threshold_offline: epsilon must be positive");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1])
      throw ValidationError("above_threshold_offline: values must be nondecreasing");

  if (noise.is_zero_noise()) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= threshold) return i;
    return std::nullopt;
  }

  const double threshold_hat = threshold + laplace(2.0 / epsilon, noise);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double noisy = values[i] + laplace(4.0 / epsilon, noise);
    if (noisy >= threshold_hat) return i;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> above_threshold_offline(
    const std::vector<double>& values, double threshold, double epsilon,
    NoiseSource& noise) {
  return above_threshold_offline(std::span<const double>(values), threshold,
                                 epsilon, noise);
}

}  // namespace dppc

#endif  // DPPC_MECHANISMS_HPP_
