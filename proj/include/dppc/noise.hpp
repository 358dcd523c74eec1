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

#ifndef DPPC_NOISE_HPP_
#define DPPC_NOISE_HPP_

#include <cstdint>
#include <random>

namespace dppc {

// splitmix64 finalizer; used for seed derivation so that child streams are
// decorrelated from the parent stream and from each other.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// child_seed = hash(parent_seed, index). Free function so harness code can
// predict the seed of trial i without constructing the source.
inline std::uint64_t derive_seed(std::uint64_t parent_seed, std::uint64_t index) {
  return mix64(parent_seed ^ mix64(index + 1));
}

// Seedable randomness for every mechanism in the library.
//
// Identical (seed, mode) pairs produce identical draw sequences. The
// zero-noise mode is a test hook: Laplace draws become 0 and exponential
// selection degenerates to the smallest argmax; it consumes no randomness,
// so deterministic tests do not depend on draw counts.
//
// A source is single-owner mutable state. Parallel trials must each own a
// child obtained from split(), never share one source.
class NoiseSource {
 public:
  enum class Mode { kRandom, kZeroNoise };

  explicit NoiseSource(std::uint64_t seed, Mode mode = Mode::kRandom)
      : seed_(seed), mode_(mode), engine_(seed) {}

  static NoiseSource zero_noise() {
    return NoiseSource(0, Mode::kZeroNoise);
  }

  std::uint64_t seed() const { return seed_; }
  Mode mode() const { return mode_; }
  bool is_zero_noise() const { return mode_ == Mode::kZeroNoise; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw on the open interval (0, 1), built from the top 53 bits of
  // one engine output. Avoids generate_canonical so the stream is identical
  // across standard library implementations.
  double uniform_open01() {
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Independent child stream for trial `index`.
  NoiseSource split(std::uint64_t index) const {
    return NoiseSource(derive_seed(seed_, index), mode_);
  }

 private:
  std::uint64_t seed_;
  Mode mode_;
  std::mt19937_64 engine_;
};

}  // namespace dppc

#endif  // DPPC_NOISE_HPP_
