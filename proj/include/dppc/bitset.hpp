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

#ifndef DPPC_BITSET_HPP_
#define DPPC_BITSET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dppc {

// Fixed-size dynamic bit set. The greedy inner loops charge one popcount per
// machine word, so marginal gains cost O(n/64) per set.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool test(std::size_t i) const {
    assert(i < bits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    assert(bits_ == other.bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    assert(bits_ == other.bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool operator==(const Bitset& other) const {
    return bits_ == other.bits_ && words_ == other.words_;
  }

  // |a \ b|, without materializing the difference.
  static std::size_t count_and_not(const Bitset& a, const Bitset& b) {
    assert(a.bits_ == b.bits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & ~b.words_[i]);
    return c;
  }

  // |a ∩ b \ c|, for marginal gains restricted to a live sub-universe.
  static std::size_t count_and_and_not(const Bitset& a, const Bitset& b,
                                       const Bitset& c) {
    assert(a.bits_ == b.bits_ && a.bits_ == c.bits_);
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      n += std::popcount(a.words_[i] & b.words_[i] & ~c.words_[i]);
    return n;
  }

  // True iff a is a subset of b.
  static bool is_subset(const Bitset& a, const Bitset& b) {
    assert(a.bits_ == b.bits_);
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & ~b.words_[i]) return false;
    return true;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dppc

#endif  // DPPC_BITSET_HPP_
