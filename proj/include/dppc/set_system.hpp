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

#ifndef DPPC_SET_SYSTEM_HPP_
#define DPPC_SET_SYSTEM_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dppc/bitset.hpp"
#include "dppc/errors.hpp"

namespace dppc {

using ElementId = std::uint32_t;
using SetId = std::uint32_t;

// Number of elements a rho-fraction requirement asks for: ceil(rho * n).
// The tiny slop keeps products like 0.58 * 50 from ceiling one element high.
inline std::int64_t coverage_target(std::size_t universe_size, double rho) {
  return static_cast<std::int64_t>(
      std::ceil(rho * static_cast<double>(universe_size) - 1e-9));
}

// Incidence structure of m sets over a universe of n elements.
//
// Element and set ids are dense and 0-based. Ingestion remaps arbitrary
// integer labels onto dense ids and keeps the label maps so output can be
// reported in the caller's namespace. Aside from the label maps the loader
// attaches, instances never change once built, so concurrent reads are safe.
class SetSystem {
 public:
  // `sets` holds, per set, the element ids it contains. Validates ranges and
  // rejects duplicate elements within a set. Sets may be empty; the union
  // need not equal the universe.
  static SetSystem from_membership(std::size_t universe_size,
                                   std::vector<std::vector<ElementId>> sets) {
    SetSystem s;
    s.universe_size_ = universe_size;
    s.elements_ = std::move(sets);
    s.masks_.reserve(s.elements_.size());
    for (std::size_t i = 0; i < s.elements_.size(); ++i) {
      Bitset mask(universe_size);
      for (ElementId e : s.elements_[i]) {
        if (e >= universe_size)
          throw ValidationError("set " + std::to_string(i) +
                                " references element " + std::to_string(e) +
                                " outside the universe");
        if (mask.test(e))
          throw ValidationError("set " + std::to_string(i) +
                                " lists element " + std::to_string(e) +
                                " twice");
        mask.set(e);
      }
      s.masks_.push_back(std::move(mask));
    }
    s.element_labels_.resize(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i)
      s.element_labels_[i] = static_cast<std::int64_t>(i);
    s.set_labels_.resize(s.elements_.size());
    for (std::size_t i = 0; i < s.elements_.size(); ++i)
      s.set_labels_[i] = static_cast<std::int64_t>(i);
    return s;
  }

  std::size_t universe_size() const { return universe_size_; }
  std::size_t set_count() const { return elements_.size(); }

  const Bitset& set_mask(SetId id) const {
    if (id >= masks_.size())
      throw ValidationError("set id " + std::to_string(id) + " out of range");
    return masks_[id];
  }

  const std::vector<ElementId>& set_elements(SetId id) const {
    if (id >= elements_.size())
      throw ValidationError("set id " + std::to_string(id) + " out of range");
    return elements_[id];
  }

  // Union of every set; equals the full universe iff the instance is
  // coverable.
  Bitset union_of_all() const {
    Bitset u(universe_size_);
    for (const Bitset& m : masks_) u |= m;
    return u;
  }

  bool covers_universe() const { return union_of_all().count() == universe_size_; }

  const std::vector<std::int64_t>& element_labels() const { return element_labels_; }
  const std::vector<std::int64_t>& set_labels() const { return set_labels_; }
  void set_element_labels(std::vector<std::int64_t> labels) {
    if (labels.size() != universe_size_)
      throw ValidationError("element label map has wrong size");
    element_labels_ = std::move(labels);
  }
  void set_set_labels(std::vector<std::int64_t> labels) {
    if (labels.size() != elements_.size())
      throw ValidationError("set label map has wrong size");
    set_labels_ = std::move(labels);
  }

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::vector<ElementId>> elements_;
  std::vector<Bitset> masks_;
  std::vector<std::int64_t> element_labels_;
  std::vector<std::int64_t> set_labels_;
};

// Ordered permutation of set ids plus a 1-based threshold index k: the
// solution takes the first k entries.
struct PartialCoverSolution {
  std::vector<SetId> permutation;
  std::size_t k = 0;
};

// |union of the chosen sets|. Duplicated ids are harmless.
inline std::int64_t coverage_count(const SetSystem& system,
                                   std::span<const SetId> chosen) {
  Bitset covered(system.universe_size());
  for (SetId id : chosen) covered |= system.set_mask(id);
  return static_cast<std::int64_t>(covered.count());
}

inline std::int64_t coverage_count(const SetSystem& system,
                                   const std::vector<SetId>& chosen) {
  return coverage_count(system, std::span<const SetId>(chosen));
}

// Per-set marginal gains |S \ covered|, one entry per set id.
inline std::vector<std::int64_t> marginal_gains(const SetSystem& system,
                                                const Bitset& covered) {
  if (covered.size() != system.universe_size())
    throw ValidationError("covered mask does not match the universe");
  std::vector<std::int64_t> gains(system.set_count());
  for (std::size_t i = 0; i < system.set_count(); ++i)
    gains[i] = static_cast<std::int64_t>(
        Bitset::count_and_not(system.set_mask(static_cast<SetId>(i)), covered));
  return gains;
}

// Neighboring instance with element `victim` removed. Element ids above the
// victim shift down by one; set count and order are unchanged. Test-only
// helper for sensitivity checks.
inline SetSystem neighbor_remove(const SetSystem& system, ElementId victim) {
  if (victim >= system.universe_size())
    throw ValidationError("neighbor_remove: element " + std::to_string(victim) +
                          " does not exist");
  std::vector<std::vector<ElementId>> sets(system.set_count());
  for (std::size_t i = 0; i < system.set_count(); ++i) {
    for (ElementId e : system.set_elements(static_cast<SetId>(i))) {
      if (e == victim) continue;
      sets[i].push_back(e > victim ? e - 1 : e);
    }
  }
  return SetSystem::from_membership(system.universe_size() - 1, std::move(sets));
}

// Neighboring instance with one fresh element appended (id = n), contained in
// exactly `membership`.
inline SetSystem neighbor_add(const SetSystem& system,
                              const std::vector<SetId>& membership) {
  const ElementId fresh = static_cast<ElementId>(system.universe_size());
  std::vector<std::vector<ElementId>> sets(system.set_count());
  for (std::size_t i = 0; i < system.set_count(); ++i)
    sets[i] = system.set_elements(static_cast<SetId>(i));
  for (SetId s : membership) {
    if (s >= system.set_count())
      throw ValidationError("neighbor_add: set id out of range");
    sets[s].push_back(fresh);
  }
  return SetSystem::from_membership(system.universe_size() + 1, std::move(sets));
}

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

// Text format: first data line "n m", then one line per set,
// "setlabel: e1 e2 ...". '#' starts a comment; whitespace separates tokens.
// Arbitrary integer labels are remapped to dense 0-based ids in order of
// first appearance; the label maps are recorded on the returned system.
inline SetSystem load_set_system(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::vector<std::int64_t>> raw_sets;
  std::vector<std::int64_t> set_labels;
  std::unordered_map<std::int64_t, SetId> set_label_to_id;

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long hn, hm;
      if (!(ls >> hn >> hm) || hn < 0 || hm < 0)
        throw ParseError("expected header \"n m\"", lineno);
      std::string rest;
      if (ls >> rest) throw ParseError("trailing tokens after header", lineno);
      n = static_cast<std::size_t>(hn);
      m = static_cast<std::size_t>(hm);
      have_header = true;
      continue;
    }
    std::string head;
    if (!(ls >> head)) throw ParseError("malformed set line", lineno);
    if (head.empty() || head.back() != ':')
      throw ParseError("expected \"setid:\" prefix", lineno);
    std::int64_t set_label;
    try {
      set_label = std::stoll(head.substr(0, head.size() - 1));
    } catch (const std::exception&) {
      throw ParseError("set id is not an integer", lineno);
    }
    if (set_label_to_id.count(set_label))
      throw ParseError("set " + std::to_string(set_label) + " defined twice",
                       lineno);
    if (raw_sets.size() == m)
      throw ParseError("more set lines than the header's m", lineno);
    set_label_to_id[set_label] = static_cast<SetId>(raw_sets.size());
    set_labels.push_back(set_label);
    std::vector<std::int64_t> elems;
    std::int64_t e;
    while (ls >> e) elems.push_back(e);
    if (!ls.eof()) throw ParseError("element id is not an integer", lineno);
    raw_sets.push_back(std::move(elems));
  }
  if (!have_header) throw ParseError("missing header \"n m\"");
  if (raw_sets.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " sets but " +
                     std::to_string(raw_sets.size()) + " were given");

  // Element labels: identity when everything is already in [0, n), otherwise
  // dense remap in order of first appearance.
  bool dense = true;
  for (const auto& s : raw_sets)
    for (std::int64_t e : s)
      if (e < 0 || e >= static_cast<std::int64_t>(n)) dense = false;

  std::vector<std::int64_t> element_labels(n);
  std::vector<std::vector<ElementId>> sets(raw_sets.size());
  if (dense) {
    for (std::size_t i = 0; i < n; ++i)
      element_labels[i] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < raw_sets.size(); ++i)
      for (std::int64_t e : raw_sets[i])
        sets[i].push_back(static_cast<ElementId>(e));
  } else {
    std::unordered_map<std::int64_t, ElementId> remap;
    for (std::size_t i = 0; i < raw_sets.size(); ++i) {
      for (std::int64_t e : raw_sets[i]) {
        auto it = remap.find(e);
        if (it == remap.end()) {
          if (remap.size() == n)
            throw ValidationError(
                "more distinct element labels than the header's n");
          const ElementId id = static_cast<ElementId>(remap.size());
          remap.emplace(e, id);
          element_labels[id] = e;
          it = remap.find(e);
        }
        sets[i].push_back(it->second);
      }
    }
    // Universe slots never mentioned by any set keep synthetic labels.
    for (std::size_t i = remap.size(); i < n; ++i)
      element_labels[i] = static_cast<std::int64_t>(i);
  }

  SetSystem system = SetSystem::from_membership(n, std::move(sets));
  system.set_element_labels(std::move(element_labels));
  system.set_set_labels(std::move(set_labels));
  return system;
}

inline void save_set_system(const SetSystem& system, std::ostream& out) {
  out << system.universe_size() << ' ' << system.set_count() << '\n';
  for (std::size_t i = 0; i < system.set_count(); ++i) {
    out << system.set_labels()[i] << ':';
    for (ElementId e : system.set_elements(static_cast<SetId>(i)))
      out << ' ' << system.element_labels()[e];
    out << '\n';
  }
}

}  // namespace dppc

#endif  // DPPC_SET_SYSTEM_HPP_
