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

#ifndef DPPC_BUDGET_HPP_
#define DPPC_BUDGET_HPP_

#include <span>
#include <string>
#include <vector>

#include "dppc/errors.hpp"

namespace dppc {

// An (epsilon, delta) pair. Budgets add under basic composition.
struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
};

inline void validate_budget(const PrivacyBudget& b) {
  if (!(b.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(b.delta >= 0.0 && b.delta < 1.0))
    throw ValidationError("delta must lie in [0, 1)");
}

inline PrivacyBudget compose(std::span<const PrivacyBudget> budgets) {
  if (budgets.empty()) throw ValidationError("compose: empty budget list");
  PrivacyBudget total;
  for (const PrivacyBudget& b : budgets) {
    total.epsilon += b.epsilon;
    total.delta += b.delta;
  }
  return total;
}

inline PrivacyBudget compose(std::initializer_list<PrivacyBudget> budgets) {
  return compose(std::span<const PrivacyBudget>(budgets.begin(), budgets.end()));
}

// Itemized budget spend of one end-to-end run.
//
// Each entry records the budget a stage is charged under basic composition.
// Data-adaptive loops (binary searches, amplification repeats) are charged
// their worst-case iteration count up front, because that is what the
// composition argument for the enclosing mechanism covers; early convergence
// does not refund budget.
class PrivacyLedger {
 public:
  struct Entry {
    std::string label;
    PrivacyBudget budget;
  };

  void charge(std::string label, PrivacyBudget budget) {
    entries_.push_back({std::move(label), budget});
  }

  const std::vector<Entry>& entries() const { return entries_; }

  PrivacyBudget total() const {
    PrivacyBudget t;
    for (const Entry& e : entries_) {
      t.epsilon += e.budget.epsilon;
      t.delta += e.budget.delta;
    }
    return t;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace dppc

#endif  // DPPC_BUDGET_HPP_
