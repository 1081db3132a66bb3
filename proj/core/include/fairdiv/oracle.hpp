#pragma once

#include <functional>

#include "fairdiv/checkers.hpp"

namespace fairdiv {

constexpr long long kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  Rat optimum;
  Allocation best;        // lexicographically first argmax
  long long ef1_count = 0;  // feasible allocations seen during enumeration
};

// Exhaustive maximum social welfare over EF1 allocations. Enumerates all n^m
// assignments in lexicographic order (item 1 most significant, agents
// ascending); ties on welfare keep the first assignment found. Throws
// CapacityError when n^m exceeds the budget.
OracleResult solve_exact(const Instance&, long long budget = kDefaultOracleBudget);

// Two agents only: maximum social welfare subject only to "agent 2 does not
// strongly envy agent 1".
OracleResult solve_exact_c2(const Instance&, long long budget = kDefaultOracleBudget);

// Visits every EF1 allocation of the instance, same order and budget rules
// as solve_exact.
void for_each_ef1_allocation(const Instance&,
                             const std::function<void(const Allocation&)>& visit,
                             long long budget = kDefaultOracleBudget);

}  // namespace fairdiv
