#pragma once

#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// 0/1 knapsack over exact rationals. Values and weights are parallel to
// item_ids and must be nonnegative; capacity must be nonnegative.
struct KnapsackProblem {
  std::vector<int> item_ids;
  std::vector<Rat> values;
  std::vector<Rat> weights;
  Rat capacity;
};

struct KnapsackSolution {
  std::vector<int> chosen;  // subset of item_ids, ascending
  Rat value;
  Rat weight;
};

// Size counters for the scaling DP, exposed so tests can pin the
// polynomial table bound.
struct KnapsackFptasStats {
  long long dp_items = 0;
  long long scaled_total_bound = 0;  // largest reachable scaled value sum
  long long table_entries = 0;       // dp_items × (scaled_total_bound + 1)
};

// Exhaustive optimum, intended for small instances. Ties on value resolve to
// the lexicographically smallest chosen set. Throws CapacityError when the
// item count exceeds exhaustive_cap.
KnapsackSolution knapsack_exact(const KnapsackProblem&, int exhaustive_cap = 20);

// Value-scaling dynamic program: scale by μ = ε·v_max/N, floor, keep the
// minimum weight per scaled total, answer the best total within capacity.
// Zero-weight items with positive value are always taken. Feasible output
// with value >= (1-ε)·optimum for ε in (0,1).
KnapsackSolution knapsack_fptas(const KnapsackProblem&, const Rat& epsilon,
                                KnapsackFptasStats* stats = nullptr);

}  // namespace fairdiv
