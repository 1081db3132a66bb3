#pragma once

#include "fairdiv/report.hpp"

namespace fairdiv {

// The two-agent allocation maximizing social welfare with no fairness
// constraint: each item goes to the agent valuing it more, ties to agent 1.
struct WelfarePartition {
  std::vector<int> o1;  // items with v_1 >= v_2
  std::vector<int> o2;  // items with v_1 <  v_2
};

WelfarePartition welfare_partition(const Instance&);

struct LocalSearchResult {
  Allocation allocation;
  int iterations = 0;
};

// Repair loop for two agents. Precondition: agent 2 does not strongly envy
// agent 1 and agent 1 strongly envies agent 2. Each iteration moves the
// lowest-indexed item of A_2 \ O_2; if agent 2 would envy agent 1 after the
// removal the bundles are swapped instead. Returns an EF1 allocation with
// social welfare at least the input's, in at most m iterations; both bounds
// are enforced at runtime and a violation raises InternalError.
LocalSearchResult local_search(const Instance&, const std::vector<int>& o2,
                               const Allocation& start);

// (1-ε)-approximation of the maximum social welfare over EF1 allocations of
// a two-agent instance. When the welfare partition is already EF1 the exact
// optimum is returned. Otherwise agents are relabeled so that agent 2
// strongly envies agent 1, and for each candidate removal item g in O_1 a
// knapsack over O_1 \ {g} (value v_1 - v_2, weight v_2, capacity
// (v_2(M) - v_2g)/2) proposes a candidate allocation, repaired by
// local_search when needed; the best candidate wins.
SolveReport solve_fptas2(const Instance&, const Rat& epsilon);

}  // namespace fairdiv
