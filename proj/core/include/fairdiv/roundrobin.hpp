#pragma once

#include "fairdiv/report.hpp"

namespace fairdiv {

struct RoundAssignment {
  int agent = 0;
  int item = 0;
  Rat value;
};

struct RoundTrace {
  std::vector<std::vector<RoundAssignment>> rounds;
  Rat upper_bound;  // Σ_g max_i v_ig, an upper bound on any social welfare
};

struct RoundRobinResult {
  SolveReport report;
  RoundTrace trace;
};

// Σ over items of the highest single-agent value.
Rat welfare_upper_bound(const Instance&);

// Greedy round-robin: ceil(m/n) rounds; within a round repeatedly assign the
// (agent, item) pair of maximum value among agents not yet served this round
// and unallocated items, ties to the lower agent then lower item index. The
// output is EF1 and n·SW is at least the welfare upper bound.
RoundRobinResult solve_greedy_roundrobin(const Instance&);

}  // namespace fairdiv
