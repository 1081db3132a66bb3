#include "fairdiv/roundrobin.hpp"

namespace fairdiv {

Rat welfare_upper_bound(const Instance& inst) {
  Rat sum = 0;
  for (int g = 0; g < inst.num_items; ++g) {
    Rat best = inst.value(0, g);
    for (int i = 1; i < inst.num_agents; ++i) {
      if (inst.value(i, g) > best) best = inst.value(i, g);
    }
    sum += best;
  }
  return sum;
}

RoundRobinResult solve_greedy_roundrobin(const Instance& inst) {
  require_nonnegative(inst);

  const int n = inst.num_agents;
  const int m = inst.num_items;
  std::vector<bool> allocated(m, false);
  Allocation alloc = empty_allocation(n);
  RoundTrace trace;
  trace.upper_bound = welfare_upper_bound(inst);

  int remaining = m;
  while (remaining > 0) {
    std::vector<RoundAssignment> round;
    std::vector<bool> served(n, false);
    while (static_cast<int>(round.size()) < n && remaining > 0) {
      int best_agent = -1;
      int best_item = -1;
      Rat best_value;
      for (int i = 0; i < n; ++i) {
        if (served[i]) continue;
        for (int g = 0; g < m; ++g) {
          if (allocated[g]) continue;
          const Rat& v = inst.value(i, g);
          if (best_agent < 0 || v > best_value) {
            best_agent = i;
            best_item = g;
            best_value = v;
          }
        }
      }
      served[best_agent] = true;
      allocated[best_item] = true;
      --remaining;
      alloc.bundles[best_agent].push_back(best_item);
      round.push_back({best_agent, best_item, best_value});
    }
    trace.rounds.push_back(std::move(round));
  }

  sort_bundles(alloc);
  RoundRobinResult result;
  result.report = make_report(inst, std::move(alloc), "roundrobin",
                              {{"rounds", std::to_string(trace.rounds.size())}});
  result.trace = std::move(trace);
  return result;
}

}  // namespace fairdiv
