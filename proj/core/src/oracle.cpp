#include "fairdiv/oracle.hpp"

#include <functional>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

void require_within_budget(const Instance& inst, long long budget,
                           long long base) {
  long long count = 1;
  for (int g = 0; g < inst.num_items; ++g) {
    if (count > budget / base) {
      throw CapacityError("oracle enumeration of " + std::to_string(base) + "^" +
                          std::to_string(inst.num_items) +
                          " allocations exceeds budget " + std::to_string(budget));
    }
    count *= base;
  }
}

// Strong envy without building witness reports: v_i(A_i) < v_i(A_j) - max
// over single removals. Empty bundles are never strongly envied.
bool strongly_envies(const Instance& inst, const Allocation& alloc, int observer,
                     int owner) {
  const auto& bundle = alloc.bundles[owner];
  if (bundle.empty()) return false;
  Rat total = 0;
  Rat best = 0;
  bool first = true;
  for (int g : bundle) {
    const Rat& v = inst.value(observer, g);
    total += v;
    if (first || v > best) best = v;
    first = false;
  }
  return inst.bundle_value(observer, alloc.bundles[observer]) < total - best;
}

bool allocation_is_ef1(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.num_agents; ++i) {
    for (int j = 0; j < inst.num_agents; ++j) {
      if (i != j && strongly_envies(inst, alloc, i, j)) return false;
    }
  }
  return true;
}

// Enumerates assignment vectors lexicographically (item 1 most significant)
// and reports each complete allocation with its social welfare.
void enumerate_allocations(
    const Instance& inst, long long budget,
    const std::function<void(const Allocation&, const Rat&)>& visit) {
  require_within_budget(inst, budget, inst.num_agents);

  const int n = inst.num_agents;
  const int m = inst.num_items;
  std::vector<int> assign(m, 0);
  Allocation alloc = empty_allocation(n);

  while (true) {
    for (auto& bundle : alloc.bundles) bundle.clear();
    Rat welfare = 0;
    for (int g = 0; g < m; ++g) {
      alloc.bundles[assign[g]].push_back(g);
      welfare += inst.value(assign[g], g);
    }
    visit(alloc, welfare);

    int g = m - 1;
    while (g >= 0 && assign[g] == n - 1) {
      assign[g] = 0;
      --g;
    }
    if (g < 0) break;
    ++assign[g];
  }
}

OracleResult run_oracle(const Instance& inst, long long budget,
                        const std::function<bool(const Allocation&)>& feasible,
                        const char* what) {
  require_nonnegative(inst);
  OracleResult result;
  bool found = false;
  enumerate_allocations(inst, budget,
                        [&](const Allocation& alloc, const Rat& welfare) {
                          if (!feasible(alloc)) return;
                          ++result.ef1_count;
                          if (!found || welfare > result.optimum) {
                            found = true;
                            result.optimum = welfare;
                            result.best = alloc;
                          }
                        });
  if (!found) {
    // An EF1 allocation always exists for additive valuations.
    throw InternalError(std::string("oracle found no feasible allocation (") +
                        what + ")");
  }
  return result;
}

}  // namespace

OracleResult solve_exact(const Instance& inst, long long budget) {
  return run_oracle(
      inst, budget,
      [&inst](const Allocation& alloc) { return allocation_is_ef1(inst, alloc); },
      "EF1");
}

OracleResult solve_exact_c2(const Instance& inst, long long budget) {
  if (inst.num_agents != 2) {
    throw PreconditionError("solve_exact_c2 requires exactly two agents");
  }
  return run_oracle(inst, budget,
                    [&inst](const Allocation& alloc) {
                      return !strongly_envies(inst, alloc, 1, 0);
                    },
                    "C2");
}

void for_each_ef1_allocation(const Instance& inst,
                             const std::function<void(const Allocation&)>& visit,
                             long long budget) {
  require_nonnegative(inst);
  enumerate_allocations(inst, budget,
                        [&](const Allocation& alloc, const Rat&) {
                          if (allocation_is_ef1(inst, alloc)) visit(alloc);
                        });
}

}  // namespace fairdiv
