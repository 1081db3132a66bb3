#pragma once

#include <functional>
#include <optional>

#include "fairdiv/report.hpp"

namespace fairdiv {

constexpr long long kDefaultDpStateBudget = 10'000'000;

// Per-ordered-pair fixed removal items. pair(i,j) is the item fixed into
// agent i's bundle whose removal is meant to satisfy agent j, or kNone when
// the pair is left unfixed. X_i collects the items fixed to agent i, Y_i the
// items fixed away from agent i (they are zeroed in agent i's rounded
// valuation). Distinct agents never fix the same item: X_i ∩ X_j = ∅.
struct FixingScheme {
  static constexpr int kNone = -1;

  int num_agents = 0;
  std::vector<int> fixed;  // n×n row-major, diagonal unused

  int pair(int owner, int beneficiary) const {
    return fixed[owner * num_agents + beneficiary];
  }
  std::vector<int> fixed_to(int agent) const;         // X_i, distinct sorted
  std::vector<int> fixed_away_from(int agent) const;  // Y_i, distinct sorted
  std::string describe() const;  // 1-based, "g[1][2]=3 g[2][1]=-"
};

// Visits every scheme over the instance's items, including schemes that
// leave pairs unfixed (needed whenever an optimal EF1 allocation contains an
// empty bundle). Deterministic order: slots by (owner, beneficiary), values
// item 1..m then kNone. Returns the number of schemes visited.
long long enumerate_fixing_schemes(
    const Instance&, const std::function<void(const FixingScheme&)>& visit);

// Individually rounded instance. Granularity τ_i = V_i/K with V_i the value
// agent i places on the items outside Y_i; every rounded value is the
// largest multiple of τ_i below the original, stored in units of τ_i. Dummy
// items d_1..d_n live at indices m..m+n-1; d_i is forced to agent i and is
// worth m·τ_i to agent i alone under the rounded valuation, 0 to everyone
// under the original one.
struct RoundedInstance {
  const Instance* base = nullptr;
  FixingScheme scheme;
  long precision = 0;  // K
  std::vector<Rat> tau;
  std::vector<Rat> total_unfixed;              // V_i
  std::vector<std::vector<long>> unit_values;  // n × (m+n): v̄_i(o)/τ_i
  std::vector<int> forced_agent;               // per item, -1 when free

  int total_items() const { return base->num_items + base->num_agents; }
  Rat rounded_value(int agent, int item) const {
    return tau[agent] * unit_values[agent][item];
  }
};

RoundedInstance round_instance(const Instance&, const FixingScheme&,
                               long precision);

// One terminal DP state that passed the rounded envy-freeness filter.
struct DpSurvivor {
  std::vector<long> chi;  // n×n, chi[i*n+j] = v̄_i(A_j ∪ {d_j})/τ_i
  Rat welfare;            // original-valuation social welfare
  Allocation allocation;  // real items only, dummies stripped
};

struct DpOutcome {
  std::vector<DpSurvivor> survivors;     // ascending chi order
  std::optional<std::size_t> best;       // max welfare, first on ties
  long long states_explored = 0;
};

// Stage-by-stage dynamic program over items then dummies. Fixed items admit
// only their owner's transition; free items branch over all agents. States
// are explored sparsely; exceeding the state budget raises CapacityError
// rather than truncating.
DpOutcome run_allocation_dp(const RoundedInstance&,
                            long long state_budget = kDefaultDpStateBudget);

// Best surviving allocation, or nullopt when no terminal state is envy-free
// under the rounded valuations.
std::optional<Allocation> dp_solve(const RoundedInstance&,
                                   long long state_budget = kDefaultDpStateBudget);

struct BicriteriaOptions {
  // Testing hook: the theorem's K = ceil(3mn/ε) is astronomically large even
  // for small instances; overriding K keeps runs desk-sized and the output
  // then guarantees (1 - 3mn/K)-approximate EF1 instead, recorded in the
  // report parameters.
  std::optional<long> precision_override;
  long long state_budget = kDefaultDpStateBudget;
};

// Enumerates fixing schemes, rounds, solves each DP and returns the best
// allocation by original-valuation social welfare. The winner's welfare is
// at least that of every EF1 allocation of the instance, and the winner is
// (1-ε)-approximate EF1 at the effective ε implied by K.
SolveReport solve_bicriteria(const Instance&, const Rat& epsilon,
                             const BicriteriaOptions& options = {});

}  // namespace fairdiv
