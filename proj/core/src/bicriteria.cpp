#include "fairdiv/bicriteria.hpp"

#include <algorithm>
#include <map>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

std::vector<int> distinct_sorted(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

std::vector<int> FixingScheme::fixed_to(int agent) const {
  std::vector<int> items;
  for (int j = 0; j < num_agents; ++j) {
    if (j == agent) continue;
    const int g = pair(agent, j);
    if (g != kNone) items.push_back(g);
  }
  return distinct_sorted(std::move(items));
}

std::vector<int> FixingScheme::fixed_away_from(int agent) const {
  std::vector<int> items;
  for (int j = 0; j < num_agents; ++j) {
    if (j == agent) continue;
    const int g = pair(j, agent);
    if (g != kNone) items.push_back(g);
  }
  return distinct_sorted(std::move(items));
}

std::string FixingScheme::describe() const {
  std::string text;
  for (int i = 0; i < num_agents; ++i) {
    for (int j = 0; j < num_agents; ++j) {
      if (i == j) continue;
      if (!text.empty()) text += ' ';
      const int g = pair(i, j);
      text += "g[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
              "]=" + (g == kNone ? std::string("-") : std::to_string(g + 1));
    }
  }
  return text;
}

long long enumerate_fixing_schemes(
    const Instance& inst, const std::function<void(const FixingScheme&)>& visit) {
  if (inst.num_agents < 2) {
    throw PreconditionError("fixing schemes need at least two agents");
  }
  const int n = inst.num_agents;
  const int m = inst.num_items;

  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }

  FixingScheme scheme;
  scheme.num_agents = n;
  scheme.fixed.assign(n * n, FixingScheme::kNone);

  std::vector<int> claimed_by(m, -1);
  std::vector<int> claim_count(m, 0);
  long long count = 0;

  const std::function<void(std::size_t)> recurse = [&](std::size_t slot) {
    if (slot == slots.size()) {
      ++count;
      visit(scheme);
      return;
    }
    const auto [i, j] = slots[slot];
    for (int g = 0; g < m; ++g) {
      if (claimed_by[g] != -1 && claimed_by[g] != i) continue;
      claimed_by[g] = i;
      ++claim_count[g];
      scheme.fixed[i * n + j] = g;
      recurse(slot + 1);
      scheme.fixed[i * n + j] = FixingScheme::kNone;
      if (--claim_count[g] == 0) claimed_by[g] = -1;
    }
    recurse(slot + 1);  // leave the pair unfixed
  };
  recurse(0);
  return count;
}

RoundedInstance round_instance(const Instance& inst, const FixingScheme& scheme,
                               long precision) {
  if (precision < 1) throw PreconditionError("precision K must be at least 1");
  if (scheme.num_agents != inst.num_agents ||
      static_cast<int>(scheme.fixed.size()) != inst.num_agents * inst.num_agents) {
    throw PreconditionError("fixing scheme shape does not match the instance");
  }
  const int n = inst.num_agents;
  const int m = inst.num_items;

  RoundedInstance ri;
  ri.base = &inst;
  ri.scheme = scheme;
  ri.precision = precision;
  ri.tau.resize(n);
  ri.total_unfixed.resize(n);
  ri.unit_values.assign(n, std::vector<long>(m + n, 0));
  ri.forced_agent.assign(m + n, -1);

  for (int i = 0; i < n; ++i) {
    for (int g : scheme.fixed_to(i)) {
      if (g < 0 || g >= m) throw PreconditionError("fixed item out of range");
      if (ri.forced_agent[g] != -1) {
        throw PreconditionError("fixing scheme assigns one item to two agents");
      }
      ri.forced_agent[g] = i;
    }
    ri.forced_agent[m + i] = i;  // dummy d_i
  }

  for (int i = 0; i < n; ++i) {
    const std::vector<int> away = scheme.fixed_away_from(i);
    std::vector<bool> zeroed(m, false);
    for (int g : away) {
      if (ri.forced_agent[g] == i) {
        throw InternalError("item fixed both to and away from one agent");
      }
      zeroed[g] = true;
    }

    Rat total = 0;
    for (int g = 0; g < m; ++g) {
      if (!zeroed[g]) total += inst.value(i, g);
    }
    ri.total_unfixed[i] = total;
    ri.tau[i] = total / precision;

    if (ri.tau[i] > 0) {
      for (int g = 0; g < m; ++g) {
        if (!zeroed[g]) {
          ri.unit_values[i][g] = floor_quotient(inst.value(i, g), ri.tau[i]);
        }
      }
      ri.unit_values[i][m + i] = m;
    }
    // tau == 0: agent i values everything outside Y_i at zero, all rounded
    // values stay zero and the envy-freeness row is vacuous.
  }
  return ri;
}

namespace {

struct StageEntry {
  Rat welfare;
  int agent = -1;                       // recipient of the item entering here
  const std::vector<long>* prev = nullptr;  // key in the previous stage map
};

using StageMap = std::map<std::vector<long>, StageEntry>;

}  // namespace

DpOutcome run_allocation_dp(const RoundedInstance& ri, long long state_budget) {
  const Instance& inst = *ri.base;
  const int n = inst.num_agents;
  const int m = inst.num_items;
  const int total = ri.total_items();

  std::vector<StageMap> stages(total + 1);
  stages[0].emplace(std::vector<long>(n * n, 0), StageEntry{Rat(0), -1, nullptr});
  long long states = 1;

  for (int t = 0; t < total; ++t) {
    for (const auto& [chi, entry] : stages[t]) {
      const int forced = ri.forced_agent[t];
      const int first = forced >= 0 ? forced : 0;
      const int last = forced >= 0 ? forced : n - 1;
      for (int agent = first; agent <= last; ++agent) {
        std::vector<long> next = chi;
        for (int j = 0; j < n; ++j) {
          next[j * n + agent] += ri.unit_values[j][t];
        }
        const Rat welfare =
            entry.welfare + (t < m ? inst.value(agent, t) : Rat(0));

        auto [it, inserted] = stages[t + 1].try_emplace(std::move(next));
        if (inserted) {
          if (++states > state_budget) {
            throw CapacityError(
                "allocation DP exceeded the state budget of " +
                std::to_string(state_budget) + " states");
          }
          it->second = StageEntry{welfare, agent, &chi};
        } else if (welfare > it->second.welfare) {
          it->second = StageEntry{welfare, agent, &chi};
        }
      }
    }
  }

  DpOutcome outcome;
  outcome.states_explored = states;

  for (const auto& [chi, entry] : stages[total]) {
    bool envy_free = true;
    for (int i = 0; i < n && envy_free; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && chi[i * n + i] < chi[i * n + j]) {
          envy_free = false;
          break;
        }
      }
    }
    if (!envy_free) continue;

    // Walk the predecessor chain to recover who got each item.
    std::vector<int> agent_of(total, -1);
    const std::vector<long>* key = &chi;
    for (int t = total; t > 0; --t) {
      const StageEntry& e = stages[t].at(*key);
      agent_of[t - 1] = e.agent;
      key = e.prev;
    }
    DpSurvivor survivor;
    survivor.chi = chi;
    survivor.welfare = entry.welfare;
    survivor.allocation = empty_allocation(n);
    for (int g = 0; g < m; ++g) {
      survivor.allocation.bundles[agent_of[g]].push_back(g);
    }
    sort_bundles(survivor.allocation);

    if (!outcome.best ||
        survivor.welfare > outcome.survivors[*outcome.best].welfare) {
      outcome.best = outcome.survivors.size();
    }
    outcome.survivors.push_back(std::move(survivor));
  }
  return outcome;
}

std::optional<Allocation> dp_solve(const RoundedInstance& ri,
                                   long long state_budget) {
  DpOutcome outcome = run_allocation_dp(ri, state_budget);
  if (!outcome.best) return std::nullopt;
  return outcome.survivors[*outcome.best].allocation;
}

SolveReport solve_bicriteria(const Instance& inst, const Rat& epsilon,
                             const BicriteriaOptions& options) {
  if (inst.num_agents < 2) {
    throw PreconditionError("bicriteria requires at least two agents");
  }
  if (!(epsilon > 0 && epsilon < 1)) {
    throw PreconditionError("epsilon must lie in (0,1), got " + format_rat(epsilon));
  }
  require_nonnegative(inst);

  const int n = inst.num_agents;
  const int m = inst.num_items;
  const long theorem_k = std::max(1L, ceil_to_long(Rat(3L * m * n) / epsilon));
  const long k = options.precision_override.value_or(theorem_k);
  if (k < 1) throw PreconditionError("precision K must be at least 1");

  // EF1 in the rounded instance maps back to (1 - 3mn/K)-approximate EF1;
  // with the theorem's K this is at least 1 - ε.
  const Rat alpha_eff = Rat(1) - Rat(3L * m * n) / k;

  std::optional<Allocation> best;
  Rat best_welfare;
  std::string best_scheme;
  const long long schemes =
      enumerate_fixing_schemes(inst, [&](const FixingScheme& scheme) {
        RoundedInstance ri = round_instance(inst, scheme, k);
        std::optional<Allocation> alloc = dp_solve(ri, options.state_budget);
        if (!alloc) return;
        const Rat welfare = social_welfare(inst, *alloc);
        if (!best || welfare > best_welfare) {
          best = std::move(alloc);
          best_welfare = welfare;
          best_scheme = scheme.describe();
        }
      });
  if (!best) {
    // Some scheme always carries an EF1 allocation through the rounding.
    throw InternalError("no fixing scheme produced an envy-free rounded state");
  }

  std::map<std::string, std::string> params{
      {"epsilon", format_rat(epsilon)},
      {"precision_k", std::to_string(k)},
      {"effective_alpha", format_rat(alpha_eff)},
      {"schemes_enumerated", std::to_string(schemes)},
      {"scheme", best_scheme},
      {"none_sentinel", "enabled"},
  };
  if (options.precision_override) params["precision_overridden"] = "1";

  SolveReport report =
      make_report(inst, std::move(*best), "bicriteria", std::move(params));
  if (alpha_eff > 0 && alpha_eff <= 1) {
    report.alpha_ef1 = is_alpha_ef1(inst, report.allocation, alpha_eff);
  }
  return report;
}

}  // namespace fairdiv
