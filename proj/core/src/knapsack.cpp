#include "fairdiv/knapsack.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

void validate_problem(const KnapsackProblem& p) {
  const std::size_t n = p.item_ids.size();
  if (p.values.size() != n || p.weights.size() != n) {
    throw PreconditionError("knapsack value/weight lists must match item list");
  }
  for (std::size_t o = 0; o < n; ++o) {
    if (p.values[o] < 0) throw PreconditionError("negative knapsack value");
    if (p.weights[o] < 0) throw PreconditionError("negative knapsack weight");
  }
  if (p.capacity < 0) throw PreconditionError("negative knapsack capacity");
}

KnapsackSolution collect(const KnapsackProblem& p, std::vector<int> positions) {
  KnapsackSolution sol;
  sol.value = 0;
  sol.weight = 0;
  for (int pos : positions) {
    sol.chosen.push_back(p.item_ids[pos]);
    sol.value += p.values[pos];
    sol.weight += p.weights[pos];
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace

KnapsackSolution knapsack_exact(const KnapsackProblem& p, int exhaustive_cap) {
  validate_problem(p);
  const int n = static_cast<int>(p.item_ids.size());
  if (n > exhaustive_cap) {
    throw CapacityError("knapsack_exact limited to " + std::to_string(exhaustive_cap) +
                        " items, got " + std::to_string(n));
  }

  std::vector<int> best;        // positions
  std::vector<int> best_ids;    // ascending ids, for the lexicographic tie-break
  Rat best_value = 0;
  bool have_best = false;

  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Rat value = 0;
    Rat weight = 0;
    std::vector<int> positions;
    for (int o = 0; o < n; ++o) {
      if (mask & (1ul << o)) {
        value += p.values[o];
        weight += p.weights[o];
        positions.push_back(o);
      }
    }
    if (weight > p.capacity) continue;
    std::vector<int> ids;
    ids.reserve(positions.size());
    for (int pos : positions) ids.push_back(p.item_ids[pos]);
    std::sort(ids.begin(), ids.end());
    if (!have_best || value > best_value ||
        (value == best_value && ids < best_ids)) {
      have_best = true;
      best_value = value;
      best = positions;
      best_ids = ids;
    }
  }
  // The empty set is always feasible (capacity >= 0), so have_best holds.
  return collect(p, best);
}

KnapsackSolution knapsack_fptas(const KnapsackProblem& p, const Rat& epsilon,
                                KnapsackFptasStats* stats) {
  validate_problem(p);
  if (!(epsilon > 0 && epsilon < 1)) {
    throw PreconditionError("epsilon must lie in (0,1), got " + format_rat(epsilon));
  }

  // Zero-weight items with positive value never cost capacity; take them.
  // Items heavier than the capacity can never be packed; drop them.
  std::vector<int> forced;
  std::vector<int> dp_positions;
  const int n = static_cast<int>(p.item_ids.size());
  for (int o = 0; o < n; ++o) {
    if (p.weights[o] > p.capacity) continue;
    if (p.weights[o] == 0) {
      if (p.values[o] > 0) forced.push_back(o);
      continue;
    }
    dp_positions.push_back(o);
  }

  Rat v_max = 0;
  for (int pos : dp_positions) v_max = std::max(v_max, p.values[pos]);
  if (v_max == 0) {
    if (stats) *stats = {};
    return collect(p, forced);
  }

  const int dp_n = static_cast<int>(dp_positions.size());
  const Rat mu = epsilon * v_max / dp_n;
  std::vector<long> scaled(dp_n);
  long total = 0;
  for (int k = 0; k < dp_n; ++k) {
    scaled[k] = floor_quotient(p.values[dp_positions[k]], mu);
    total += scaled[k];
  }

  if (stats) {
    stats->dp_items = dp_n;
    stats->scaled_total_bound = total;
    stats->table_entries = static_cast<long long>(dp_n) * (total + 1);
  }

  // dp[P]: minimum weight reaching scaled total exactly P; on weight ties the
  // set with the lexicographically smaller sorted item-id list is kept.
  struct Cell {
    bool reachable = false;
    Rat weight;
    std::vector<int> positions;
  };
  std::vector<Cell> dp(total + 1);
  dp[0].reachable = true;
  dp[0].weight = 0;

  auto sorted_ids = [&p](const std::vector<int>& positions) {
    std::vector<int> ids;
    ids.reserve(positions.size());
    for (int pos : positions) ids.push_back(p.item_ids[pos]);
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  for (int k = 0; k < dp_n; ++k) {
    const int pos = dp_positions[k];
    const Rat& w = p.weights[pos];
    for (long target = total; target >= scaled[k]; --target) {
      const Cell& from = dp[target - scaled[k]];
      if (!from.reachable) continue;
      Cell& to = dp[target];
      const Rat cand_weight = from.weight + w;
      bool replace = false;
      if (!to.reachable || cand_weight < to.weight) {
        replace = true;
      } else if (cand_weight == to.weight) {
        std::vector<int> cand = from.positions;
        cand.push_back(pos);
        replace = sorted_ids(cand) < sorted_ids(to.positions);
      }
      if (replace) {
        to.reachable = true;
        to.weight = cand_weight;
        to.positions = from.positions;
        to.positions.push_back(pos);
      }
    }
  }

  long best_total = 0;
  for (long target = total; target >= 0; --target) {
    if (dp[target].reachable && dp[target].weight <= p.capacity) {
      best_total = target;
      break;
    }
  }

  std::vector<int> positions = forced;
  positions.insert(positions.end(), dp[best_total].positions.begin(),
                   dp[best_total].positions.end());
  return collect(p, std::move(positions));
}

}  // namespace fairdiv
