#include "fairdiv/instance.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Rat Instance::bundle_value(int agent, std::span<const int> bundle) const {
  Rat sum = 0;
  for (int g : bundle) sum += values[agent][g];
  return sum;
}

Rat Instance::total_value(int agent) const {
  Rat sum = 0;
  for (const Rat& v : values[agent]) sum += v;
  return sum;
}

Instance make_instance(int num_agents, int num_items,
                       std::vector<std::vector<Rat>> values, bool normalized) {
  if (num_agents < 1) throw PreconditionError("instance needs at least one agent");
  if (num_items < 0) throw PreconditionError("negative item count");
  if (static_cast<int>(values.size()) != num_agents) {
    throw PreconditionError("value matrix has " + std::to_string(values.size()) +
                            " rows, expected " + std::to_string(num_agents));
  }
  for (int i = 0; i < num_agents; ++i) {
    if (static_cast<int>(values[i].size()) != num_items) {
      throw PreconditionError("value row " + std::to_string(i + 1) + " has " +
                              std::to_string(values[i].size()) +
                              " entries, expected " + std::to_string(num_items));
    }
  }
  Instance inst;
  inst.num_agents = num_agents;
  inst.num_items = num_items;
  inst.normalized = normalized;
  inst.values = std::move(values);
  return inst;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  if (static_cast<int>(inst.values.size()) != inst.num_agents) {
    report.issues.push_back({-1, -1, "value matrix row count does not match agent count"});
    return report;
  }
  for (int i = 0; i < inst.num_agents; ++i) {
    if (static_cast<int>(inst.values[i].size()) != inst.num_items) {
      report.issues.push_back({i, -1, "row length does not match item count"});
      continue;
    }
    Rat sum = 0;
    for (int g = 0; g < inst.num_items; ++g) {
      const Rat& v = inst.values[i][g];
      if (v < 0) {
        report.issues.push_back({i, g, "negative value " + format_rat(v)});
      }
      sum += v;
    }
    if (inst.normalized && sum != 1) {
      report.issues.push_back(
          {i, -1, "normalized flag set but row sums to " + format_rat(sum)});
    }
  }
  return report;
}

Instance normalize(const Instance& inst) {
  Instance out = inst;
  for (int i = 0; i < inst.num_agents; ++i) {
    const Rat sum = inst.total_value(i);
    if (sum <= 0) {
      throw PreconditionError("cannot normalize: agent " + std::to_string(i + 1) +
                              " values the full item set at " + format_rat(sum));
    }
    for (Rat& v : out.values[i]) v /= sum;
  }
  out.normalized = true;
  return out;
}

Allocation empty_allocation(int num_agents) {
  Allocation alloc;
  alloc.bundles.resize(num_agents);
  return alloc;
}

void sort_bundles(Allocation& alloc) {
  for (auto& bundle : alloc.bundles) std::sort(bundle.begin(), bundle.end());
}

void require_bundle_shape(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.num_agents) {
    throw PreconditionError("allocation has " + std::to_string(alloc.bundles.size()) +
                            " bundles, expected " + std::to_string(inst.num_agents));
  }
  std::vector<bool> seen(inst.num_items, false);
  for (const auto& bundle : alloc.bundles) {
    int prev = -1;
    for (int g : bundle) {
      if (g < 0 || g >= inst.num_items) {
        throw PreconditionError("bundle item index " + std::to_string(g + 1) +
                                " out of range");
      }
      if (g <= prev) {
        throw PreconditionError("bundle is not strictly ascending");
      }
      if (seen[g]) {
        throw PreconditionError("item " + std::to_string(g + 1) +
                                " appears in more than one bundle");
      }
      seen[g] = true;
      prev = g;
    }
  }
}

void require_complete(const Instance& inst, const Allocation& alloc) {
  require_bundle_shape(inst, alloc);
  std::size_t assigned = 0;
  for (const auto& bundle : alloc.bundles) assigned += bundle.size();
  if (assigned != static_cast<std::size_t>(inst.num_items)) {
    throw PreconditionError("allocation covers " + std::to_string(assigned) +
                            " of " + std::to_string(inst.num_items) + " items");
  }
}

bool is_complete_partition(const Instance& inst, const Allocation& alloc) {
  try {
    require_complete(inst, alloc);
  } catch (const PreconditionError&) {
    return false;
  }
  return true;
}

void require_nonnegative(const Instance& inst) {
  for (int i = 0; i < inst.num_agents; ++i) {
    for (int g = 0; g < inst.num_items; ++g) {
      if (inst.values[i][g] < 0) {
        throw PreconditionError("negative valuation for agent " +
                                std::to_string(i + 1) + ", item " +
                                std::to_string(g + 1));
      }
    }
  }
}

}  // namespace fairdiv
