#pragma once

#include <span>
#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// Additive valuation profile: values[i][g] is agent i's value for item g.
// Agents and items are 0-based in memory; file formats and reports are
// 1-based. v_i(S) is by definition the sum of values[i][g] over g in S.
struct Instance {
  int num_agents = 0;
  int num_items = 0;
  bool normalized = false;  // asserts every row sums to exactly 1
  std::vector<std::vector<Rat>> values;

  const Rat& value(int agent, int item) const { return values[agent][item]; }
  Rat bundle_value(int agent, std::span<const int> bundle) const;
  Rat total_value(int agent) const;
};

// Shape-checks the matrix against the declared dimensions.
Instance make_instance(int num_agents, int num_items,
                       std::vector<std::vector<Rat>> values,
                       bool normalized = false);

struct ValidationIssue {
  int agent = -1;  // 0-based, -1 when not agent-specific
  int item = -1;   // 0-based, -1 for row-level issues
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Report-only: flags dimension mismatches, negative entries, and rows whose
// sum is not exactly 1 when the normalized flag is set.
ValidationReport validate_instance(const Instance&);

// Divides every row by its row sum, exactly, and sets the normalized flag.
// Throws PreconditionError when some row sums to zero. Within one agent the
// scaling is uniform, so every comparison v_i(S) vs v_i(T) keeps its verdict.
Instance normalize(const Instance&);

// One bundle per agent, each a strictly ascending list of 0-based item
// indices. A complete allocation partitions the whole item set; partial
// allocations (used mid-search) only need disjointness.
struct Allocation {
  std::vector<std::vector<int>> bundles;
};

Allocation empty_allocation(int num_agents);

// Sorts each bundle ascending; duplicate entries are left for the shape
// check to reject.
void sort_bundles(Allocation&);

// Bundle count, index ranges, per-bundle ordering, and cross-bundle
// disjointness. Completeness not required.
void require_bundle_shape(const Instance&, const Allocation&);

// Shape plus: the bundles cover every item.
void require_complete(const Instance&, const Allocation&);

bool is_complete_partition(const Instance&, const Allocation&);

// Solvers assume nonnegative valuations; their entry points call this.
void require_nonnegative(const Instance&);

}  // namespace fairdiv
