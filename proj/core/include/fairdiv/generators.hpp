#pragma once

#include <map>
#include <optional>
#include <utility>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// A partition-problem seed: positive numbers to be split into equal halves.
struct PartitionInstance {
  std::vector<Rat> elements;
  Rat total() const;
};

// Undirected graph seed; multi-edges allowed, self-loops rejected by the
// generators. Vertices are 0-based internally.
struct GraphInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// A generated instance together with its optional certificate allocation
// (the explicit EF1 allocation a yes-instance admits), naming labels for
// test readability, and free-form metadata. The instance itself stays a
// plain matrix.
struct GeneratedInstance {
  Instance instance;
  std::optional<Allocation> certificate;
  std::vector<std::string> agent_labels;
  std::vector<std::string> item_labels;
  std::map<std::string, std::string> metadata;
};

// Lexicographically smallest index subset whose element sum is exactly
// `target`; nullopt when none exists. Exhaustive, capped element count.
std::optional<std::vector<int>> find_subset_with_sum(
    const std::vector<Rat>& elements, const Rat& target, int search_cap = 26);

// Two agents, ℓ+3 items: the partition elements, two items worth C to agent
// 1, and one item worth nothing to agent 1; agent 2 values the elements at
// half and each of the last three items at (2C+1)/3. Both rows sum to 2C+2.
// Requires element sum exactly 2. When an equal split exists the certificate
// allocation with welfare (16C+11)/6 is attached.
GeneratedInstance gen_two_agent_partition(const PartitionInstance&, const Rat& C);

// n >= 3 agents, ℓ+n-1 items. Agent 1 values only two dedicated items at
// (nx+x)/2 each; every other agent values the partition elements plus x for
// each of the n-1 trailing items, where x is half the element sum. Every row
// sums to nx+x. Yes-instances carry a certificate of welfare 2nx.
GeneratedInstance gen_constant_n_partition(const PartitionInstance&, int n);

// The clique construction: t = ceil(n^{1/7}) super agents over t cliques of
// k vertices, two normal agents per clique edge, pool items shared by all
// normal agents at x-ε, one partition-item group per edge, and dummy
// agents/items filling up to n. Requires element sum exactly 2ε. Yes
// certificates reach welfare t + t(k²-k)x plus 1 when dummies exist.
GeneratedInstance gen_clique_family(const PartitionInstance&, int n,
                                    const Rat& eps);

// The independent-set construction: k copies of the graph, each with ℓ edge
// agents and one special agent valuing its own k-item group at 1/k; edge
// agents value their two endpoint items at τ/2 and every common item at
// (1-τ)/k², τ = 2/k². Edge lists with ℓ <= 2k are padded by repeating edges
// (recorded in metadata). When a known independent set is supplied, the
// completeness certificate allocation (welfare >= |I|) is attached.
GeneratedInstance gen_indset_family(const GraphInstance&,
                                    const std::vector<int>& independent_set = {});

// One item per vertex; a super agent valuing every item at 1 and one agent
// per edge valuing its endpoints at δ. Any allocation that is α-approximate
// EF1 for any α > 0 keeps every edge split away from the super agent's
// bundle; super_bundle_edge_free checks that predicate.
GeneratedInstance gen_bicriteria_hardness(const GraphInstance&, const Rat& delta);

bool super_bundle_edge_free(const GraphInstance&, const Allocation&);

// Uniform integer values in [0, value_bound] from a seeded mt19937_64;
// identical seeds give identical instances on every platform.
Instance gen_random(int num_agents, int num_items, long value_bound,
                    unsigned long long seed, bool normalize_rows = false);

}  // namespace fairdiv
