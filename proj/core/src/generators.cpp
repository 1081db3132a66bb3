#include "fairdiv/generators.hpp"

#include <algorithm>
#include <random>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

std::string brace_pair(int u, int v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

void require_positive_elements(const PartitionInstance& p) {
  if (p.elements.empty()) {
    throw PreconditionError("partition instance has no elements");
  }
  for (const Rat& e : p.elements) {
    if (e <= 0) throw PreconditionError("partition elements must be positive");
  }
}

void require_valid_edges(const GraphInstance& g) {
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loops are not supported");
  }
}

}  // namespace

Rat PartitionInstance::total() const {
  Rat sum = 0;
  for (const Rat& e : elements) sum += e;
  return sum;
}

std::optional<std::vector<int>> find_subset_with_sum(
    const std::vector<Rat>& elements, const Rat& target, int search_cap) {
  const int n = static_cast<int>(elements.size());
  if (n > search_cap) {
    throw CapacityError("subset-sum search limited to " +
                        std::to_string(search_cap) + " elements");
  }
  std::optional<std::vector<int>> best;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Rat sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) sum += elements[i];
    }
    if (sum != target) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) subset.push_back(i);
    }
    if (!best || subset < *best) best = std::move(subset);
  }
  return best;
}

GeneratedInstance gen_two_agent_partition(const PartitionInstance& p,
                                          const Rat& C) {
  require_positive_elements(p);
  if (p.total() != 2) {
    throw PreconditionError("element sum must be exactly 2, got " +
                            format_rat(p.total()));
  }
  if (C <= 0) throw PreconditionError("C must be positive");

  const int ell = static_cast<int>(p.elements.size());
  const int m = ell + 3;
  const Rat third = (2 * C + 1) / 3;

  std::vector<std::vector<Rat>> values(2, std::vector<Rat>(m));
  for (int w = 0; w < ell; ++w) {
    values[0][w] = p.elements[w];
    values[1][w] = p.elements[w] / 2;
  }
  values[0][ell] = C;
  values[0][ell + 1] = C;
  values[0][ell + 2] = 0;
  values[1][ell] = third;
  values[1][ell + 1] = third;
  values[1][ell + 2] = third;

  GeneratedInstance out;
  out.instance = make_instance(2, m, std::move(values));
  out.agent_labels = {"agent_1", "agent_2"};
  for (int w = 0; w < ell; ++w) out.item_labels.push_back("e_" + std::to_string(w + 1));
  out.item_labels.insert(out.item_labels.end(), {"big_1", "big_2", "tail"});
  out.metadata["family"] = "partition2";
  out.metadata["ell"] = std::to_string(ell);
  out.metadata["C"] = format_rat(C);
  out.metadata["row_sum"] = format_rat(2 * C + 2);
  out.metadata["yes_welfare"] = format_rat((16 * C + 11) / 6);

  if (auto half = find_subset_with_sum(p.elements, Rat(1))) {
    Allocation cert = empty_allocation(2);
    std::vector<bool> taken(m, false);
    for (int w : *half) {
      cert.bundles[0].push_back(w);
      taken[w] = true;
    }
    cert.bundles[0].push_back(ell);
    cert.bundles[0].push_back(ell + 1);
    taken[ell] = taken[ell + 1] = true;
    for (int g = 0; g < m; ++g) {
      if (!taken[g]) cert.bundles[1].push_back(g);
    }
    sort_bundles(cert);
    out.certificate = std::move(cert);
    out.metadata["yes_instance"] = "1";
  } else {
    out.metadata["yes_instance"] = "0";
  }
  return out;
}

GeneratedInstance gen_constant_n_partition(const PartitionInstance& p, int n) {
  require_positive_elements(p);
  if (n < 3) throw PreconditionError("this family needs at least three agents");

  const int ell = static_cast<int>(p.elements.size());
  const int m = ell + n - 1;
  const Rat x = p.total() / 2;
  const Rat big = (n * x + x) / 2;

  std::vector<std::vector<Rat>> values(n, std::vector<Rat>(m, Rat(0)));
  values[0][ell] = big;
  values[0][ell + 1] = big;
  for (int i = 1; i < n; ++i) {
    for (int w = 0; w < ell; ++w) values[i][w] = p.elements[w];
    for (int g = ell; g < m; ++g) values[i][g] = x;
  }

  GeneratedInstance out;
  out.instance = make_instance(n, m, std::move(values));
  for (int i = 0; i < n; ++i) out.agent_labels.push_back("agent_" + std::to_string(i + 1));
  for (int w = 0; w < ell; ++w) out.item_labels.push_back("e_" + std::to_string(w + 1));
  for (int g = ell; g < m; ++g) out.item_labels.push_back("f_" + std::to_string(g - ell + 1));
  out.metadata["family"] = "constantn";
  out.metadata["ell"] = std::to_string(ell);
  out.metadata["x"] = format_rat(x);
  out.metadata["row_sum"] = format_rat(n * x + x);
  out.metadata["yes_welfare"] = format_rat(2 * n * x);
  out.metadata["no_welfare_bound"] = format_rat((3 * n * x + x) / 2);

  if (auto half = find_subset_with_sum(p.elements, x)) {
    Allocation cert = empty_allocation(n);
    cert.bundles[0] = {ell, ell + 1};
    std::vector<bool> in_half(ell, false);
    for (int w : *half) in_half[w] = true;
    for (int w = 0; w < ell; ++w) {
      cert.bundles[in_half[w] ? 1 : 2].push_back(w);
    }
    for (int a = 3; a < n; ++a) cert.bundles[a] = {ell + a - 1};
    sort_bundles(cert);
    out.certificate = std::move(cert);
    out.metadata["yes_instance"] = "1";
  } else {
    out.metadata["yes_instance"] = "0";
  }
  return out;
}

GeneratedInstance gen_clique_family(const PartitionInstance& p, int n,
                                    const Rat& eps) {
  require_positive_elements(p);
  if (eps <= 0) throw PreconditionError("eps must be positive");
  if (p.total() != 2 * eps) {
    throw PreconditionError("element sum must be exactly 2*eps, got " +
                            format_rat(p.total()));
  }

  // t = ceil(n^{1/7}),  k = floor(1/2 + sqrt(4n/t - 3)/2), both exactly.
  int t = 1;
  while (true) {
    long long pow7 = 1;
    for (int i = 0; i < 7; ++i) pow7 *= t;
    if (pow7 >= n) break;
    ++t;
  }
  int k = 0;
  while (static_cast<long long>(t) * (2 * (k + 1) - 1) * (2 * (k + 1) - 1) +
             3LL * t <=
         4LL * n) {
    ++k;
  }
  if (k < 2) {
    throw PreconditionError("n too small for the clique construction (k < 2)");
  }

  const int ell = static_cast<int>(p.elements.size());
  const int edges_per_clique = k * (k - 1) / 2;
  const int normal_count = t * (k * k - k);  // two agents per clique edge
  const int dummy_count = n - t * (k * k - k + 1);
  const Rat x = (1 + Rat(normal_count - 2) * eps) / (normal_count + 2);

  const int clique_base = 0;
  const int partition_base = t * k;
  const int pool_base = partition_base + t * edges_per_clique * ell;
  const int dummy_base = pool_base + normal_count;
  const int m = dummy_base + dummy_count;

  std::vector<std::pair<int, int>> clique_edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) clique_edges.emplace_back(u, v);
  }

  GeneratedInstance out;
  std::vector<std::vector<Rat>> values(n, std::vector<Rat>(m, Rat(0)));

  // Agents: supers 0..t-1, then per clique two agents per edge, then dummies.
  for (int j = 0; j < t; ++j) {
    out.agent_labels.push_back("s_" + std::to_string(j + 1));
    for (int u = 0; u < k; ++u) {
      values[j][clique_base + j * k + u] = make_rat(1, k);
    }
  }
  for (int j = 0; j < t; ++j) {
    for (int e = 0; e < edges_per_clique; ++e) {
      const auto [u, v] = clique_edges[e];
      for (int d = 0; d < 2; ++d) {
        const int agent = t + j * 2 * edges_per_clique + 2 * e + d;
        const int a = d == 0 ? u : v;
        const int b = d == 0 ? v : u;
        // Normal agents are visited in ascending index order.
        out.agent_labels.push_back("a_(" + std::to_string(a + 1) + "," +
                                   std::to_string(b + 1) + ")^(" +
                                   std::to_string(j + 1) + ")");
        values[agent][clique_base + j * k + u] = x;
        values[agent][clique_base + j * k + v] = x;
        const int group_start = partition_base + (j * edges_per_clique + e) * ell;
        for (int w = 0; w < ell; ++w) {
          values[agent][group_start + w] = p.elements[w];
        }
        for (int q = 0; q < normal_count; ++q) {
          values[agent][pool_base + q] = x - eps;
        }
      }
    }
  }
  for (int d = 0; d < dummy_count; ++d) {
    const int agent = t + normal_count + d;
    out.agent_labels.push_back("dummy_" + std::to_string(d + 1));
    for (int q = 0; q < dummy_count; ++q) {
      values[agent][dummy_base + q] = make_rat(1, dummy_count);
    }
  }

  for (int j = 0; j < t; ++j) {
    for (int u = 0; u < k; ++u) {
      out.item_labels.push_back("c_" + std::to_string(u + 1) + "^(" +
                                std::to_string(j + 1) + ")");
    }
  }
  for (int j = 0; j < t; ++j) {
    for (int e = 0; e < edges_per_clique; ++e) {
      const auto [u, v] = clique_edges[e];
      for (int w = 0; w < ell; ++w) {
        out.item_labels.push_back("p_" + std::to_string(w + 1) + "^(" +
                                  std::to_string(j + 1) + ")," + brace_pair(u, v));
      }
    }
  }
  for (int q = 0; q < normal_count; ++q) {
    out.item_labels.push_back("q_" + std::to_string(q + 1));
  }
  for (int d = 0; d < dummy_count; ++d) {
    out.item_labels.push_back("d_" + std::to_string(d + 1));
  }

  out.instance = make_instance(n, m, std::move(values));
  out.metadata["family"] = "clique";
  out.metadata["t"] = std::to_string(t);
  out.metadata["k"] = std::to_string(k);
  out.metadata["x"] = format_rat(x);
  out.metadata["eps"] = format_rat(eps);
  out.metadata["ell"] = std::to_string(ell);
  out.metadata["dummy_count"] = std::to_string(dummy_count);
  const Rat yes_welfare = t + normal_count * x;
  out.metadata["yes_welfare"] =
      format_rat(dummy_count > 0 ? yes_welfare + 1 : yes_welfare);

  if (auto half = find_subset_with_sum(p.elements, eps)) {
    Allocation cert = empty_allocation(n);
    for (int j = 0; j < t; ++j) {
      for (int u = 0; u < k; ++u) cert.bundles[j].push_back(clique_base + j * k + u);
    }
    std::vector<bool> in_half(ell, false);
    for (int w : *half) in_half[w] = true;
    for (int j = 0; j < t; ++j) {
      for (int e = 0; e < edges_per_clique; ++e) {
        const int group_start = partition_base + (j * edges_per_clique + e) * ell;
        for (int d = 0; d < 2; ++d) {
          const int agent = t + j * 2 * edges_per_clique + 2 * e + d;
          const int pool_index = j * 2 * edges_per_clique + 2 * e + d;
          cert.bundles[agent].push_back(pool_base + pool_index);
          for (int w = 0; w < ell; ++w) {
            if (in_half[w] == (d == 0)) {
              cert.bundles[agent].push_back(group_start + w);
            }
          }
        }
      }
    }
    for (int d = 0; d < dummy_count; ++d) {
      cert.bundles[t + normal_count + d].push_back(dummy_base + d);
    }
    sort_bundles(cert);
    out.certificate = std::move(cert);
    out.metadata["yes_instance"] = "1";
  } else {
    out.metadata["yes_instance"] = "0";
  }
  return out;
}

GeneratedInstance gen_indset_family(const GraphInstance& g,
                                    const std::vector<int>& independent_set) {
  require_valid_edges(g);
  const int k = g.vertex_count;
  if (k < 1) throw PreconditionError("graph needs at least one vertex");
  if (g.edges.empty()) {
    throw PreconditionError("cannot pad an empty edge list");
  }

  // The construction requires more edges than twice the vertices; repeat the
  // edge list until that holds.
  std::vector<std::pair<int, int>> edges = g.edges;
  const int original = static_cast<int>(edges.size());
  int next = 0;
  while (static_cast<int>(edges.size()) <= 2 * k) {
    edges.push_back(edges[next % original]);
    ++next;
  }
  const int ell = static_cast<int>(edges.size());

  const int n = k * (ell + 1);
  const int m = 2 * k * k;
  const Rat tau = make_rat(2, static_cast<long>(k) * k);
  const Rat common = (1 - tau) / (static_cast<long>(k) * k);

  std::vector<std::vector<Rat>> values(n, std::vector<Rat>(m, Rat(0)));
  GeneratedInstance out;
  out.agent_labels.resize(n);
  for (int j = 0; j < k; ++j) {
    const int special = j * (ell + 1) + ell;
    out.agent_labels[special] = "s^(" + std::to_string(j + 1) + ")";
    for (int u = 0; u < k; ++u) values[special][j * k + u] = make_rat(1, k);
    for (int i = 0; i < ell; ++i) {
      const int agent = j * (ell + 1) + i;
      out.agent_labels[agent] =
          "a_" + std::to_string(i + 1) + "^(" + std::to_string(j + 1) + ")";
      const auto [u1, u2] = edges[i];
      values[agent][j * k + u1] = tau / 2;
      values[agent][j * k + u2] = tau / 2;
      for (int c = 0; c < k * k; ++c) values[agent][k * k + c] = common;
    }
  }
  for (int j = 0; j < k; ++j) {
    for (int u = 0; u < k; ++u) {
      out.item_labels.push_back("b_" + std::to_string(u + 1) + "^(" +
                                std::to_string(j + 1) + ")");
    }
  }
  for (int c = 0; c < k * k; ++c) {
    out.item_labels.push_back("c_" + std::to_string(c + 1));
  }

  out.instance = make_instance(n, m, std::move(values), /*normalized=*/true);
  out.metadata["family"] = "indset";
  out.metadata["k"] = std::to_string(k);
  out.metadata["ell"] = std::to_string(ell);
  out.metadata["padded_edges"] = std::to_string(ell - original);
  out.metadata["tau"] = format_rat(tau);
  out.metadata["soundness"] =
      "if the maximum independent set has size at most t, every allocation "
      "has social welfare at most t+2";

  if (!independent_set.empty()) {
    std::vector<bool> in_set(k, false);
    for (int u : independent_set) {
      if (u < 0 || u >= k) throw PreconditionError("independent set vertex out of range");
      if (in_set[u]) throw PreconditionError("independent set repeats a vertex");
      in_set[u] = true;
    }
    for (const auto& [u, v] : edges) {
      if (in_set[u] && in_set[v]) {
        throw PreconditionError("supplied vertex set is not independent");
      }
    }

    Allocation cert = empty_allocation(n);
    std::vector<bool> taken(m, false);
    for (int j = 0; j < k; ++j) {
      const int special = j * (ell + 1) + ell;
      for (int u = 0; u < k; ++u) {
        if (in_set[u]) {
          cert.bundles[special].push_back(j * k + u);
          taken[j * k + u] = true;
        }
      }
    }
    // Hand every remaining item to a distinct edge agent; there are more
    // edge agents than items.
    int agent_cursor = 0;
    for (int item = 0; item < m; ++item) {
      if (taken[item]) continue;
      while (agent_cursor % (ell + 1) == ell) ++agent_cursor;  // skip specials
      cert.bundles[agent_cursor].push_back(item);
      ++agent_cursor;
    }
    sort_bundles(cert);
    out.certificate = std::move(cert);
    out.metadata["independent_set_size"] =
        std::to_string(independent_set.size());
  }
  return out;
}

GeneratedInstance gen_bicriteria_hardness(const GraphInstance& g,
                                          const Rat& delta) {
  require_valid_edges(g);
  if (delta <= 0) throw PreconditionError("delta must be positive");
  if (g.vertex_count < 1) throw PreconditionError("graph needs at least one vertex");

  const int m = g.vertex_count;
  const int n = static_cast<int>(g.edges.size()) + 1;
  std::vector<std::vector<Rat>> values(n, std::vector<Rat>(m, Rat(0)));
  for (int item = 0; item < m; ++item) values[0][item] = 1;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    values[e + 1][g.edges[e].first] = delta;
    values[e + 1][g.edges[e].second] = delta;
  }

  GeneratedInstance out;
  out.instance = make_instance(n, m, std::move(values));
  out.agent_labels.push_back("super");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.agent_labels.push_back("edge_" + brace_pair(g.edges[e].first,
                                                    g.edges[e].second));
  }
  for (int item = 0; item < m; ++item) {
    out.item_labels.push_back("v_" + std::to_string(item + 1));
  }
  out.metadata["family"] = "bicriteria-hardness";
  out.metadata["delta"] = format_rat(delta);
  out.metadata["predicate"] =
      "any allocation that is alpha-approximate EF1 for some alpha > 0 "
      "leaves no edge fully inside the super agent's bundle";
  return out;
}

bool super_bundle_edge_free(const GraphInstance& g, const Allocation& alloc) {
  std::vector<bool> held(g.vertex_count, false);
  for (int item : alloc.bundles.at(0)) held.at(item) = true;
  for (const auto& [u, v] : g.edges) {
    if (held[u] && held[v]) return false;
  }
  return true;
}

Instance gen_random(int num_agents, int num_items, long value_bound,
                    unsigned long long seed, bool normalize_rows) {
  if (num_agents < 1 || num_items < 1) {
    throw PreconditionError("random instances need at least one agent and item");
  }
  if (value_bound < 0) throw PreconditionError("value bound must be nonnegative");

  std::mt19937_64 engine(seed);
  std::vector<std::vector<Rat>> values(num_agents, std::vector<Rat>(num_items));
  for (int i = 0; i < num_agents; ++i) {
    for (int g = 0; g < num_items; ++g) {
      values[i][g] = Rat(static_cast<long>(
          engine() % static_cast<unsigned long long>(value_bound + 1)));
    }
  }
  Instance inst = make_instance(num_agents, num_items, std::move(values));
  return normalize_rows ? normalize(inst) : inst;
}

}  // namespace fairdiv
