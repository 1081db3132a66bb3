// Command line front end: solve, check, gen, bench.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 enumeration/state budget exceeded, 1 internal or unexpected failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairdiv/bicriteria.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fptas2.hpp"
#include "fairdiv/generators.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/roundrobin.hpp"

namespace fs = std::filesystem;
using namespace fairdiv;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

// key=value pairs separated by commas; list values use ';' separators,
// e.g. "elements=1;1,C=100" or "edges=1-2;2-3;1-3".
std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> params;
  for (const std::string& token : tokens) {
    for (const std::string& pair : split(token, ',')) {
      if (pair.empty()) continue;
      const auto eq = pair.find('=');
      if (eq == std::string::npos) {
        throw ParseError("malformed parameter '" + pair + "', expected key=value");
      }
      params[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
  }
  return params;
}

std::string take_param(std::map<std::string, std::string>& params,
                       const std::string& key,
                       const std::optional<std::string>& fallback = {}) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw ParseError("missing generator parameter '" + key + "'");
  }
  std::string value = it->second;
  params.erase(it);
  return value;
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError(what + " must be an integer, got '" + text + "'");
  }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const std::string& part : split(text, ';')) {
    if (!part.empty()) out.push_back(parse_rat(part));
  }
  return out;
}

GraphInstance parse_graph(std::map<std::string, std::string>& params) {
  GraphInstance graph;
  graph.vertex_count =
      static_cast<int>(parse_long(take_param(params, "vertices"), "vertices"));
  const std::string edges = take_param(params, "edges", std::string());
  for (const std::string& part : split(edges, ';')) {
    if (part.empty()) continue;
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      throw ParseError("malformed edge '" + part + "', expected u-v");
    }
    const long u = parse_long(part.substr(0, dash), "edge endpoint");
    const long v = parse_long(part.substr(dash + 1), "edge endpoint");
    graph.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return graph;
}

Instance load_validated_instance(const std::string& path) {
  Instance inst = load_instance(path);
  const ValidationReport validation = validate_instance(inst);
  if (!validation.valid()) {
    std::string message = "invalid instance " + path + ":";
    for (const ValidationIssue& issue : validation.issues) {
      message += "\n  ";
      if (issue.agent >= 0) message += "agent " + std::to_string(issue.agent + 1) + ": ";
      if (issue.item >= 0) message += "item " + std::to_string(issue.item + 1) + ": ";
      message += issue.message;
    }
    throw PreconditionError(message);
  }
  return inst;
}

// ---------------------------------------------------------------- solve ----

struct SolveArgs {
  std::string algorithm;
  std::string input;
  std::string output;
  std::string epsilon = "1/10";
  std::optional<long> precision_k;
  long long budget = kDefaultOracleBudget;
  bool trace = false;
};

int run_solve(const SolveArgs& args) {
  const Instance inst = load_validated_instance(args.input);

  std::string serialized;
  if (args.algorithm == "fptas2") {
    SolveReport report = solve_fptas2(inst, parse_rat(args.epsilon));
    serialized = serialize_report(report);
  } else if (args.algorithm == "bicriteria") {
    BicriteriaOptions options;
    options.precision_override = args.precision_k;
    options.state_budget = args.budget;
    SolveReport report = solve_bicriteria(inst, parse_rat(args.epsilon), options);
    serialized = serialize_report(report);
  } else if (args.algorithm == "roundrobin") {
    RoundRobinResult result = solve_greedy_roundrobin(inst);
    serialized =
        serialize_report(result.report, args.trace ? &result.trace : nullptr);
  } else if (args.algorithm == "oracle") {
    OracleResult result = solve_exact(inst, args.budget);
    SolveReport report = make_report(
        inst, result.best, "oracle",
        {{"budget", std::to_string(args.budget)},
         {"ef1_count", std::to_string(result.ef1_count)},
         {"optimum", format_rat(result.optimum)}});
    serialized = serialize_report(report);
  } else {
    throw PreconditionError("unknown algorithm '" + args.algorithm + "'");
  }

  std::ofstream out(args.output);
  if (!out) throw ParseError("cannot write file: " + args.output);
  out << serialized;
  return 0;
}

// ---------------------------------------------------------------- check ----

struct CheckArgs {
  std::string input;
  std::string allocation;
  std::string alpha = "1";
};

const char* envy_name(Envy kind) {
  switch (kind) {
    case Envy::NoEnvy: return "no-envy";
    case Envy::Envy: return "envy";
    case Envy::StrongEnvy: return "strong-envy";
  }
  return "unknown";
}

int run_check(const CheckArgs& args) {
  const Instance inst = load_validated_instance(args.input);
  const Allocation alloc = load_allocation(args.allocation, inst.num_agents);
  require_complete(inst, alloc);

  const Rat alpha = parse_rat(args.alpha);
  for (int i = 0; i < inst.num_agents; ++i) {
    for (int j = 0; j < inst.num_agents; ++j) {
      if (i == j) continue;
      const EnvyResult envy = envy_pair(inst, alloc, i, j);
      std::cout << "pair (" << i + 1 << "," << j + 1 << "): " << envy_name(envy.kind);
      if (envy.witness) std::cout << " witness item " << *envy.witness + 1;
      std::cout << "\n";
    }
  }
  const Ef1Report verdict = is_alpha_ef1(inst, alloc, alpha);
  std::cout << "social welfare: " << format_rat(social_welfare(inst, alloc)) << "\n";
  std::cout << "alpha: " << format_rat(alpha) << "\n";
  std::cout << "alpha-ef1: " << (verdict.satisfied ? "true" : "false") << "\n";
  return 0;
}

// ------------------------------------------------------------------ gen ----

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string output;
  std::string certificate;
  std::optional<unsigned long long> seed;
};

int run_gen(const GenArgs& args) {
  std::map<std::string, std::string> params = parse_params(args.params);

  GeneratedInstance generated;
  if (args.family == "partition2") {
    PartitionInstance p{parse_rat_list(take_param(params, "elements"))};
    const Rat c = parse_rat(take_param(params, "C", std::string("100")));
    generated = gen_two_agent_partition(p, c);
  } else if (args.family == "constantn") {
    PartitionInstance p{parse_rat_list(take_param(params, "elements"))};
    const int n = static_cast<int>(parse_long(take_param(params, "n"), "n"));
    generated = gen_constant_n_partition(p, n);
  } else if (args.family == "clique") {
    PartitionInstance p{parse_rat_list(take_param(params, "elements"))};
    const int n = static_cast<int>(parse_long(take_param(params, "n"), "n"));
    const Rat eps = parse_rat(take_param(params, "epsilon"));
    generated = gen_clique_family(p, n, eps);
  } else if (args.family == "indset") {
    GraphInstance graph = parse_graph(params);
    std::vector<int> certificate_set;
    const std::string given = take_param(params, "indset", std::string());
    for (const std::string& part : split(given, ';')) {
      if (!part.empty()) {
        certificate_set.push_back(
            static_cast<int>(parse_long(part, "independent set vertex") - 1));
      }
    }
    generated = gen_indset_family(graph, certificate_set);
  } else if (args.family == "bicriteria-hardness") {
    GraphInstance graph = parse_graph(params);
    const Rat delta = parse_rat(take_param(params, "delta", std::string("1/100")));
    generated = gen_bicriteria_hardness(graph, delta);
  } else if (args.family == "random") {
    const int n = static_cast<int>(parse_long(take_param(params, "agents"), "agents"));
    const int m = static_cast<int>(parse_long(take_param(params, "items"), "items"));
    const long bound = parse_long(take_param(params, "bound", std::string("20")), "bound");
    unsigned long long seed = args.seed.value_or(0);
    if (auto it = params.find("seed"); it != params.end()) {
      seed = static_cast<unsigned long long>(parse_long(it->second, "seed"));
      params.erase(it);
    }
    const bool normalize_rows =
        take_param(params, "normalized", std::string("0")) == "1";
    generated.instance = gen_random(n, m, bound, seed, normalize_rows);
    generated.metadata["family"] = "random";
    generated.metadata["seed"] = std::to_string(seed);
  } else {
    throw PreconditionError("unknown generator family '" + args.family + "'");
  }

  if (!params.empty()) {
    throw ParseError("unknown generator parameter '" + params.begin()->first + "'");
  }

  save_instance(generated.instance, args.output);
  if (!args.certificate.empty()) {
    if (!generated.certificate) {
      throw PreconditionError(
          "no certificate available: the instance is not a yes-instance");
    }
    save_allocation(*generated.certificate, args.certificate);
  }
  for (const auto& [key, value] : generated.metadata) {
    std::cout << key << ": " << value << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- bench ----

struct BenchArgs {
  std::vector<std::string> algorithms;
  std::string epsilon = "1/10";
  std::string input_dir;
  std::string gen_random_spec;
  std::string seeds;
  std::string output;
  long long budget = kDefaultOracleBudget;
  bool timings = false;
};

struct BenchInstance {
  std::string id;
  Instance instance;
};

std::vector<BenchInstance> collect_instances(const BenchArgs& args) {
  std::vector<BenchInstance> instances;
  if (!args.input_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.input_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      instances.push_back({file.filename().string(), load_validated_instance(file.string())});
    }
  } else if (!args.gen_random_spec.empty()) {
    std::map<std::string, std::string> spec = parse_params({args.gen_random_spec});
    const int n = static_cast<int>(parse_long(take_param(spec, "agents"), "agents"));
    const int m = static_cast<int>(parse_long(take_param(spec, "items"), "items"));
    const long bound = parse_long(take_param(spec, "bound", std::string("20")), "bound");
    if (!spec.empty()) {
      throw ParseError("unknown generator parameter '" + spec.begin()->first + "'");
    }
    const auto colon = args.seeds.find(':');
    if (colon == std::string::npos) {
      throw ParseError("--seeds expects lo:hi, got '" + args.seeds + "'");
    }
    const long lo = parse_long(args.seeds.substr(0, colon), "seed range");
    const long hi = parse_long(args.seeds.substr(colon + 1), "seed range");
    if (lo > hi) throw ParseError("--seeds range is empty");
    for (long seed = lo; seed <= hi; ++seed) {
      char id[32];
      std::snprintf(id, sizeof(id), "random-s%06ld", seed);
      instances.push_back(
          {id, gen_random(n, m, bound, static_cast<unsigned long long>(seed))});
    }
  }
  std::sort(instances.begin(), instances.end(),
            [](const BenchInstance& a, const BenchInstance& b) { return a.id < b.id; });
  return instances;
}

int run_bench(const BenchArgs& args) {
  const Rat epsilon = parse_rat(args.epsilon);
  const std::vector<BenchInstance> instances = collect_instances(args);

  std::ostringstream csv;
  csv << "instance_id,algorithm,epsilon,sw_alg,sw_oracle,ratio,ef1_verdict,"
         "alpha_used,wall_time_ms\n";
  bool violation = false;
  std::vector<std::string> violation_notes;

  for (const BenchInstance& bench : instances) {
    const Instance& inst = bench.instance;

    // Join the exact optimum where the enumeration fits the budget.
    std::optional<OracleResult> oracle;
    long long allocations = 1;
    bool oracle_feasible = true;
    for (int g = 0; g < inst.num_items && oracle_feasible; ++g) {
      if (allocations > args.budget / inst.num_agents) oracle_feasible = false;
      allocations *= inst.num_agents;
    }
    if (oracle_feasible && allocations <= args.budget) {
      oracle = solve_exact(inst, args.budget);
    }

    for (const std::string& algorithm : args.algorithms) {
      const auto started = std::chrono::steady_clock::now();
      Allocation alloc;
      Rat alpha_used = 1;
      if (algorithm == "fptas2") {
        alloc = solve_fptas2(inst, epsilon).allocation;
      } else if (algorithm == "bicriteria") {
        alloc = solve_bicriteria(inst, epsilon).allocation;
        alpha_used = 1 - epsilon;
      } else if (algorithm == "roundrobin") {
        alloc = solve_greedy_roundrobin(inst).report.allocation;
      } else if (algorithm == "oracle") {
        alloc = solve_exact(inst, args.budget).best;
      } else {
        throw PreconditionError("unknown algorithm '" + algorithm + "'");
      }
      const auto elapsed = std::chrono::steady_clock::now() - started;

      const Rat welfare = social_welfare(inst, alloc);
      const Ef1Report verdict = is_alpha_ef1(inst, alloc, alpha_used);

      std::string guarantee_failure;
      if (algorithm == "fptas2") {
        if (!verdict.satisfied) guarantee_failure = "output is not EF1";
        if (oracle && welfare < (1 - epsilon) * oracle->optimum) {
          guarantee_failure = "welfare below (1-eps) x optimum";
        }
      } else if (algorithm == "bicriteria") {
        if (!verdict.satisfied) {
          guarantee_failure = "output is not (1-eps)-approximate EF1";
        }
        if (oracle && welfare < oracle->optimum) {
          guarantee_failure = "welfare below the EF1 optimum";
        }
      } else if (algorithm == "roundrobin") {
        if (!verdict.satisfied) guarantee_failure = "output is not EF1";
        const Rat bound = welfare_upper_bound(inst);
        if (inst.num_agents * welfare < bound) {
          guarantee_failure = "n x welfare below the item-maxima bound";
        }
        if (oracle && bound < oracle->optimum) {
          guarantee_failure = "item-maxima bound below the optimum";
        }
      } else if (algorithm == "oracle") {
        if (!verdict.satisfied) guarantee_failure = "oracle output is not EF1";
      }

      csv << bench.id << ',' << algorithm << ',' << format_rat(epsilon) << ','
          << format_rat(welfare) << ',';
      if (oracle) csv << format_rat(oracle->optimum);
      csv << ',';
      if (oracle && oracle->optimum != 0) csv << format_rat(welfare / oracle->optimum);
      csv << ',' << (verdict.satisfied ? "true" : "false") << ','
          << format_rat(alpha_used) << ',';
      if (args.timings) {
        csv << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
      }
      csv << '\n';

      if (!guarantee_failure.empty()) {
        violation = true;
        const std::string dump = args.output + ".violation-" + bench.id + ".json";
        save_instance(inst, dump);
        violation_notes.push_back(bench.id + " / " + algorithm + ": " +
                                  guarantee_failure + " (instance dumped to " +
                                  dump + ")");
      }
    }
  }

  std::ofstream out(args.output);
  if (!out) throw ParseError("cannot write file: " + args.output);
  out << csv.str();

  for (const std::string& note : violation_notes) {
    std::cerr << "guarantee violation: " << note << "\n";
  }
  return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum social welfare within EF1 allocations"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->add_option("--algorithm", solve_args.algorithm,
                    "fptas2 | bicriteria | roundrobin | oracle")->required();
  solve->add_option("--input", solve_args.input, "instance file")->required();
  solve->add_option("--output", solve_args.output, "report file")->required();
  solve->add_option("--epsilon", solve_args.epsilon, "approximation parameter (rational)");
  solve->add_option("--precision-k", solve_args.precision_k,
                    "override the bicriteria rounding precision K");
  solve->add_option("--budget", solve_args.budget,
                    "oracle enumeration / DP state budget");
  solve->add_flag("--trace", solve_args.trace, "embed the round-robin trace");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "classify envy and verify alpha-EF1");
  check->add_option("--input", check_args.input, "instance file")->required();
  check->add_option("--allocation", check_args.allocation, "allocation file")->required();
  check->add_option("--alpha", check_args.alpha, "approximation factor in (0,1]");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate benchmark instances");
  gen->add_option("--family", gen_args.family,
                  "partition2 | constantn | clique | indset | bicriteria-hardness | random")
      ->required();
  gen->add_option("--params", gen_args.params,
                  "key=value pairs, comma separated; lists use ';'");
  gen->add_option("--output", gen_args.output, "instance file")->required();
  gen->add_option("--certificate", gen_args.certificate,
                  "write the yes-instance certificate allocation here");
  gen->add_option("--seed", gen_args.seed, "seed for the random family");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "cross-validate solvers against the oracle");
  bench->add_option("--algorithms", bench_args.algorithms,
                    "comma separated list of solvers")
      ->required()
      ->delimiter(',');
  bench->add_option("--epsilon", bench_args.epsilon, "approximation parameter");
  bench->add_option("--input-dir", bench_args.input_dir, "directory of instance files");
  bench->add_option("--gen-random", bench_args.gen_random_spec,
                    "random corpus spec, e.g. agents=2,items=8,bound=20");
  bench->add_option("--seeds", bench_args.seeds, "seed range lo:hi for --gen-random");
  bench->add_option("--output", bench_args.output, "CSV output path")->required();
  bench->add_option("--budget", bench_args.budget, "oracle enumeration budget");
  bench->add_flag("--timings", bench_args.timings,
                  "record wall times (off by default to keep output byte-stable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (check->parsed()) return run_check(check_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
