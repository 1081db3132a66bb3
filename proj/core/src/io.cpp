#include "fairdiv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return Json(value.get_num().get_si());
  }
  return Json(format_rat(value));
}

Rat json_to_rat(const Json& node, const std::string& where) {
  if (node.is_number_integer()) {
    return Rat(static_cast<long>(node.get<long long>()));
  }
  if (node.is_string()) {
    try {
      return parse_rat(node.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (node.is_number_float()) {
    throw ParseError(where + ": floating point values are not accepted; use "
                             "integers or \"p/q\" strings");
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());  // message carries line and column
  }
}

const Json& require_field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("missing required field '") + name + "'");
  }
  return *it;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path.string());
  out << text;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("instance document must be an object");

  const Json& agents_node = require_field(doc, "agents");
  const Json& items_node = require_field(doc, "items");
  const Json& normalized_node = require_field(doc, "normalized");
  const Json& values_node = require_field(doc, "values");
  if (!agents_node.is_number_integer()) throw ParseError("'agents' must be an integer");
  if (!items_node.is_number_integer()) throw ParseError("'items' must be an integer");
  if (!normalized_node.is_boolean()) throw ParseError("'normalized' must be a boolean");
  if (!values_node.is_array()) throw ParseError("'values' must be an array of rows");

  const int n = agents_node.get<int>();
  const int m = items_node.get<int>();
  if (n < 1) throw ParseError("'agents' must be at least 1");
  if (m < 0) throw ParseError("'items' must be nonnegative");
  if (static_cast<int>(values_node.size()) != n) {
    throw ParseError("'values' has " + std::to_string(values_node.size()) +
                     " rows, expected " + std::to_string(n));
  }

  std::vector<std::vector<Rat>> values(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = values_node[i];
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      throw ParseError("values row " + std::to_string(i + 1) + " must be an array of " +
                       std::to_string(m) + " rationals");
    }
    values[i].reserve(m);
    for (int g = 0; g < m; ++g) {
      values[i].push_back(json_to_rat(
          row[g], "values[" + std::to_string(i + 1) + "][" + std::to_string(g + 1) + "]"));
    }
  }
  return make_instance(n, m, std::move(values), normalized_node.get<bool>());
}

std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["agents"] = inst.num_agents;
  doc["items"] = inst.num_items;
  doc["normalized"] = inst.normalized;
  Json rows = Json::array();
  for (const auto& row : inst.values) {
    Json out_row = Json::array();
    for (const Rat& v : row) out_row.push_back(rat_to_json(v));
    rows.push_back(std::move(out_row));
  }
  doc["values"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance_text(read_file(path));
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  write_file(path, serialize_instance(inst));
}

Allocation parse_allocation_text(const std::string& text, int num_agents) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("allocation document must be an object");
  const Json& bundles_node = require_field(doc, "bundles");
  if (!bundles_node.is_array() ||
      static_cast<int>(bundles_node.size()) != num_agents) {
    throw ParseError("'bundles' must be an array of " + std::to_string(num_agents) +
                     " item lists");
  }
  Allocation alloc = empty_allocation(num_agents);
  for (int i = 0; i < num_agents; ++i) {
    const Json& bundle = bundles_node[i];
    if (!bundle.is_array()) {
      throw ParseError("bundle " + std::to_string(i + 1) + " must be an array");
    }
    for (const Json& entry : bundle) {
      if (!entry.is_number_integer()) {
        throw ParseError("bundle " + std::to_string(i + 1) +
                         " must contain 1-based item indices");
      }
      alloc.bundles[i].push_back(entry.get<int>() - 1);
    }
  }
  sort_bundles(alloc);
  return alloc;
}

std::string serialize_allocation(const Allocation& alloc) {
  Json doc;
  Json bundles = Json::array();
  for (const auto& bundle : alloc.bundles) {
    Json out = Json::array();
    for (int g : bundle) out.push_back(g + 1);
    bundles.push_back(std::move(out));
  }
  doc["bundles"] = std::move(bundles);
  return doc.dump(2) + "\n";
}

Allocation load_allocation(const std::filesystem::path& path, int num_agents) {
  return parse_allocation_text(read_file(path), num_agents);
}

void save_allocation(const Allocation& alloc, const std::filesystem::path& path) {
  write_file(path, serialize_allocation(alloc));
}

std::string witness_status_name(WitnessStatus status) {
  switch (status) {
    case WitnessStatus::NoneNeeded: return "none-needed";
    case WitnessStatus::Witness: return "witness";
    case WitnessStatus::Fail: return "fail";
  }
  return "unknown";
}

namespace {

Json ef1_to_json(const Ef1Report& report) {
  Json out;
  out["alpha"] = format_rat(report.alpha);
  out["satisfied"] = report.satisfied;
  Json pairs = Json::array();
  for (const PairWitness& pair : report.pairs) {
    Json entry;
    entry["i"] = pair.observer + 1;
    entry["j"] = pair.owner + 1;
    entry["status"] = witness_status_name(pair.status);
    if (pair.item) {
      entry["item"] = *pair.item + 1;
    } else {
      entry["item"] = nullptr;
    }
    pairs.push_back(std::move(entry));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

}  // namespace

std::string serialize_report(const SolveReport& report, const RoundTrace* trace) {
  Json doc;
  doc["algorithm"] = report.algorithm;
  Json params = Json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  doc["parameters"] = std::move(params);
  Json bundles = Json::array();
  for (const auto& bundle : report.allocation.bundles) {
    Json out = Json::array();
    for (int g : bundle) out.push_back(g + 1);
    bundles.push_back(std::move(out));
  }
  doc["allocation"]["bundles"] = std::move(bundles);
  doc["social_welfare"] = format_rat(report.social_welfare);
  doc["ef1"] = ef1_to_json(report.ef1);
  if (report.alpha_ef1) {
    doc["alpha_ef1"] = ef1_to_json(*report.alpha_ef1);
  }
  if (trace) {
    Json rounds = Json::array();
    for (const auto& round : trace->rounds) {
      Json entries = Json::array();
      for (const RoundAssignment& a : round) {
        Json entry;
        entry["agent"] = a.agent + 1;
        entry["item"] = a.item + 1;
        entry["value"] = format_rat(a.value);
        entries.push_back(std::move(entry));
      }
      rounds.push_back(std::move(entries));
    }
    doc["trace"]["rounds"] = std::move(rounds);
    doc["trace"]["upper_bound"] = format_rat(trace->upper_bound);
  }
  return doc.dump(2) + "\n";
}

void save_report(const SolveReport& report, const std::filesystem::path& path,
                 const RoundTrace* trace) {
  write_file(path, serialize_report(report, trace));
}

}  // namespace fairdiv
