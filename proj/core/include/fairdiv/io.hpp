#pragma once

#include <filesystem>
#include <string>

#include "fairdiv/report.hpp"
#include "fairdiv/roundrobin.hpp"

namespace fairdiv {

// Instance documents carry `agents`, `items`, `normalized` and `values`
// (n rows of m rationals, each either an integer or a "p/q" string).
// Allocation documents carry `bundles`, n lists of 1-based item indices.
// Serialization is canonical: fixed field order, reduced rationals, bare
// integers where the denominator is 1, so parse → serialize → parse is a
// fixed point.

Instance parse_instance_text(const std::string& text);
std::string serialize_instance(const Instance&);
Instance load_instance(const std::filesystem::path&);
void save_instance(const Instance&, const std::filesystem::path&);

Allocation parse_allocation_text(const std::string& text, int num_agents);
std::string serialize_allocation(const Allocation&);
Allocation load_allocation(const std::filesystem::path&, int num_agents);
void save_allocation(const Allocation&, const std::filesystem::path&);

// The optional trace (round-robin runs) is embedded as a `trace` object.
std::string serialize_report(const SolveReport&, const RoundTrace* trace = nullptr);
void save_report(const SolveReport&, const std::filesystem::path&,
                 const RoundTrace* trace = nullptr);

std::string witness_status_name(WitnessStatus);

}  // namespace fairdiv
