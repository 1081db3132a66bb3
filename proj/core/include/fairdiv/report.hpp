#pragma once

#include <map>
#include <optional>
#include <string>

#include "fairdiv/checkers.hpp"

namespace fairdiv {

// Solver output. Welfare and every fairness verdict are recomputed from the
// instance and allocation by the checkers, never copied from solver state.
struct SolveReport {
  std::string algorithm;
  std::map<std::string, std::string> parameters;
  Allocation allocation;
  Rat social_welfare;
  Ef1Report ef1;                       // recomputed at α = 1
  std::optional<Ef1Report> alpha_ef1;  // additionally recomputed at a relaxed α
};

SolveReport make_report(const Instance&, Allocation allocation,
                        std::string algorithm,
                        std::map<std::string, std::string> parameters);

}  // namespace fairdiv
