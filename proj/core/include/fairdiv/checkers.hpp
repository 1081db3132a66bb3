#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

enum class Envy { NoEnvy, Envy, StrongEnvy };

struct EnvyResult {
  Envy kind = Envy::NoEnvy;
  // Set only for Envy: the highest-value item of the envied bundle under the
  // observer's valuation, lowest index on ties. Removing it cures the envy.
  std::optional<int> witness;
};

// How agent `observer` relates to agent `owner`'s bundle:
//   NoEnvy      v_i(A_i) >= v_i(A_j)
//   Envy        envy exists but one removal cures it
//   StrongEnvy  v_i(A_i) < v_i(A_j \ {g}) for every g in A_j
// An empty bundle is never envied. Works on partial allocations.
EnvyResult envy_pair(const Instance&, const Allocation&, int observer, int owner);

enum class WitnessStatus { NoneNeeded, Witness, Fail };

struct PairWitness {
  int observer = 0;
  int owner = 0;
  WitnessStatus status = WitnessStatus::NoneNeeded;
  std::optional<int> item;
};

struct Ef1Report {
  Rat alpha;
  bool satisfied = true;
  std::vector<PairWitness> pairs;  // ordered by (observer, owner)
};

// α-approximate EF1: for every ordered pair (i,j) with A_j nonempty, some
// g in A_j has v_i(A_i) >= α·v_i(A_j \ {g}); empty bundles satisfy the pair
// vacuously. α must lie in (0,1]. At α = 1 this is exactly EF1 and the
// per-pair statuses agree with envy_pair.
Ef1Report is_alpha_ef1(const Instance&, const Allocation&, const Rat& alpha);

Ef1Report is_ef1(const Instance&, const Allocation&);

// Σ_i v_i(A_i) for a complete allocation, exact.
Rat social_welfare(const Instance&, const Allocation&);

}  // namespace fairdiv
