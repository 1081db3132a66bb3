#include "fairdiv/checkers.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

struct BundleScan {
  Rat total = 0;
  int best_item = -1;  // highest observer value, lowest index on ties
  Rat best_value = 0;
};

BundleScan scan_bundle(const Instance& inst, int observer,
                       std::span<const int> bundle) {
  BundleScan scan;
  for (int g : bundle) {
    const Rat& v = inst.value(observer, g);
    scan.total += v;
    if (scan.best_item < 0 || v > scan.best_value) {
      scan.best_item = g;
      scan.best_value = v;
    }
  }
  return scan;
}

}  // namespace

EnvyResult envy_pair(const Instance& inst, const Allocation& alloc, int observer,
                     int owner) {
  if (observer == owner) throw PreconditionError("envy_pair needs distinct agents");
  require_bundle_shape(inst, alloc);
  if (alloc.bundles[owner].empty()) return {Envy::NoEnvy, std::nullopt};

  const Rat own = inst.bundle_value(observer, alloc.bundles[observer]);
  const BundleScan other = scan_bundle(inst, observer, alloc.bundles[owner]);
  if (own >= other.total) return {Envy::NoEnvy, std::nullopt};
  if (own >= other.total - other.best_value) {
    return {Envy::Envy, other.best_item};
  }
  return {Envy::StrongEnvy, std::nullopt};
}

Ef1Report is_alpha_ef1(const Instance& inst, const Allocation& alloc,
                       const Rat& alpha) {
  if (!(alpha > 0 && alpha <= 1)) {
    throw PreconditionError("alpha must lie in (0,1], got " + format_rat(alpha));
  }
  require_bundle_shape(inst, alloc);

  Ef1Report report;
  report.alpha = alpha;
  for (int i = 0; i < inst.num_agents; ++i) {
    const Rat own = inst.bundle_value(i, alloc.bundles[i]);
    for (int j = 0; j < inst.num_agents; ++j) {
      if (i == j) continue;
      PairWitness pair;
      pair.observer = i;
      pair.owner = j;
      if (alloc.bundles[j].empty()) {
        pair.status = WitnessStatus::NoneNeeded;
      } else {
        const BundleScan other = scan_bundle(inst, i, alloc.bundles[j]);
        if (own >= alpha * other.total) {
          pair.status = WitnessStatus::NoneNeeded;
        } else if (own >= alpha * (other.total - other.best_value)) {
          pair.status = WitnessStatus::Witness;
          pair.item = other.best_item;
        } else {
          pair.status = WitnessStatus::Fail;
          report.satisfied = false;
        }
      }
      report.pairs.push_back(pair);
    }
  }
  return report;
}

Ef1Report is_ef1(const Instance& inst, const Allocation& alloc) {
  return is_alpha_ef1(inst, alloc, Rat(1));
}

Rat social_welfare(const Instance& inst, const Allocation& alloc) {
  require_complete(inst, alloc);
  Rat sum = 0;
  for (int i = 0; i < inst.num_agents; ++i) {
    sum += inst.bundle_value(i, alloc.bundles[i]);
  }
  return sum;
}

}  // namespace fairdiv
