// Relaxed stable matchings: the minimal feasible seed and the level-based
// deferred acceptance that approximates the maximum relaxed stable matching.
#pragma once

#include "hrlq/model.hpp"

namespace hrlq {

// Feasible matching filling every hospital to exactly its lower quota, found
// by augmenting paths that ignore preferences entirely. InfeasibleError when
// the lower quotas cannot all be met.
Matching minimal_feasible_matching(const Instance& inst);

struct RelaxedResult {
    Matching matching;
    std::vector<int> level;  // per resident: 0 = kept its seed, 1 = proposed
};

// Approximation for the maximum relaxed stable matching, within factor 3/2.
// Seeds with a minimal feasible matching whose residents form level 0, then
// runs deferred acceptance in which a proposer (always level 1) displaces the
// least preferred level-0 assignee of a full hospital regardless of rank; the
// displaced resident turns level 1 and restarts its list. Hospitals full of
// level-1 residents reject by preference as usual. The output is feasible,
// relaxed stable, and never smaller than a stable matching of the instance.
// The seeded overload demands a matching with every load equal to the lower
// quota (PreconditionError otherwise), which pins down the run exactly.
RelaxedResult rsm_approx(const Instance& inst);
RelaxedResult rsm_approx(const Instance& inst, const Matching& m0);

}  // namespace hrlq
