// Resident-proposing deferred acceptance, feasibility of stable matchings,
// and the per-hospital occupancy profile that is invariant across them.
#pragma once

#include <cstdint>

#include "hrlq/model.hpp"

namespace hrlq {

// Deferred acceptance with a fixed schedule: proposers dequeue in ascending
// resident index, rejected or evicted residents re-enter at the queue tail.
// Lower quotas are ignored. The result carries no blocking pairs.
Matching stable_matching(const Instance& inst);

// Same algorithm, but the next proposer is drawn from the active set with a
// seeded generator. The matched-resident set and per-hospital counts are
// schedule-invariant; property tests exercise exactly that.
Matching stable_matching_randomized(const Instance& inst, uint64_t seed);

struct StableFeasibility {
    Matching matching;
    bool feasible = false;
    int deficiency = 0;
};

// Feasibility of the stable matching is an instance-level fact: every stable
// matching of an instance fills each hospital to the same level.
StableFeasibility stable_is_feasible(const Instance& inst);

struct RuralProfile {
    std::vector<int> counts;        // per hospital
    std::vector<char> matched;      // per resident
};

RuralProfile rural_hospitals_profile(const Instance& inst);

}  // namespace hrlq
