// Envy-free matchings: existence of a feasible one, the exact solver for
// complete-list instances, and threshold-based extension and augmentation.
#pragma once

#include <optional>

#include "hrlq/model.hpp"

namespace hrlq {

// True when every hospital with a positive lower quota ranks all residents.
// Mutual acceptability then puts those hospitals in every resident's list.
bool is_cl_restricted(const Instance& inst);

// Decides whether a feasible envy-free matching exists. Runs deferred
// acceptance on a copy of the instance whose capacities are shrunk to the
// lower quotas (hospitals without one drop out); a feasible envy-free
// matching exists exactly when that run fills every lower quota, and the run
// itself is such a matching, returned in the original id space.
std::optional<Matching> ef_feasible(const Instance& inst);

// Maximum envy-free matching on complete-list instances. Deferred acceptance
// with two counters: d is the total lower-quota shortfall, k the number of
// unmatched residents. Hospitals that have met their lower quota stop growing
// once k == d, which reserves the remaining residents for the hospitals still
// short. Throws PreconditionError off the complete-list class and
// InfeasibleError when the lower quotas sum past the resident count.
// `proposals`, when given, receives the number of proposals made.
Matching maxefm_cl(const Instance& inst, long long* proposals = nullptr);

// resident[h] is the most preferred resident in h's list that strictly
// prefers h to its current assignment, -1 when there is none. Matching
// anyone below the threshold at h would leave that resident envious.
struct ThresholdTable {
    std::vector<int> resident;  // per hospital
};

ThresholdTable threshold_residents(const Instance& inst, const Matching& m);

// Grows a feasible envy-free matching to a maximum one among those containing
// it: unmatched residents are matched into the remaining capacity, kept
// strictly above the envy threshold of every hospital they enter. The input
// must be feasible and envy-free (PreconditionError otherwise).
Matching extend_to_max_ef(const Instance& inst, const Matching& m);

// Repeatedly deletes edges whose use could create envy (edges below a
// hospital's threshold, and demotions of matched residents), applies one
// augmenting path, and recomputes, until no augmenting path remains. The
// result is feasible, envy-free and maximal; when quotas are 0/1 and resident
// lists have length at most two it is maximum. The seed defaults to
// ef_feasible's output (InfeasibleError when there is none); an explicit seed
// must be feasible and envy-free.
Matching maximal_ef_augment(const Instance& inst);
Matching maximal_ef_augment(const Instance& inst, const Matching& m0);

}  // namespace hrlq
