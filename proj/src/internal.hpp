// Helpers shared between solver translation units; not part of the public API.
#pragma once

#include <vector>

#include "hrlq/model.hpp"

namespace hrlq::detail {

// extend_to_max_ef without the input validation. The fpt solvers call this on
// seed assignments that are only gated for envy-freeness afterwards, so the
// input here may be an arbitrary valid matching.
Matching extend_envy_free(const Instance& inst, const Matching& m);

// Maximum bipartite matching by augmenting paths, with a per-hospital
// capacity vector replacing the instance quotas. Returns the resident ->
// hospital assignment (kUnmatched where unused).
std::vector<int> max_matching_assignment(const Instance& inst,
                                         const std::vector<int>& cap);

int max_matching_size(const Instance& inst, const std::vector<int>& cap);

// Deepest 1-based position of a lower-quota hospital in any resident's list
// (0 when no resident lists one).
int deepest_lq_rank(const Instance& inst);

// Largest number of quota-free hospitals any two residents share.
int max_shared_open_hospitals(const Instance& inst);

}  // namespace hrlq::detail
