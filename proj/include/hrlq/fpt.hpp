// Exact maximum envy-free matching solvers that are exponential only in
// structural parameters, plus the kernelization for 0/1-quota instances.
#pragma once

#include <utility>
#include <vector>

#include "hrlq/model.hpp"

namespace hrlq {

inline constexpr long long kDefaultBudget = 1LL << 24;

// Enumerates, for every hospital with a lower quota, which subset of its list
// it keeps (sizes between the quotas, no resident claimed twice), extends
// each surviving choice into the remaining capacity, and returns the largest
// feasible envy-free result, ties broken canonically. Exact on any instance.
// InfeasibleError when no feasible envy-free matching exists; BudgetError
// when the enumeration would exceed `budget` seed assignments.
Matching maxefm_enum_lq(const Instance& inst, long long budget = kDefaultBudget);

// Exact solver for 0/1 quotas. Recomputes a stable matching on the surviving
// edges at every node; when some lower quota is still unmet it branches on
// the unfilled hospital's candidates, deleting the edges each choice would
// be envied through. Nodes whose combined matching turns feasible are leaves.
// BudgetError when more than `budget` nodes get explored.
Matching maxefm_branch_sd(const Instance& inst, long long budget = kDefaultBudget);

// Exact solver for 0/1 quotas. Enumerates every way to give each lower-quota
// hospital exactly one resident from its list (residents pairwise distinct)
// and extends each survivor. BudgetError when the assignment count exceeds
// `budget`.
Matching maxefm_enum_rprime(const Instance& inst, long long budget = kDefaultBudget);

struct KernelResult {
    enum class Verdict { Yes, No, Kernel };
    Verdict verdict = Verdict::Kernel;

    Matching witness;  // Yes: a stable, feasible matching of size >= k

    // Kernel: the shrunken instance plus its index maps into the original.
    Instance reduced;
    std::vector<int> residentMap;  // reduced resident -> original resident
    std::vector<int> hospitalMap;  // reduced hospital -> original hospital

    // The matched vertices of the stable matching; they cover every edge.
    std::vector<int> coverResidents;
    std::vector<int> coverHospitals;
    std::vector<std::pair<int, int>> markedEdges;  // kept edges, original ids

    int ell = 0;         // maximum matching size
    int p = 0;           // deepest lower-quota position in any resident list
    int t = 0;           // most quota-free hospitals shared by two residents
    int crossEdges = 0;  // kept edges with exactly one endpoint in the cover
};

// Shrinks a 0/1-quota instance while preserving, for the given size target k
// (in fact for every k at once), whether a feasible envy-free matching of
// size >= k exists. Short-circuits: No when even the stable matching is
// smaller than k, Yes when the stable matching is feasible and large enough.
// Otherwise marks the edges worth keeping (cover-to-cover edges; per cover
// hospital its ell+1 best outside residents; per cover resident its list down
// to the last lower-quota hospital, the quota-free hospitals shared with
// another cover resident, and one best extra edge) and deletes the rest along
// with any isolated vertices.
KernelResult kernelize(const Instance& inst, int k);

}  // namespace hrlq
