// Exhaustive ground truth on small inputs. Everything else in the toolkit is
// judged against these solvers, so acceptance at the leaves goes through the
// model checkers verbatim and the search-tree pruning is limited to rules
// that can never cut a surviving leaf.
#pragma once

#include "hrlq/graph.hpp"
#include "hrlq/model.hpp"

namespace hrlq {

// found == false means no matching passed the filter (for the envy-free
// goals: the instance admits no feasible envy-free matching at all).
// Among optima, matching is the canonically smallest witness.
struct OracleBest {
    bool found = false;
    int value = 0;  // matching size, except brute_min_ur_efm: unmatched count
    Matching matching;
};

// Maximum-size feasible envy-free matching.
OracleBest brute_maxefm(const Instance& inst, int max_residents = 9);

// Feasible envy-free matching with the fewest unmatched residents.
OracleBest brute_min_ur_efm(const Instance& inst, int max_residents = 9);

// Maximum-size feasible relaxed stable matching.
OracleBest brute_maxrsm(const Instance& inst, int max_residents = 9);

// Exact minimum vertex cover size / size-k independent set decision.
int brute_vc(const Graph& g, int max_vertices = 10);
bool brute_is(const Graph& g, int k, int max_vertices = 10);

}  // namespace hrlq
