// Core data model for the hospital/residents problem with lower quotas:
// instances, matchings, and every property checker the solvers are judged by.
#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hrlq {

// A required input condition was violated (bad instance, bad seed matching,
// solver called outside its supported class of instances).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The instance admits no matching of the requested kind.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration/branching solver exceeded its configured work budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kUnmatched = -1;

// Residents and hospitals are dense indices 0..n-1 / 0..m-1. Preference lists
// are strictly ordered, most preferred first. Rank tables are the inverse
// maps (agent -> position in the list, -1 when unacceptable); they are built
// once by finalize() and every solver relies on them.
struct Instance {
    std::vector<std::vector<int>> rpref;  // resident -> hospitals
    std::vector<std::vector<int>> hpref;  // hospital -> residents
    std::vector<int> lq;                  // lower quotas
    std::vector<int> uq;                  // upper quotas

    std::vector<std::vector<int>> rrank;  // resident -> hospital -> rank
    std::vector<std::vector<int>> hrank;  // hospital -> resident -> rank
    bool ready = false;

    int residents() const { return static_cast<int>(rpref.size()); }
    int hospitals() const { return static_cast<int>(hpref.size()); }
    int edges() const;

    bool acceptable(int r, int h) const { return rrank[r][h] >= 0; }
    // true when r strictly prefers hospital a over current assignment b
    // (b == kUnmatched means unmatched, which every listed hospital beats).
    bool prefers(int r, int a, int b) const {
        if (b == kUnmatched) return true;
        return rrank[r][a] < rrank[r][b];
    }
};

// Partial map resident -> hospital (kUnmatched when unassigned).
struct Matching {
    std::vector<int> at;

    Matching() = default;
    explicit Matching(int n) : at(n, kUnmatched) {}

    int operator[](int r) const { return at[r]; }
    int& operator[](int r) { return at[r]; }
    int residents() const { return static_cast<int>(at.size()); }

    bool operator==(const Matching&) const = default;
};

// Checks the Instance invariants (mutual lists, no duplicates, quota order,
// lower quota within list length). Empty result means valid. Violations are
// data, not failures: each string names the offending entity.
std::vector<std::string> validate_instance(const Instance& inst);

// Builds the rank tables; throws PreconditionError when validation fails.
void finalize(Instance& inst);

// Checks the Matching invariants against an instance (assigned pairs are
// edges, upper quotas respected, vector length matches).
std::vector<std::string> validate_matching(const Instance& inst, const Matching& m);

// Throws PreconditionError unless m is a valid matching of inst.
void require_matching(const Instance& inst, const Matching& m);

int matching_size(const Matching& m);
std::vector<int> unmatched_residents(const Instance& inst, const Matching& m);

// Per-hospital assignment counts.
std::vector<int> hospital_loads(const Instance& inst, const Matching& m);

// Per-hospital assigned residents, each list in the hospital's preference
// order (deterministic regardless of how the matching was produced).
std::vector<std::vector<int>> hospital_assignees(const Instance& inst, const Matching& m);

int deficiency(const Instance& inst, const Matching& m);
bool is_feasible(const Instance& inst, const Matching& m);

// (r,h) is blocking when it is a non-matching edge, r prefers h to its
// assignment, and h is under-subscribed or prefers r to someone it holds.
std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m);

// (r, r', h): r' holds h, r finds h acceptable and prefers it to its own
// assignment, and h prefers r to r'.
std::vector<std::tuple<int, int, int>> envy_pairs(const Instance& inst, const Matching& m);

bool is_stable(const Instance& inst, const Matching& m);
bool is_envy_free(const Instance& inst, const Matching& m);

struct RelaxedVerdict {
    bool ok = true;
    int hospital = -1;  // hospital whose blocked-assignee count exceeds lq
    int resident = -1;  // unmatched resident participating in a blocking pair
};

// Relaxed stability: per hospital at most lq(h) of its assignees are in
// blocking pairs, and no unmatched resident is in any blocking pair.
RelaxedVerdict is_relaxed_stable(const Instance& inst, const Matching& m);

struct Diagnostics {
    std::vector<std::pair<int, int>> blocking;
    std::vector<std::tuple<int, int, int>> envy;
    int deficiency_total = 0;
    // per hospital, its matched residents that appear in some blocking pair
    std::vector<std::vector<int>> blocked_assignees;
};

Diagnostics diagnose(const Instance& inst, const Matching& m);

// Canonical order on matchings: per-resident key is the hospital index, with
// unmatched sorting after every hospital; keys compared left to right. Every
// "lexicographically smallest witness" in the toolkit means exactly this.
bool canonical_less(const Instance& inst, const Matching& a, const Matching& b);

}  // namespace hrlq
