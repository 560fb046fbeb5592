// Text formats (instances, matchings, graphs), solve reports, and the bench
// CSV. Everything round-trips and keeps a stable field order so outputs can
// be diffed and committed as goldens.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrlq/fpt.hpp"
#include "hrlq/graph.hpp"
#include "hrlq/model.hpp"

namespace hrlq {

struct NamedInstance {
    Instance instance;
    std::vector<std::string> residentNames;
    std::vector<std::string> hospitalNames;
};

// Instance file: '#' starts a comment, first line `hrlq <residents> <hospitals>`,
// then `hospital <name> <lower> <upper> : <residents...>` and
// `resident <name> : <hospitals...>` lines in any order. Lists are in
// preference order and must be mutually consistent. Errors carry line and
// column positions.
NamedInstance parse_instance(const std::string& text);
std::string render_instance(const NamedInstance& named);

// r1..rn / h1..hm
NamedInstance with_default_names(Instance inst);

// Matching file: `<resident> <hospital>` per line, '#' comments. Parsing
// accepts any order; rendering emits matched pairs in resident order.
Matching parse_matching(const std::string& text, const NamedInstance& named);
std::string render_matching(const NamedInstance& named, const Matching& m);

// Graph file: `graph <vertices> <edges>` then `<u> <v>` per edge.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);

struct InstanceStats {
    int residents = 0;
    int hospitals = 0;
    int totalLowerQuota = 0;
    int stableDeficiency = 0;
    int longestResidentList = 0;
    int longestHospitalList = 0;
    int lqHospitals = 0;
    int longestLqList = 0;
    int deficientAcceptableResidents = 0;  // residents listing a hospital the
                                           // stable matching leaves short
    int lqAcceptableResidents = 0;
    int deepestLqRank = 0;
    int maxSharedOpenHospitals = 0;
};

InstanceStats instance_stats(const Instance& inst);

inline const std::vector<std::string>& algorithm_tags() {
    static const std::vector<std::string> tags = {
        "stable",     "ef-feasible", "efm-cl",     "efm-extend",
        "efm-augment", "efm-fpt-lq", "efm-fpt-sd", "efm-fpt-rprime",
        "rsm-approx", "brute-efm",   "brute-minur", "brute-rsm"};
    return tags;
}

struct SolveOptions {
    long long budget = kDefaultBudget;
    std::optional<Matching> seed;  // rsm-approx only
};

// Verdicts are recomputed from the returned matching by the model checkers,
// never taken from the solver.
struct SolveReport {
    std::string algorithm;
    Matching matching;
    int size = 0;
    bool feasible = false;
    bool stable = false;
    bool envyFree = false;
    bool relaxedStable = false;
    Diagnostics diagnostics;
    InstanceStats stats;
    double durationMs = 0.0;
};

// Throws PreconditionError / InfeasibleError / BudgetError through from the
// solver; the CLI maps those to exit codes.
SolveReport run_solve(const NamedInstance& named, const std::string& algorithm,
                      const SolveOptions& options = {});
std::string render_report(const NamedInstance& named, const SolveReport& report);

std::string render_kernel_report(const NamedInstance& named, const KernelResult& result, int k);

// One CSV row per instance x algorithm; failures land in the status column so
// the row count is always |instances| * |algorithms|. duration_ms is last and
// is the only column that varies between identical runs.
std::string bench_csv_header();
std::string bench_csv_row(const std::string& file, const NamedInstance& named,
                          const std::string& algorithm, const SolveOptions& options = {});

}  // namespace hrlq
