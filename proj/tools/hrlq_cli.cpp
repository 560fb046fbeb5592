#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hrlq/generate.hpp"
#include "hrlq/io.hpp"

using namespace hrlq;
namespace fs = std::filesystem;

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NamedInstance loadInstance(const std::string& path) {
    try {
        return parse_instance(readFile(path));
    } catch (const PreconditionError& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

Graph loadGraph(const std::string& path) {
    try {
        return parse_graph(readFile(path));
    } catch (const PreconditionError& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

struct SolveArgs {
    std::string instance;
    std::string algo;
    std::string m0;
    std::string format = "report";
    long long budget = kDefaultBudget;
};

int doSolve(const SolveArgs& a) {
    NamedInstance named = loadInstance(a.instance);
    SolveOptions opt;
    opt.budget = a.budget;
    if (!a.m0.empty()) {
        try {
            opt.seed = parse_matching(readFile(a.m0), named);
        } catch (const PreconditionError& e) {
            throw PreconditionError(a.m0 + ": " + e.what());
        }
    }
    SolveReport rep = run_solve(named, a.algo, opt);
    if (a.format == "matching")
        std::cout << render_matching(named, rep.matching);
    else
        std::cout << render_report(named, rep);
    return 0;
}

struct CheckArgs {
    std::string instance;
    std::string matching;
    std::vector<std::string> expect;
};

int doCheck(const CheckArgs& a) {
    NamedInstance named = loadInstance(a.instance);
    std::cout << "valid: true\n";
    bool allHold = true;
    if (!a.matching.empty()) {
        Matching m;
        try {
            m = parse_matching(readFile(a.matching), named);
        } catch (const PreconditionError& e) {
            throw PreconditionError(a.matching + ": " + e.what());
        }
        const Instance& inst = named.instance;
        Diagnostics d = diagnose(inst, m);
        bool feasible = is_feasible(inst, m);
        bool stable = is_stable(inst, m);
        bool envyFree = is_envy_free(inst, m);
        bool relaxed = is_relaxed_stable(inst, m).ok;
        int blocked = 0;
        for (const auto& v : d.blocked_assignees) blocked += static_cast<int>(v.size());
        std::cout << "size: " << matching_size(m) << "\n";
        std::cout << "feasible: " << (feasible ? "true" : "false") << "\n";
        std::cout << "stable: " << (stable ? "true" : "false") << "\n";
        std::cout << "envy_free: " << (envyFree ? "true" : "false") << "\n";
        std::cout << "relaxed_stable: " << (relaxed ? "true" : "false") << "\n";
        std::cout << "blocking_pairs: " << d.blocking.size() << "\n";
        std::cout << "envy_pairs: " << d.envy.size() << "\n";
        std::cout << "deficiency: " << d.deficiency_total << "\n";
        std::cout << "blocked_assignees: " << blocked << "\n";
        for (const std::string& want : a.expect) {
            bool holds = want == "feasible"         ? feasible
                         : want == "stable"         ? stable
                         : want == "envy-free"      ? envyFree
                         : want == "relaxed-stable" ? relaxed
                                                    : throw PreconditionError(
                                                          "unknown property '" + want + "'");
            if (!holds) {
                std::cerr << "check failed: matching is not " << want << "\n";
                allHold = false;
            }
        }
    } else if (!a.expect.empty()) {
        throw PreconditionError("--expect needs --matching");
    }
    InstanceStats s = instance_stats(named.instance);
    std::cout << "residents: " << s.residents << "\n";
    std::cout << "hospitals: " << s.hospitals << "\n";
    std::cout << "total_lower_quota: " << s.totalLowerQuota << "\n";
    std::cout << "stable_deficiency: " << s.stableDeficiency << "\n";
    std::cout << "longest_resident_list: " << s.longestResidentList << "\n";
    std::cout << "longest_hospital_list: " << s.longestHospitalList << "\n";
    std::cout << "lq_hospitals: " << s.lqHospitals << "\n";
    std::cout << "longest_lq_list: " << s.longestLqList << "\n";
    std::cout << "deficient_acceptable_residents: " << s.deficientAcceptableResidents << "\n";
    std::cout << "lq_acceptable_residents: " << s.lqAcceptableResidents << "\n";
    std::cout << "deepest_lq_rank: " << s.deepestLqRank << "\n";
    std::cout << "max_shared_open_hospitals: " << s.maxSharedOpenHospitals << "\n";
    return allHold ? 0 : 1;
}

struct GenerateArgs {
    std::string family;
    std::string graph;
    int k = 0;
    int residents = 8;
    int hospitals = 4;
    int maxUpper = 2;
    int lqHospitals = 1;
    std::uint64_t seed = 0;
};

int doGenerate(const GenerateArgs& a) {
    Instance inst;
    if (a.family == "indset" || a.family == "indset-unit" || a.family == "mvc-efm" ||
        a.family == "mvc-rsm") {
        if (a.graph.empty())
            throw PreconditionError("family '" + a.family + "' needs --graph");
        Graph g = loadGraph(a.graph);
        if (a.family == "mvc-efm")
            inst = gen_mvc_efm(g);
        else if (a.family == "mvc-rsm")
            inst = gen_mvc_rsm(g);
        else {
            if (a.k == 0)
                throw PreconditionError("family '" + a.family + "' needs --k");
            inst = a.family == "indset" ? gen_indset(g, a.k) : gen_indset_unit(g, a.k);
        }
    } else {
        RandomSpec spec;
        spec.family = a.family;
        spec.residents = a.residents;
        spec.hospitals = a.hospitals;
        spec.maxUpper = a.maxUpper;
        spec.lqHospitals = a.lqHospitals;
        spec.seed = a.seed;
        inst = gen_random(spec);
    }
    std::cout << render_instance(with_default_names(std::move(inst)));
    return 0;
}

struct KernelizeArgs {
    std::string instance;
    int k = 0;
    std::string format = "report";
};

int doKernelize(const KernelizeArgs& a) {
    NamedInstance named = loadInstance(a.instance);
    KernelResult result = kernelize(named.instance, a.k);
    if (a.format == "instance") {
        if (result.verdict != KernelResult::Verdict::Kernel)
            throw PreconditionError("verdict is not 'kernel', no reduced instance to print");
        NamedInstance reduced;
        reduced.instance = result.reduced;
        for (int r : result.residentMap) reduced.residentNames.push_back(named.residentNames[r]);
        for (int h : result.hospitalMap) reduced.hospitalNames.push_back(named.hospitalNames[h]);
        std::cout << render_instance(reduced);
    } else {
        std::cout << render_kernel_report(named, result, a.k);
    }
    return 0;
}

struct BenchArgs {
    std::string dir;
    std::vector<std::string> algos;
    long long budget = kDefaultBudget;
};

int doBench(const BenchArgs& a) {
    const auto& known = algorithm_tags();
    for (const std::string& algo : a.algos)
        if (std::find(known.begin(), known.end(), algo) == known.end())
            throw PreconditionError("unknown algorithm '" + algo + "'");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.dir))
        if (entry.path().extension() == ".hrlq") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    SolveOptions opt;
    opt.budget = a.budget;
    std::cout << bench_csv_header();
    for (const fs::path& f : files) {
        NamedInstance named = loadInstance(f.string());
        for (const std::string& algo : a.algos)
            std::cout << bench_csv_row(f.filename().string(), named, algo, opt);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hospital/residents matching with lower quotas"};
    app.require_subcommand(1);

    SolveArgs solveArgs;
    auto* solve = app.add_subcommand("solve", "run a solver and print its report");
    solve->add_option("instance", solveArgs.instance, "instance file")->required();
    solve->add_option("--algo", solveArgs.algo, "algorithm tag")->required();
    solve->add_option("--budget", solveArgs.budget, "work budget for the exact solvers");
    solve->add_option("--m0", solveArgs.m0, "seed matching file (rsm-approx)");
    solve->add_option("--format", solveArgs.format, "report | matching")
        ->check(CLI::IsMember({"report", "matching"}));

    CheckArgs checkArgs;
    auto* check = app.add_subcommand("check", "validate an instance and optionally a matching");
    check->add_option("instance", checkArgs.instance, "instance file")->required();
    check->add_option("--matching", checkArgs.matching, "matching file to verify");
    check->add_option("--expect", checkArgs.expect,
                      "property that must hold: feasible | stable | envy-free | relaxed-stable");

    GenerateArgs genArgs;
    auto* generate = app.add_subcommand("generate", "emit a generated instance");
    generate
        ->add_option("--family", genArgs.family,
                     "indset | indset-unit | mvc-efm | mvc-rsm | random | random-cl | random-012r")
        ->required();
    generate->add_option("--graph", genArgs.graph, "graph file (gadget families)");
    generate->add_option("--k", genArgs.k, "independent-set size (indset families)");
    generate->add_option("-n,--residents", genArgs.residents, "resident count (random families)");
    generate->add_option("-m,--hospitals", genArgs.hospitals, "hospital count (random families)");
    generate->add_option("--max-upper", genArgs.maxUpper, "upper-quota cap (random families)");
    generate->add_option("--lq-hospitals", genArgs.lqHospitals,
                         "hospitals with a positive lower quota (random families)");
    generate->add_option("--seed", genArgs.seed, "generator seed");

    KernelizeArgs kernArgs;
    auto* kern = app.add_subcommand("kernelize", "reduce a 0/1-quota instance for decision size k");
    kern->add_option("instance", kernArgs.instance, "instance file")->required();
    kern->add_option("--k", kernArgs.k, "decision threshold")->required();
    kern->add_option("--format", kernArgs.format, "report | instance")
        ->check(CLI::IsMember({"report", "instance"}));

    BenchArgs benchArgs;
    auto* bench = app.add_subcommand("bench", "run algorithms over a directory of .hrlq files");
    bench->add_option("dir", benchArgs.dir, "instance directory")->required();
    bench->add_option("--algo", benchArgs.algos, "algorithm tag (repeatable)")->required();
    bench->add_option("--budget", benchArgs.budget, "work budget for the exact solvers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) return doSolve(solveArgs);
        if (*check) return doCheck(checkArgs);
        if (*generate) return doGenerate(genArgs);
        if (*kern) return doKernelize(kernArgs);
        if (*bench) return doBench(benchArgs);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
