#include "hrlq/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "hrlq/envyfree.hpp"
#include "hrlq/oracle.hpp"
#include "hrlq/relaxed.hpp"
#include "hrlq/stable.hpp"
#include "internal.hpp"

namespace hrlq {

namespace {

struct Token {
    std::string text;
    int line;
    int col;  // 1-based
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw PreconditionError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                            ": " + msg);
}

[[noreturn]] void fail(const Token& t, const std::string& msg) { fail(t.line, t.col, msg); }

// '#' starts a comment; tokens are whitespace-separated words per line
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::vector<Token> toks;
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (raw[i] == '#') break;
            size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
                   raw[i] != '#')
                ++i;
            toks.push_back({raw.substr(start, i - start), lineNo, static_cast<int>(start) + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int parseCount(const Token& t, const char* what) {
    if (t.text.empty()) fail(t, std::string("expected ") + what);
    int value = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9') fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
        if (value > 100000000) fail(t, std::string(what) + " out of range");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

NamedInstance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw PreconditionError("line 1, column 1: missing 'hrlq' header");
    const auto& head = lines[0];
    if (head[0].text != "hrlq") fail(head[0], "expected 'hrlq' header");
    if (head.size() != 3) fail(head[0], "header must be 'hrlq <residents> <hospitals>'");
    int n = parseCount(head[1], "resident count");
    int m = parseCount(head[2], "hospital count");

    NamedInstance named;
    named.instance.lq.assign(m, 0);
    named.instance.uq.assign(m, 1);
    named.instance.rpref.resize(n);
    named.instance.hpref.resize(m);

    std::map<std::string, int> ridx, hidx;
    struct Decl {
        const std::vector<Token>* line;
        int id;
    };
    std::vector<Decl> hospitalDecls, residentDecls;

    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        const Token& kind = toks[0];
        if (kind.text == "hospital") {
            if (toks.size() < 5 || toks[4].text != ":")
                fail(kind, "expected 'hospital <name> <lower> <upper> : <residents...>'");
            if (static_cast<int>(hospitalDecls.size()) == m)
                fail(kind, "more hospital lines than the header declares");
            const Token& name = toks[1];
            if (hidx.count(name.text)) fail(name, "duplicate hospital name '" + name.text + "'");
            int id = static_cast<int>(hospitalDecls.size());
            hidx[name.text] = id;
            named.hospitalNames.push_back(name.text);
            int lo = parseCount(toks[2], "lower quota");
            int hi = parseCount(toks[3], "upper quota");
            if (hi < 1) fail(toks[3], "upper quota must be positive");
            if (lo > hi)
                fail(toks[2], "lower quota " + std::to_string(lo) + " exceeds upper quota " +
                                  std::to_string(hi));
            named.instance.lq[id] = lo;
            named.instance.uq[id] = hi;
            hospitalDecls.push_back({&toks, id});
        } else if (kind.text == "resident") {
            if (toks.size() < 3 || toks[2].text != ":")
                fail(kind, "expected 'resident <name> : <hospitals...>'");
            if (static_cast<int>(residentDecls.size()) == n)
                fail(kind, "more resident lines than the header declares");
            const Token& name = toks[1];
            if (ridx.count(name.text)) fail(name, "duplicate resident name '" + name.text + "'");
            int id = static_cast<int>(residentDecls.size());
            ridx[name.text] = id;
            named.residentNames.push_back(name.text);
            residentDecls.push_back({&toks, id});
        } else {
            fail(kind, "expected 'hospital' or 'resident', got '" + kind.text + "'");
        }
    }
    if (static_cast<int>(hospitalDecls.size()) != m)
        throw PreconditionError("header declares " + std::to_string(m) + " hospitals, found " +
                                std::to_string(hospitalDecls.size()));
    if (static_cast<int>(residentDecls.size()) != n)
        throw PreconditionError("header declares " + std::to_string(n) + " residents, found " +
                                std::to_string(residentDecls.size()));

    for (const Decl& d : hospitalDecls) {
        const auto& toks = *d.line;
        for (size_t i = 5; i < toks.size(); ++i) {
            auto it = ridx.find(toks[i].text);
            if (it == ridx.end()) fail(toks[i], "unknown resident '" + toks[i].text + "'");
            named.instance.hpref[d.id].push_back(it->second);
        }
    }
    for (const Decl& d : residentDecls) {
        const auto& toks = *d.line;
        for (size_t i = 3; i < toks.size(); ++i) {
            auto it = hidx.find(toks[i].text);
            if (it == hidx.end()) fail(toks[i], "unknown hospital '" + toks[i].text + "'");
            named.instance.rpref[d.id].push_back(it->second);
        }
    }

    auto issues = validate_instance(named.instance);
    if (!issues.empty()) {
        // re-state model findings with names instead of indices
        std::string msg = issues.front();
        for (int r = 0; r < n; ++r) {
            std::string from = "resident " + std::to_string(r);
            size_t pos = msg.find(from);
            if (pos != std::string::npos)
                msg.replace(pos, from.size(), "resident " + named.residentNames[r]);
        }
        for (int h = 0; h < m; ++h) {
            std::string from = "hospital " + std::to_string(h);
            size_t pos = msg.find(from);
            if (pos != std::string::npos)
                msg.replace(pos, from.size(), "hospital " + named.hospitalNames[h]);
        }
        throw PreconditionError(msg);
    }
    finalize(named.instance);
    return named;
}

std::string render_instance(const NamedInstance& named) {
    const Instance& inst = named.instance;
    std::ostringstream out;
    out << "hrlq " << inst.residents() << " " << inst.hospitals() << "\n";
    for (int h = 0; h < inst.hospitals(); ++h) {
        out << "hospital " << named.hospitalNames[h] << " " << inst.lq[h] << " " << inst.uq[h]
            << " :";
        for (int r : inst.hpref[h]) out << " " << named.residentNames[r];
        out << "\n";
    }
    for (int r = 0; r < inst.residents(); ++r) {
        out << "resident " << named.residentNames[r] << " :";
        for (int h : inst.rpref[r]) out << " " << named.hospitalNames[h];
        out << "\n";
    }
    return out.str();
}

NamedInstance with_default_names(Instance inst) {
    NamedInstance named;
    for (int r = 0; r < inst.residents(); ++r) named.residentNames.push_back("r" + std::to_string(r + 1));
    for (int h = 0; h < inst.hospitals(); ++h) named.hospitalNames.push_back("h" + std::to_string(h + 1));
    named.instance = std::move(inst);
    return named;
}

Matching parse_matching(const std::string& text, const NamedInstance& named) {
    std::map<std::string, int> ridx, hidx;
    for (int r = 0; r < named.instance.residents(); ++r) ridx[named.residentNames[r]] = r;
    for (int h = 0; h < named.instance.hospitals(); ++h) hidx[named.hospitalNames[h]] = h;

    Matching m(named.instance.residents());
    for (const auto& toks : tokenize(text)) {
        if (toks.size() != 2) fail(toks[0], "expected '<resident> <hospital>'");
        auto rit = ridx.find(toks[0].text);
        if (rit == ridx.end()) fail(toks[0], "unknown resident '" + toks[0].text + "'");
        auto hit = hidx.find(toks[1].text);
        if (hit == hidx.end()) fail(toks[1], "unknown hospital '" + toks[1].text + "'");
        if (m[rit->second] != kUnmatched)
            fail(toks[0], "resident '" + toks[0].text + "' assigned twice");
        if (!named.instance.acceptable(rit->second, hit->second))
            fail(toks[0], "pair " + toks[0].text + " " + toks[1].text + " is not an edge");
        m[rit->second] = hit->second;
    }
    require_matching(named.instance, m);
    return m;
}

std::string render_matching(const NamedInstance& named, const Matching& m) {
    std::ostringstream out;
    for (int r = 0; r < m.residents(); ++r)
        if (m[r] != kUnmatched)
            out << named.residentNames[r] << " " << named.hospitalNames[m[r]] << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw PreconditionError("line 1, column 1: missing 'graph' header");
    const auto& head = lines[0];
    if (head[0].text != "graph" || head.size() != 3)
        fail(head[0], "expected 'graph <vertices> <edges>' header");
    Graph g;
    g.n = parseCount(head[1], "vertex count");
    int edges = parseCount(head[2], "edge count");
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.size() != 2) fail(toks[0], "expected '<u> <v>' edge line");
        int u = parseCount(toks[0], "vertex");
        int v = parseCount(toks[1], "vertex");
        g.edges.push_back({u, v});
    }
    if (g.edge_count() != edges)
        throw PreconditionError("header declares " + std::to_string(edges) + " edges, found " +
                                std::to_string(g.edge_count()));
    require_graph(g);
    return g;
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

InstanceStats instance_stats(const Instance& inst) {
    InstanceStats s;
    s.residents = inst.residents();
    s.hospitals = inst.hospitals();
    for (int q : inst.lq) s.totalLowerQuota += q;
    for (const auto& l : inst.rpref)
        s.longestResidentList = std::max<int>(s.longestResidentList, l.size());
    for (const auto& l : inst.hpref)
        s.longestHospitalList = std::max<int>(s.longestHospitalList, l.size());
    for (int h = 0; h < inst.hospitals(); ++h)
        if (inst.lq[h] > 0) {
            ++s.lqHospitals;
            s.longestLqList = std::max(s.longestLqList, static_cast<int>(inst.hpref[h].size()));
        }

    Matching ms = stable_matching(inst);
    s.stableDeficiency = deficiency(inst, ms);
    std::vector<int> load = hospital_loads(inst, ms);
    for (int r = 0; r < inst.residents(); ++r) {
        bool anyLq = false, anyDeficient = false;
        for (int h : inst.rpref[r]) {
            anyLq = anyLq || inst.lq[h] > 0;
            anyDeficient = anyDeficient || load[h] < inst.lq[h];
        }
        if (anyLq) ++s.lqAcceptableResidents;
        if (anyDeficient) ++s.deficientAcceptableResidents;
    }
    s.deepestLqRank = detail::deepest_lq_rank(inst);
    s.maxSharedOpenHospitals = detail::max_shared_open_hospitals(inst);
    return s;
}

namespace {

Matching dispatch(const Instance& inst, const std::string& algo, const SolveOptions& opt) {
    if (algo == "stable") return stable_matching(inst);
    if (algo == "ef-feasible") {
        auto m = ef_feasible(inst);
        if (!m) throw InfeasibleError("no feasible envy-free matching exists");
        return *m;
    }
    if (algo == "efm-cl") return maxefm_cl(inst);
    if (algo == "efm-extend") {
        auto m = ef_feasible(inst);
        if (!m) throw InfeasibleError("no feasible envy-free matching exists");
        return extend_to_max_ef(inst, *m);
    }
    if (algo == "efm-augment") return maximal_ef_augment(inst);
    if (algo == "efm-fpt-lq") return maxefm_enum_lq(inst, opt.budget);
    if (algo == "efm-fpt-sd") return maxefm_branch_sd(inst, opt.budget);
    if (algo == "efm-fpt-rprime") return maxefm_enum_rprime(inst, opt.budget);
    if (algo == "rsm-approx") return opt.seed ? rsm_approx(inst, *opt.seed).matching
                                              : rsm_approx(inst).matching;
    if (algo == "brute-efm" || algo == "brute-minur" || algo == "brute-rsm") {
        OracleBest best = algo == "brute-efm"     ? brute_maxefm(inst)
                          : algo == "brute-minur" ? brute_min_ur_efm(inst)
                                                  : brute_maxrsm(inst);
        if (!best.found) throw InfeasibleError("no feasible matching of the requested kind exists");
        return best.matching;
    }
    throw PreconditionError("unknown algorithm '" + algo + "'");
}

}  // namespace

SolveReport run_solve(const NamedInstance& named, const std::string& algorithm,
                      const SolveOptions& options) {
    const Instance& inst = named.instance;
    SolveReport rep;
    rep.algorithm = algorithm;
    rep.stats = instance_stats(inst);

    auto t0 = std::chrono::steady_clock::now();
    rep.matching = dispatch(inst, algorithm, options);
    rep.durationMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    require_matching(inst, rep.matching);
    rep.size = matching_size(rep.matching);
    rep.feasible = is_feasible(inst, rep.matching);
    rep.stable = is_stable(inst, rep.matching);
    rep.envyFree = is_envy_free(inst, rep.matching);
    rep.relaxedStable = is_relaxed_stable(inst, rep.matching).ok;
    rep.diagnostics = diagnose(inst, rep.matching);
    return rep;
}

namespace {

void renderStats(std::ostringstream& out, const InstanceStats& s) {
    out << "residents: " << s.residents << "\n";
    out << "hospitals: " << s.hospitals << "\n";
    out << "total_lower_quota: " << s.totalLowerQuota << "\n";
    out << "stable_deficiency: " << s.stableDeficiency << "\n";
    out << "longest_resident_list: " << s.longestResidentList << "\n";
    out << "longest_hospital_list: " << s.longestHospitalList << "\n";
    out << "lq_hospitals: " << s.lqHospitals << "\n";
    out << "longest_lq_list: " << s.longestLqList << "\n";
    out << "deficient_acceptable_residents: " << s.deficientAcceptableResidents << "\n";
    out << "lq_acceptable_residents: " << s.lqAcceptableResidents << "\n";
    out << "deepest_lq_rank: " << s.deepestLqRank << "\n";
    out << "max_shared_open_hospitals: " << s.maxSharedOpenHospitals << "\n";
}

std::string formatMs(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

int blockedAssigneeCount(const Diagnostics& d) {
    int c = 0;
    for (const auto& v : d.blocked_assignees) c += static_cast<int>(v.size());
    return c;
}

}  // namespace

std::string render_report(const NamedInstance& named, const SolveReport& rep) {
    std::ostringstream out;
    out << "algorithm: " << rep.algorithm << "\n";
    out << "size: " << rep.size << "\n";
    out << "feasible: " << (rep.feasible ? "true" : "false") << "\n";
    out << "stable: " << (rep.stable ? "true" : "false") << "\n";
    out << "envy_free: " << (rep.envyFree ? "true" : "false") << "\n";
    out << "relaxed_stable: " << (rep.relaxedStable ? "true" : "false") << "\n";
    out << "blocking_pairs: " << rep.diagnostics.blocking.size() << "\n";
    out << "envy_pairs: " << rep.diagnostics.envy.size() << "\n";
    out << "deficiency: " << rep.diagnostics.deficiency_total << "\n";
    out << "blocked_assignees: " << blockedAssigneeCount(rep.diagnostics) << "\n";
    for (int r = 0; r < rep.matching.residents(); ++r)
        if (rep.matching[r] != kUnmatched)
            out << "match: " << named.residentNames[r] << " "
                << named.hospitalNames[rep.matching[r]] << "\n";
    auto loose = unmatched_residents(named.instance, rep.matching);
    if (!loose.empty()) {
        out << "unmatched:";
        for (int r : loose) out << " " << named.residentNames[r];
        out << "\n";
    }
    renderStats(out, rep.stats);
    out << "duration_ms: " << formatMs(rep.durationMs) << "\n";
    return out.str();
}

std::string render_kernel_report(const NamedInstance& named, const KernelResult& result, int k) {
    std::ostringstream out;
    const char* verdict = result.verdict == KernelResult::Verdict::Yes   ? "yes"
                          : result.verdict == KernelResult::Verdict::No  ? "no"
                                                                         : "kernel";
    out << "# verdict: " << verdict << "\n";
    out << "# k: " << k << "\n";
    if (result.verdict == KernelResult::Verdict::Yes) {
        for (int r = 0; r < result.witness.residents(); ++r)
            if (result.witness[r] != kUnmatched)
                out << "# witness: " << named.residentNames[r] << " "
                    << named.hospitalNames[result.witness[r]] << "\n";
        return out.str();
    }
    if (result.verdict == KernelResult::Verdict::No) return out.str();

    out << "# max_matching: " << result.ell << "\n";
    out << "# deepest_lq_rank: " << result.p << "\n";
    out << "# max_shared_open_hospitals: " << result.t << "\n";
    out << "# cover_residents: " << result.coverResidents.size() << "\n";
    out << "# cover_hospitals: " << result.coverHospitals.size() << "\n";
    out << "# marked_edges: " << result.markedEdges.size() << "\n";
    out << "# cross_edges: " << result.crossEdges << "\n";
    NamedInstance reduced;
    reduced.instance = result.reduced;
    for (int r : result.residentMap) reduced.residentNames.push_back(named.residentNames[r]);
    for (int h : result.hospitalMap) reduced.hospitalNames.push_back(named.hospitalNames[h]);
    out << render_instance(reduced);
    return out.str();
}

std::string bench_csv_header() {
    return "file,algorithm,status,size,feasible,stable,envy_free,relaxed_stable,"
           "blocking_pairs,envy_pairs,deficiency,blocked_assignees,"
           "residents,hospitals,total_lower_quota,stable_deficiency,"
           "longest_resident_list,longest_hospital_list,lq_hospitals,longest_lq_list,"
           "deficient_acceptable_residents,lq_acceptable_residents,deepest_lq_rank,"
           "max_shared_open_hospitals,duration_ms\n";
}

std::string bench_csv_row(const std::string& file, const NamedInstance& named,
                          const std::string& algorithm, const SolveOptions& options) {
    std::ostringstream out;
    out << file << "," << algorithm << ",";
    std::string status = "ok";
    SolveReport rep;
    try {
        rep = run_solve(named, algorithm, options);
    } catch (const BudgetError&) {
        status = "budget";
    } catch (const InfeasibleError&) {
        status = "infeasible";
    } catch (const PreconditionError&) {
        status = "precondition";
    }
    const InstanceStats s = status == "ok" ? rep.stats : instance_stats(named.instance);
    out << status << ",";
    if (status == "ok") {
        out << rep.size << "," << (rep.feasible ? "true" : "false") << ","
            << (rep.stable ? "true" : "false") << "," << (rep.envyFree ? "true" : "false") << ","
            << (rep.relaxedStable ? "true" : "false") << "," << rep.diagnostics.blocking.size()
            << "," << rep.diagnostics.envy.size() << "," << rep.diagnostics.deficiency_total << ","
            << blockedAssigneeCount(rep.diagnostics);
    } else {
        out << ",,,,,,,,";
    }
    out << "," << s.residents << "," << s.hospitals << "," << s.totalLowerQuota << ","
        << s.stableDeficiency << "," << s.longestResidentList << "," << s.longestHospitalList
        << "," << s.lqHospitals << "," << s.longestLqList << "," << s.deficientAcceptableResidents
        << "," << s.lqAcceptableResidents << "," << s.deepestLqRank << ","
        << s.maxSharedOpenHospitals << "," << formatMs(rep.durationMs) << "\n";
    return out.str();
}

}  // namespace hrlq
