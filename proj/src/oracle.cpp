#include "hrlq/oracle.hpp"

#include <algorithm>
#include <string>

namespace hrlq {

namespace {

constexpr int kUnassigned = -2;

// Depth-first walk over assignment vectors, one resident per level. Choices
// are visited in canonical order (hospital index ascending, unmatched last),
// so leaves appear in canonical order and the first witness of each value is
// the canonically smallest. Leaves are accepted purely by the core checkers;
// the pruning rules only cut subtrees that provably contain no leaf beating
// the current best:
//   - capacity: a full hospital never loses an occupant;
//   - lower-quota shortfall: too few unassigned candidates remain to fill h;
//   - envy between two settled residents never goes away (EF goals);
//   - a blocking pair against a full hospital never goes away (RS goal);
//   - value bound: matched count can grow by at most one per level.
struct Search {
    const Instance& inst;
    const bool wantEF;    // leaf filter: feasible + envy-free
    const bool wantRS;    // leaf filter: feasible + relaxed stable
    const bool minimize;  // objective: fewest unmatched instead of max size

    int n, m;
    std::vector<std::vector<int>> choices;  // per resident, hospitals ascending
    std::vector<std::vector<int>> lqOf;     // per resident, its lower-quota hospitals
    std::vector<int> a;                     // resident -> hospital / kUnmatched / kUnassigned
    std::vector<int> load;
    std::vector<std::vector<int>> occupants;  // per hospital, stack of residents
    std::vector<int> remaining;  // per hospital, unassigned residents listing it
    std::vector<char> blocked;   // RS: resident known to sit in a blocking pair
    std::vector<int> blockedOf;  // RS: per hospital, known-blocked assignees
    std::vector<int> rsLog;      // RS: stack of residents whose flag was set
    int matched = 0;

    OracleBest best;

    Search(const Instance& i, bool ef, bool rs, bool mini)
        : inst(i), wantEF(ef), wantRS(rs), minimize(mini), n(i.residents()), m(i.hospitals()) {
        choices.resize(n);
        lqOf.resize(n);
        for (int r = 0; r < n; ++r) {
            choices[r] = inst.rpref[r];
            std::sort(choices[r].begin(), choices[r].end());
            for (int h : inst.rpref[r])
                if (inst.lq[h] > 0) lqOf[r].push_back(h);
        }
        a.assign(n, kUnassigned);
        load.assign(m, 0);
        occupants.resize(m);
        remaining.assign(m, 0);
        for (int r = 0; r < n; ++r)
            for (int h : lqOf[r]) remaining[h]++;
        blocked.assign(n, 0);
        blockedOf.assign(m, 0);
    }

    int worstRank(int h) const {  // -1 when empty
        int w = -1;
        for (int r : occupants[h]) w = std::max(w, inst.hrank[h][r]);
        return w;
    }

    void setBlocked(int r) {  // r is matched; idempotent, undone via rsLog
        if (blocked[r]) return;
        blocked[r] = 1;
        blockedOf[a[r]]++;
        rsLog.push_back(r);
    }

    // Applies the assignment a[r] = c and every bookkeeping update, then runs
    // the prune rules. Returns false when the subtree is dead; the caller
    // must call unstep either way.
    bool step(int r, int c) {
        a[r] = c;
        if (c >= 0) {
            load[c]++;
            occupants[c].push_back(r);
            matched++;
        }
        for (int h : lqOf[r]) remaining[h]--;
        for (int h : lqOf[r])
            if (load[h] + remaining[h] < inst.lq[h]) return false;

        if (best.found) {
            if (minimize) {
                if (r + 1 - matched >= best.value) return false;
            } else if (matched + (n - r - 1) <= best.value) {
                return false;
            }
        }

        if (wantEF && !efStep(r, c)) return false;
        if (wantRS && !rsStep(r, c)) return false;
        return true;
    }

    void unstep(int r, int c, size_t rsMark) {
        while (rsLog.size() > rsMark) {
            int rb = rsLog.back();
            rsLog.pop_back();
            blocked[rb] = 0;
            blockedOf[a[rb]]--;
        }
        for (int h : lqOf[r]) remaining[h]++;
        if (c >= 0) {
            load[c]--;
            occupants[c].pop_back();
            matched--;
        }
        a[r] = kUnassigned;
    }

    // Envy among settled residents is final: both assignments stay as they
    // are, so any envy pair found here survives to every leaf below.
    bool efStep(int r, int c) {
        int upto = c >= 0 ? inst.rrank[r][c] : static_cast<int>(inst.rpref[r].size());
        for (int p = 0; p < upto; ++p) {  // hospitals r prefers to c
            int h = inst.rpref[r][p];
            if (worstRank(h) > inst.hrank[h][r]) return false;  // r envies an occupant
        }
        if (c >= 0) {
            for (int p = 0; p < inst.hrank[c][r]; ++p) {  // residents c prefers to r
                int q = inst.hpref[c][p];
                if (a[q] == kUnassigned) continue;
                if (a[q] == kUnmatched || inst.prefers(q, c, a[q])) return false;  // q envies r
            }
        }
        return true;
    }

    // A hospital that just became full keeps its occupant set forever, so a
    // blocking pair against it is permanent. Blocked matched residents count
    // against their own hospital's lower quota; a blocked unmatched resident
    // is fatal outright.
    bool rsStep(int r, int c) {
        if (c == kUnmatched) {
            for (int h : inst.rpref[r])
                if (load[h] == inst.uq[h] && worstRank(h) > inst.hrank[h][r]) return false;
            return true;
        }
        for (int p = 0; p < inst.rrank[r][c]; ++p) {  // r's own permanent block
            int h = inst.rpref[r][p];
            if (load[h] == inst.uq[h] && worstRank(h) > inst.hrank[h][r]) {
                setBlocked(r);
                if (blockedOf[c] > inst.lq[c]) return false;
                break;
            }
        }
        if (load[c] == inst.uq[c]) {  // c just filled: settle every pair against it
            int wr = worstRank(c);
            for (int p = 0; p < wr; ++p) {
                int q = inst.hpref[c][p];
                if (a[q] == kUnassigned || a[q] == c) continue;
                if (a[q] == kUnmatched) return false;
                if (inst.prefers(q, c, a[q])) {
                    setBlocked(q);
                    if (blockedOf[a[q]] > inst.lq[a[q]]) return false;
                }
            }
        }
        return true;
    }

    void leaf() {
        Matching cand(n);
        cand.at = a;
        if (!is_feasible(inst, cand)) return;
        if (wantEF && !is_envy_free(inst, cand)) return;
        if (wantRS && !is_relaxed_stable(inst, cand).ok) return;
        int value = minimize ? n - matched : matched;
        bool better = !best.found || (minimize ? value < best.value : value > best.value);
        if (better) {
            best.found = true;
            best.value = value;
            best.matching = cand;
        }
    }

    void dfs(int r) {
        if (r == n) {
            leaf();
            return;
        }
        for (int h : choices[r]) {
            if (load[h] >= inst.uq[h]) continue;
            size_t mark = rsLog.size();
            if (step(r, h)) dfs(r + 1);
            unstep(r, h, mark);
        }
        size_t mark = rsLog.size();
        if (step(r, kUnmatched)) dfs(r + 1);
        unstep(r, kUnmatched, mark);
    }
};

void checkSize(const char* who, const Instance& inst, int max_residents) {
    if (!inst.ready) throw PreconditionError(std::string(who) + ": instance not finalized");
    if (inst.residents() > max_residents)
        throw PreconditionError(std::string(who) + ": " + std::to_string(inst.residents()) +
                                " residents exceeds bound " + std::to_string(max_residents));
}

}  // namespace

OracleBest brute_maxefm(const Instance& inst, int max_residents) {
    checkSize("brute_maxefm", inst, max_residents);
    Search s(inst, true, false, false);
    s.dfs(0);
    return s.best;
}

OracleBest brute_min_ur_efm(const Instance& inst, int max_residents) {
    checkSize("brute_min_ur_efm", inst, max_residents);
    Search s(inst, true, false, true);
    s.dfs(0);
    return s.best;
}

OracleBest brute_maxrsm(const Instance& inst, int max_residents) {
    checkSize("brute_maxrsm", inst, max_residents);
    Search s(inst, false, true, false);
    s.dfs(0);
    return s.best;
}

int brute_vc(const Graph& g, int max_vertices) {
    require_graph(g);
    if (g.n > max_vertices)
        throw PreconditionError("brute_vc: " + std::to_string(g.n) + " vertices exceeds bound " +
                                std::to_string(max_vertices));
    int bestSize = g.n;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        if (covers) bestSize = std::min(bestSize, __builtin_popcount(mask));
    }
    return bestSize;
}

bool brute_is(const Graph& g, int k, int max_vertices) {
    require_graph(g);
    if (g.n > max_vertices)
        throw PreconditionError("brute_is: " + std::to_string(g.n) + " vertices exceeds bound " +
                                std::to_string(max_vertices));
    if (k < 0 || k > g.n) return false;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        bool independent = true;
        for (auto [u, v] : g.edges)
            if (((mask >> u) & 1) && ((mask >> v) & 1)) {
                independent = false;
                break;
            }
        if (independent) return true;
    }
    return false;
}

}  // namespace hrlq
