#include "hrlq/fpt.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "hrlq/envyfree.hpp"
#include "hrlq/stable.hpp"
#include "internal.hpp"

namespace hrlq {

namespace {

constexpr long long kCountCap = std::numeric_limits<long long>::max() / 2;

long long satMul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kCountCap / b) return kCountCap;
    return a * b;
}

long long satAdd(long long a, long long b) {
    if (a > kCountCap - b) return kCountCap;
    return a + b;
}

long long satChoose(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (int i = 1; i <= k; ++i) {
        if (out > kCountCap / (n - k + i)) return kCountCap;
        out = out * (n - k + i) / i;  // integral at every step
    }
    return out;
}

std::vector<int> lqHospitals(const Instance& inst) {
    std::vector<int> hs;
    for (int h = 0; h < inst.hospitals(); ++h)
        if (inst.lq[h] > 0) hs.push_back(h);
    return hs;
}

void requireUnitQuotas(const Instance& inst, const char* who) {
    for (int h = 0; h < inst.hospitals(); ++h)
        if (inst.uq[h] > 1)
            throw PreconditionError(std::string(who) + ": quotas must be 0 or 1");
}

void requireFeasibleEF(const Instance& inst) {
    if (!ef_feasible(inst))
        throw InfeasibleError("no feasible envy-free matching exists");
}

void requireBudget(const char* who, long long cost, long long budget) {
    if (cost > budget)
        throw BudgetError(std::string(who) + ": " + std::to_string(cost) +
                          " evaluations exceed the budget of " + std::to_string(budget));
}

// Best-so-far reduction shared by the exact solvers: feasible envy-free
// candidates only, largest size, canonical order breaking ties.
struct Best {
    const Instance& inst;
    Matching m;
    int size = -1;

    explicit Best(const Instance& i) : inst(i) {}

    void offer(const Matching& cand) {
        if (!is_feasible(inst, cand) || !is_envy_free(inst, cand)) return;
        int s = matching_size(cand);
        if (s > size || (s == size && canonical_less(inst, cand, m))) {
            m = cand;
            size = s;
        }
    }
};

// Would r joining h form an envy pair with a seeded resident? Only seeded
// pairs are judged here; envy against residents the extension adds later is
// ruled out by the extension itself, and the final gate rechecks everything.
bool enviesSeeded(const Instance& inst, const Matching& seed,
                  const std::vector<int>& assigned, int r, int h) {
    for (int r2 : assigned) {
        int h2 = seed[r2];
        if (inst.acceptable(r, h2) && inst.prefers(r, h2, h) &&
            inst.hrank[h2][r] < inst.hrank[h2][r2])
            return true;
        if (inst.acceptable(r2, h) && inst.prefers(r2, h, h2) &&
            inst.hrank[h][r2] < inst.hrank[h][r])
            return true;
    }
    return false;
}

struct SeedEnumerator {
    const Instance& inst;
    std::vector<int> hs;
    Matching seed;
    std::vector<int> assigned;
    std::vector<char> taken;
    Best best;

    explicit SeedEnumerator(const Instance& i)
        : inst(i),
          hs(lqHospitals(i)),
          seed(i.residents()),
          taken(i.residents(), 0),
          best(i) {}
};

// Enumerates per-hospital assignee subsets, hospitals in ascending index,
// subsets in lexicographic position order.
struct EnumLq : SeedEnumerator {
    using SeedEnumerator::SeedEnumerator;

    void descend(size_t hi) {
        if (hi == hs.size()) {
            best.offer(detail::extend_envy_free(inst, seed));
            return;
        }
        int h = hs[hi];
        int cap = std::min<int>(inst.uq[h], inst.hpref[h].size());
        std::vector<int> pick;
        for (int s = inst.lq[h]; s <= cap; ++s) choose(hi, h, s, 0, pick);
    }

    void choose(size_t hi, int h, int want, int from, std::vector<int>& pick) {
        if (static_cast<int>(pick.size()) == want) {
            applyAndRecurse(hi, h, pick);
            return;
        }
        int slack = want - static_cast<int>(pick.size());
        for (int i = from; i + slack <= static_cast<int>(inst.hpref[h].size()); ++i) {
            pick.push_back(i);
            choose(hi, h, want, i + 1, pick);
            pick.pop_back();
        }
    }

    void applyAndRecurse(size_t hi, int h, const std::vector<int>& pick) {
        size_t mark = assigned.size();
        bool ok = true;
        for (int i : pick) {
            int r = inst.hpref[h][i];
            if (taken[r] || enviesSeeded(inst, seed, assigned, r, h)) {
                ok = false;
                break;
            }
            seed[r] = h;
            taken[r] = 1;
            assigned.push_back(r);
        }
        if (ok) descend(hi + 1);
        while (assigned.size() > mark) {
            int r = assigned.back();
            assigned.pop_back();
            seed[r] = kUnmatched;
            taken[r] = 0;
        }
    }
};

// Enumerates one assignee per lower-quota hospital, residents distinct.
struct EnumRprime : SeedEnumerator {
    using SeedEnumerator::SeedEnumerator;

    void descend(size_t hi) {
        if (hi == hs.size()) {
            best.offer(detail::extend_envy_free(inst, seed));
            return;
        }
        int h = hs[hi];
        for (int r : inst.hpref[h]) {
            if (taken[r] || enviesSeeded(inst, seed, assigned, r, h)) continue;
            seed[r] = h;
            taken[r] = 1;
            assigned.push_back(r);
            descend(hi + 1);
            assigned.pop_back();
            seed[r] = kUnmatched;
            taken[r] = 0;
        }
    }
};

// Branch-and-prune for 0/1 quotas: each node recomputes a stable matching on
// the surviving edges, stops when the combined matching is feasible, and
// otherwise branches on the first unfilled lower-quota hospital.
struct BranchSd {
    const Instance& inst;
    long long budget;
    long long nodes = 0;
    std::vector<std::vector<char>> alive;  // [resident][hospital]
    std::vector<char> doneR, doneH;
    Matching commit;
    Best best;

    BranchSd(const Instance& i, long long b)
        : inst(i),
          budget(b),
          alive(i.residents(), std::vector<char>(i.hospitals(), 0)),
          doneR(i.residents(), 0),
          doneH(i.hospitals(), 0),
          commit(i.residents()),
          best(i) {
        for (int r = 0; r < inst.residents(); ++r)
            for (int h : inst.rpref[r]) alive[r][h] = 1;
    }

    Matching subStable() const {
        Matching m(inst.residents());
        std::vector<int> cursor(inst.residents(), 0);
        std::vector<std::set<int>> held(inst.hospitals());
        std::deque<int> queue;
        for (int r = 0; r < inst.residents(); ++r)
            if (!doneR[r]) queue.push_back(r);
        while (!queue.empty()) {
            int r = queue.front();
            queue.pop_front();
            while (cursor[r] < static_cast<int>(inst.rpref[r].size())) {
                int h = inst.rpref[r][cursor[r]++];
                if (!alive[r][h] || doneH[h]) continue;
                int rank = inst.hrank[h][r];
                if (static_cast<int>(held[h].size()) < inst.uq[h]) {
                    held[h].insert(rank);
                    m[r] = h;
                    break;
                }
                auto worst = std::prev(held[h].end());
                if (rank < *worst) {
                    int loser = inst.hpref[h][*worst];
                    held[h].erase(worst);
                    held[h].insert(rank);
                    m[loser] = kUnmatched;
                    m[r] = h;
                    queue.push_back(loser);
                    break;
                }
            }
        }
        return m;
    }

    bool clashesWithCommits(int r, int h) const {
        for (int r2 = 0; r2 < inst.residents(); ++r2) {
            if (!doneR[r2]) continue;
            int h2 = commit[r2];
            if (inst.acceptable(r, h2) && inst.prefers(r, h2, h) &&
                inst.hrank[h2][r] < inst.hrank[h2][r2])
                return true;
            if (inst.acceptable(r2, h) && inst.prefers(r2, h, h2) &&
                inst.hrank[h][r2] < inst.hrank[h][r])
                return true;
        }
        return false;
    }

    void node() {
        if (++nodes > budget)
            throw BudgetError("maxefm_branch_sd: explored nodes exceed the budget of " +
                              std::to_string(budget));
        Matching full = subStable();
        for (int r = 0; r < inst.residents(); ++r)
            if (doneR[r]) full[r] = commit[r];
        std::vector<int> load = hospital_loads(inst, full);
        int target = -1;
        for (int h = 0; h < inst.hospitals(); ++h)
            if (load[h] < inst.lq[h]) {
                target = h;
                break;
            }
        if (target == -1) {
            best.offer(full);
            return;
        }
        for (int r : inst.hpref[target]) {
            if (doneR[r] || !alive[r][target] || clashesWithCommits(r, target)) continue;
            std::vector<std::pair<int, int>> undo;
            doneR[r] = 1;
            doneH[target] = 1;
            commit[r] = target;
            // every hospital r prefers to its commitment sheds the residents
            // it ranks below r; matching one of them there would leave r envious
            for (int h2 : inst.rpref[r]) {
                if (h2 == target) break;
                const auto& list = inst.hpref[h2];
                for (size_t i = inst.hrank[h2][r] + 1; i < list.size(); ++i) {
                    int r2 = list[i];
                    if (alive[r2][h2]) {
                        alive[r2][h2] = 0;
                        undo.emplace_back(r2, h2);
                    }
                }
            }
            node();
            for (auto [r2, h2] : undo) alive[r2][h2] = 1;
            commit[r] = kUnmatched;
            doneR[r] = 0;
            doneH[target] = 0;
        }
    }
};

}  // namespace

Matching maxefm_enum_lq(const Instance& inst, long long budget) {
    requireFeasibleEF(inst);
    long long cost = 1;
    for (int h : lqHospitals(inst)) {
        int deg = static_cast<int>(inst.hpref[h].size());
        int cap = std::min(inst.uq[h], deg);
        long long ways = 0;
        for (int s = inst.lq[h]; s <= cap; ++s) ways = satAdd(ways, satChoose(deg, s));
        cost = satMul(cost, ways);
    }
    requireBudget("maxefm_enum_lq", cost, budget);
    EnumLq e(inst);
    e.descend(0);
    if (e.best.size < 0)
        throw InfeasibleError("no feasible envy-free matching exists");
    return e.best.m;
}

Matching maxefm_enum_rprime(const Instance& inst, long long budget) {
    requireUnitQuotas(inst, "maxefm_enum_rprime");
    requireFeasibleEF(inst);
    long long cost = 1;
    for (int h : lqHospitals(inst))
        cost = satMul(cost, static_cast<long long>(inst.hpref[h].size()));
    requireBudget("maxefm_enum_rprime", cost, budget);
    EnumRprime e(inst);
    e.descend(0);
    if (e.best.size < 0)
        throw InfeasibleError("no feasible envy-free matching exists");
    return e.best.m;
}

Matching maxefm_branch_sd(const Instance& inst, long long budget) {
    requireUnitQuotas(inst, "maxefm_branch_sd");
    requireFeasibleEF(inst);
    BranchSd b(inst, budget);
    b.node();
    if (b.best.size < 0)
        throw InfeasibleError("no feasible envy-free matching exists");
    return b.best.m;
}

KernelResult kernelize(const Instance& inst, int k) {
    requireUnitQuotas(inst, "kernelize");
    if (k < 0) throw PreconditionError("kernelize: k must be nonnegative");
    int n = inst.residents();
    int hosts = inst.hospitals();

    KernelResult out;
    out.ell = detail::max_matching_size(inst, inst.uq);
    out.p = detail::deepest_lq_rank(inst);
    out.t = detail::max_shared_open_hospitals(inst);

    Matching ms = stable_matching(inst);
    std::vector<int> load = hospital_loads(inst, ms);
    std::vector<char> inCoverR(n, 0), inCoverH(hosts, 0);
    for (int r = 0; r < n; ++r)
        if (ms[r] != kUnmatched) {
            inCoverR[r] = 1;
            out.coverResidents.push_back(r);
        }
    for (int h = 0; h < hosts; ++h)
        if (load[h] > 0) {
            inCoverH[h] = 1;
            out.coverHospitals.push_back(h);
        }

    int msSize = matching_size(ms);
    if (msSize < k) {
        out.verdict = KernelResult::Verdict::No;
        return out;
    }
    if (deficiency(inst, ms) == 0) {
        out.verdict = KernelResult::Verdict::Yes;
        out.witness = ms;
        return out;
    }

    std::vector<std::vector<char>> keep(n, std::vector<char>(hosts, 0));
    // cover-to-cover edges all stay
    for (int r = 0; r < n; ++r)
        if (inCoverR[r])
            for (int h : inst.rpref[r])
                if (inCoverH[h]) keep[r][h] = 1;
    // a cover hospital keeps its ell+1 best residents outside the cover
    for (int h = 0; h < hosts; ++h) {
        if (!inCoverH[h]) continue;
        int left = out.ell + 1;
        for (int r : inst.hpref[h]) {
            if (inCoverR[r]) continue;
            keep[r][h] = 1;
            if (--left == 0) break;
        }
    }
    // a cover resident keeps its prefix through the last lower-quota hospital
    // and the quota-free hospitals it shares with another cover resident
    std::vector<int> coverListers(hosts, 0);
    for (int r = 0; r < n; ++r)
        if (inCoverR[r])
            for (int h : inst.rpref[r]) coverListers[h]++;
    for (int r = 0; r < n; ++r) {
        if (!inCoverR[r]) continue;
        const auto& list = inst.rpref[r];
        int pr = 0;
        for (int i = 0; i < static_cast<int>(list.size()); ++i)
            if (inst.lq[list[i]] > 0) pr = i + 1;
        for (int i = 0; i < pr; ++i) keep[r][list[i]] = 1;
        for (int h : list)
            if (inst.lq[h] == 0 && coverListers[h] >= 2) keep[r][h] = 1;
    }
    // one extra best edge per cover resident
    for (int r = 0; r < n; ++r) {
        if (!inCoverR[r]) continue;
        for (int h : inst.rpref[r])
            if (!keep[r][h]) {
                keep[r][h] = 1;
                break;
            }
    }

    for (int r = 0; r < n; ++r)
        for (int h : inst.rpref[r])
            if (keep[r][h]) {
                out.markedEdges.emplace_back(r, h);
                if (inCoverR[r] != inCoverH[h]) out.crossEdges++;
            }

    std::vector<int> newR(n, -1), newH(hosts, -1);
    for (int r = 0; r < n; ++r) {
        bool any = false;
        for (int h : inst.rpref[r]) any = any || keep[r][h];
        if (any) {
            newR[r] = static_cast<int>(out.residentMap.size());
            out.residentMap.push_back(r);
        }
    }
    for (int h = 0; h < hosts; ++h) {
        bool any = false;
        for (int r : inst.hpref[h]) any = any || keep[r][h];
        if (any) {
            newH[h] = static_cast<int>(out.hospitalMap.size());
            out.hospitalMap.push_back(h);
        }
    }

    Instance& red = out.reduced;
    red.rpref.resize(out.residentMap.size());
    red.hpref.resize(out.hospitalMap.size());
    red.lq.resize(out.hospitalMap.size());
    red.uq.resize(out.hospitalMap.size());
    for (size_t i = 0; i < out.residentMap.size(); ++i) {
        int r = out.residentMap[i];
        for (int h : inst.rpref[r])
            if (keep[r][h]) red.rpref[i].push_back(newH[h]);
    }
    for (size_t j = 0; j < out.hospitalMap.size(); ++j) {
        int h = out.hospitalMap[j];
        red.lq[j] = inst.lq[h];
        red.uq[j] = inst.uq[h];
        for (int r : inst.hpref[h])
            if (keep[r][h]) red.hpref[j].push_back(newR[r]);
    }
    finalize(red);
    out.verdict = KernelResult::Verdict::Kernel;
    return out;
}

namespace detail {

int deepest_lq_rank(const Instance& inst) {
    int p = 0;
    for (int r = 0; r < inst.residents(); ++r) {
        const auto& list = inst.rpref[r];
        for (int i = 0; i < static_cast<int>(list.size()); ++i)
            if (inst.lq[list[i]] > 0) p = std::max(p, i + 1);
    }
    return p;
}

int max_shared_open_hospitals(const Instance& inst) {
    std::map<std::pair<int, int>, int> shared;
    int t = 0;
    for (int h = 0; h < inst.hospitals(); ++h) {
        if (inst.lq[h] > 0) continue;
        const auto& list = inst.hpref[h];
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                auto key = std::minmax(list[i], list[j]);
                t = std::max(t, ++shared[{key.first, key.second}]);
            }
    }
    return t;
}

}  // namespace detail

}  // namespace hrlq
