#include "hrlq/envyfree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "hrlq/stable.hpp"
#include "internal.hpp"

namespace hrlq {

bool is_cl_restricted(const Instance& inst) {
    for (int h = 0; h < inst.hospitals(); ++h)
        if (inst.lq[h] > 0 &&
            static_cast<int>(inst.hpref[h].size()) != inst.residents())
            return false;
    return true;
}

std::optional<Matching> ef_feasible(const Instance& inst) {
    Instance cut;
    cut.rpref.resize(inst.residents());
    cut.hpref.resize(inst.hospitals());
    cut.lq.assign(inst.hospitals(), 0);
    cut.uq.resize(inst.hospitals());
    for (int h = 0; h < inst.hospitals(); ++h)
        cut.uq[h] = std::max(inst.lq[h], 1);  // dropped hospitals keep an empty list
    for (int r = 0; r < inst.residents(); ++r)
        for (int h : inst.rpref[r])
            if (inst.lq[h] > 0) cut.rpref[r].push_back(h);
    for (int h = 0; h < inst.hospitals(); ++h)
        if (inst.lq[h] > 0) cut.hpref[h] = inst.hpref[h];
    finalize(cut);

    Matching m = stable_matching(cut);
    std::vector<int> load = hospital_loads(cut, m);
    for (int h = 0; h < inst.hospitals(); ++h)
        if (load[h] < inst.lq[h]) return std::nullopt;
    return m;
}

Matching maxefm_cl(const Instance& inst, long long* proposals) {
    if (!is_cl_restricted(inst))
        throw PreconditionError(
            "maxefm_cl: every lower-quota hospital must rank all residents");
    int n = inst.residents();
    long long want = 0;
    for (int h = 0; h < inst.hospitals(); ++h) want += inst.lq[h];
    if (want > n)
        throw InfeasibleError("lower quotas exceed the number of residents");

    Matching m(n);
    std::vector<int> cursor(n, 0);
    std::vector<std::set<int>> held(inst.hospitals());
    long long made = 0;
    int d = static_cast<int>(want);  // total lower-quota shortfall
    int k = n;                       // unmatched residents
    std::deque<int> queue;
    for (int r = 0; r < n; ++r) queue.push_back(r);

    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        if (cursor[r] >= static_cast<int>(inst.rpref[r].size())) continue;
        int h = inst.rpref[r][cursor[r]++];
        ++made;
        int rank = inst.hrank[h][r];
        int load = static_cast<int>(held[h].size());
        if (load < inst.lq[h]) {
            held[h].insert(rank);
            m[r] = h;
            --d;
            --k;
        } else if (load == inst.uq[h] || k == d) {
            // h may not grow: it keeps the better of r and its worst assignee
            if (!held[h].empty() && rank < *held[h].rbegin()) {
                auto worst = std::prev(held[h].end());
                int loser = inst.hpref[h][*worst];
                held[h].erase(worst);
                held[h].insert(rank);
                m[loser] = kUnmatched;
                m[r] = h;
                queue.push_back(loser);
            } else {
                queue.push_back(r);
            }
        } else {
            held[h].insert(rank);
            m[r] = h;
            --k;
        }
    }
    if (proposals) *proposals = made;
    return m;
}

ThresholdTable threshold_residents(const Instance& inst, const Matching& m) {
    ThresholdTable t;
    t.resident.assign(inst.hospitals(), -1);
    for (int h = 0; h < inst.hospitals(); ++h)
        for (int r : inst.hpref[h])
            if (inst.prefers(r, h, m[r])) {
                t.resident[h] = r;
                break;
            }
    return t;
}

namespace detail {

Matching extend_envy_free(const Instance& inst, const Matching& m) {
    constexpr int kOpen = std::numeric_limits<int>::max();
    int n = inst.residents();
    int hosts = inst.hospitals();
    std::vector<int> load = hospital_loads(inst, m);

    // tau[h]: best rank among matched residents that would envy a newcomer at
    // h; anyone h ranks below it may not enter.
    std::vector<int> tau(hosts, kOpen);
    for (int r = 0; r < n; ++r) {
        if (m[r] == kUnmatched) continue;
        for (int h : inst.rpref[r]) {
            if (h == m[r]) break;
            tau[h] = std::min(tau[h], inst.hrank[h][r]);
        }
    }

    std::vector<int> cap(hosts);
    for (int h = 0; h < hosts; ++h) cap[h] = inst.uq[h] - load[h];

    Instance rest;
    rest.rpref.resize(n);
    rest.hpref.resize(hosts);
    rest.lq.assign(hosts, 0);
    rest.uq.resize(hosts);
    for (int h = 0; h < hosts; ++h) rest.uq[h] = std::max(cap[h], 1);
    for (int r = 0; r < n; ++r) {
        if (m[r] != kUnmatched) continue;
        for (int h : inst.rpref[r])
            if (cap[h] > 0 && inst.hrank[h][r] < tau[h])
                rest.rpref[r].push_back(h);
    }
    for (int h = 0; h < hosts; ++h) {
        if (cap[h] <= 0) continue;
        for (int r : inst.hpref[h])
            if (m[r] == kUnmatched && inst.hrank[h][r] < tau[h])
                rest.hpref[h].push_back(r);
    }
    finalize(rest);

    Matching grown = stable_matching(rest);
    Matching out = m;
    for (int r = 0; r < n; ++r)
        if (m[r] == kUnmatched && grown[r] != kUnmatched) out[r] = grown[r];
    return out;
}

}  // namespace detail

Matching extend_to_max_ef(const Instance& inst, const Matching& m) {
    require_matching(inst, m);
    if (!is_feasible(inst, m))
        throw PreconditionError("extend_to_max_ef: matching is not feasible");
    if (!is_envy_free(inst, m))
        throw PreconditionError("extend_to_max_ef: matching is not envy-free");
    return detail::extend_envy_free(inst, m);
}

namespace {

// Surviving non-matching edges per resident: drops edges below a hospital's
// threshold resident and edges that would demote a matched resident.
std::vector<std::vector<int>> survivingEdges(const Instance& inst,
                                             const Matching& m) {
    ThresholdTable tt = threshold_residents(inst, m);
    std::vector<std::vector<int>> allow(inst.residents());
    for (int r = 0; r < inst.residents(); ++r) {
        for (int h : inst.rpref[r]) {
            if (m[r] == h) continue;
            int thr = tt.resident[h];
            if (thr != -1 && inst.hrank[h][thr] < inst.hrank[h][r]) continue;
            if (m[r] != kUnmatched && inst.prefers(r, m[r], h)) continue;
            allow[r].push_back(h);
        }
    }
    return allow;
}

// Breadth-first alternating search from unmatched resident r0: forward along
// surviving edges, back along matching edges. Applies the flip when it finds
// an under-subscribed hospital.
bool augmentFrom(const Instance& inst, Matching& m,
                 const std::vector<int>& load,
                 const std::vector<std::vector<int>>& allow,
                 const std::vector<std::vector<int>>& assignees, int r0) {
    std::vector<int> parentOfHosp(inst.hospitals(), -1);
    std::vector<char> seenH(inst.hospitals(), 0), seenR(inst.residents(), 0);
    std::deque<int> queue{r0};
    seenR[r0] = 1;
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        for (int h : allow[r]) {
            if (seenH[h]) continue;
            seenH[h] = 1;
            parentOfHosp[h] = r;
            if (load[h] < inst.uq[h]) {
                for (int cur = h;;) {
                    int giver = parentOfHosp[cur];
                    int prev = m[giver];
                    m[giver] = cur;
                    if (prev == kUnmatched) break;
                    cur = prev;
                }
                return true;
            }
            for (int occ : assignees[h])
                if (!seenR[occ]) {
                    seenR[occ] = 1;
                    queue.push_back(occ);
                }
        }
    }
    return false;
}

Matching augmentLoop(const Instance& inst, Matching m) {
    for (;;) {
        auto allow = survivingEdges(inst, m);
        auto load = hospital_loads(inst, m);
        auto assignees = hospital_assignees(inst, m);
        bool advanced = false;
        for (int r0 = 0; r0 < inst.residents() && !advanced; ++r0)
            if (m[r0] == kUnmatched)
                advanced = augmentFrom(inst, m, load, allow, assignees, r0);
        if (!advanced) return m;
    }
}

}  // namespace

Matching maximal_ef_augment(const Instance& inst) {
    std::optional<Matching> seed = ef_feasible(inst);
    if (!seed) throw InfeasibleError("no feasible envy-free matching exists");
    return augmentLoop(inst, *seed);
}

Matching maximal_ef_augment(const Instance& inst, const Matching& m0) {
    require_matching(inst, m0);
    if (!is_feasible(inst, m0))
        throw PreconditionError("maximal_ef_augment: seed is not feasible");
    if (!is_envy_free(inst, m0))
        throw PreconditionError("maximal_ef_augment: seed is not envy-free");
    return augmentLoop(inst, m0);
}

}  // namespace hrlq
