#include "hrlq/relaxed.hpp"

#include <deque>
#include <set>

#include "internal.hpp"

namespace hrlq {

Matching minimal_feasible_matching(const Instance& inst) {
    std::vector<int> assign = detail::max_matching_assignment(inst, inst.lq);
    long long want = 0, got = 0;
    for (int h = 0; h < inst.hospitals(); ++h) want += inst.lq[h];
    for (int h : assign) got += (h != kUnmatched);
    if (got < want) throw InfeasibleError("lower quotas cannot all be met");
    Matching m(inst.residents());
    m.at = assign;
    return m;
}

namespace {

RelaxedResult runLevels(const Instance& inst, Matching m) {
    int n = inst.residents();
    RelaxedResult out;
    out.level.assign(n, 1);
    std::vector<int> cursor(n, 0);
    // per hospital, assignee ranks split by level; the worst is the last
    std::vector<std::set<int>> held0(inst.hospitals()), held1(inst.hospitals());
    std::deque<int> queue;
    for (int r = 0; r < n; ++r) {
        if (m[r] != kUnmatched) {
            out.level[r] = 0;
            held0[m[r]].insert(inst.hrank[m[r]][r]);
        } else {
            queue.push_back(r);
        }
    }

    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        if (cursor[r] >= static_cast<int>(inst.rpref[r].size())) continue;
        int h = inst.rpref[r][cursor[r]++];
        int rank = inst.hrank[h][r];
        int load = static_cast<int>(held0[h].size() + held1[h].size());
        if (load < inst.uq[h]) {
            held1[h].insert(rank);
            m[r] = h;
        } else if (!held0[h].empty()) {
            // any level-1 proposer outranks every level-0 assignee
            auto worst = std::prev(held0[h].end());
            int loser = inst.hpref[h][*worst];
            held0[h].erase(worst);
            held1[h].insert(rank);
            m[loser] = kUnmatched;
            out.level[loser] = 1;
            cursor[loser] = 0;
            m[r] = h;
            queue.push_back(loser);
        } else if (rank < *held1[h].rbegin()) {
            auto worst = std::prev(held1[h].end());
            int loser = inst.hpref[h][*worst];
            held1[h].erase(worst);
            held1[h].insert(rank);
            m[loser] = kUnmatched;
            m[r] = h;
            queue.push_back(loser);  // stays level 1, continues down its list
        } else {
            queue.push_back(r);
        }
    }
    out.matching = m;
    return out;
}

}  // namespace

RelaxedResult rsm_approx(const Instance& inst) {
    return runLevels(inst, minimal_feasible_matching(inst));
}

RelaxedResult rsm_approx(const Instance& inst, const Matching& m0) {
    require_matching(inst, m0);
    std::vector<int> load = hospital_loads(inst, m0);
    for (int h = 0; h < inst.hospitals(); ++h)
        if (load[h] != inst.lq[h])
            throw PreconditionError(
                "rsm_approx: seed must fill every hospital to exactly its lower quota");
    return runLevels(inst, m0);
}

}  // namespace hrlq
