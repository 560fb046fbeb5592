#include "hrlq/stable.hpp"

#include <deque>
#include <set>

#include "hrlq/rng.hpp"
#include "internal.hpp"

namespace hrlq {

namespace {

// One proposal by resident r. Holdings are per-hospital rank sets, so the
// current worst assignee is the last element. Returns the evicted resident,
// or kUnmatched if nobody was displaced.
struct Engine {
    const Instance& inst;
    Matching m;
    std::vector<int> cursor;                 // next list position to try
    std::vector<std::set<int>> held;         // per hospital, ranks of assignees

    explicit Engine(const Instance& i)
        : inst(i), m(i.residents()), cursor(i.residents(), 0), held(i.hospitals()) {}

    bool exhausted(int r) const {
        return cursor[r] >= static_cast<int>(inst.rpref[r].size());
    }

    // Advances r by one proposal; true if r is now matched.
    // If someone was evicted, *evicted names them.
    bool propose(int r, int* evicted) {
        *evicted = kUnmatched;
        int h = inst.rpref[r][cursor[r]++];
        int rank = inst.hrank[h][r];
        if (static_cast<int>(held[h].size()) < inst.uq[h]) {
            held[h].insert(rank);
            m[r] = h;
            return true;
        }
        auto worst = std::prev(held[h].end());
        if (rank < *worst) {
            int loser = inst.hpref[h][*worst];
            held[h].erase(worst);
            held[h].insert(rank);
            m[loser] = kUnmatched;
            m[r] = h;
            *evicted = loser;
            return true;
        }
        return false;  // h prefers everyone it holds
    }
};

}  // namespace

Matching stable_matching(const Instance& inst) {
    Engine e(inst);
    std::deque<int> queue;
    for (int r = 0; r < inst.residents(); ++r) queue.push_back(r);
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        if (e.exhausted(r)) continue;
        int evicted;
        if (!e.propose(r, &evicted))
            queue.push_back(r);
        else if (evicted != kUnmatched)
            queue.push_back(evicted);
    }
    return e.m;
}

Matching stable_matching_randomized(const Instance& inst, uint64_t seed) {
    Engine e(inst);
    SplitMix64 rng(seed);
    std::vector<int> active;
    for (int r = 0; r < inst.residents(); ++r) active.push_back(r);
    while (!active.empty()) {
        size_t i = rng.bounded(active.size());
        int r = active[i];
        if (e.exhausted(r)) {
            active[i] = active.back();
            active.pop_back();
            continue;
        }
        int evicted;
        if (e.propose(r, &evicted)) {
            active[i] = active.back();
            active.pop_back();
            if (evicted != kUnmatched) active.push_back(evicted);
        }
    }
    return e.m;
}

StableFeasibility stable_is_feasible(const Instance& inst) {
    StableFeasibility out;
    out.matching = stable_matching(inst);
    out.deficiency = deficiency(inst, out.matching);
    out.feasible = out.deficiency == 0;
    return out;
}

RuralProfile rural_hospitals_profile(const Instance& inst) {
    Matching m = stable_matching(inst);
    RuralProfile p;
    p.counts = hospital_loads(inst, m);
    p.matched.assign(inst.residents(), 0);
    for (int r = 0; r < inst.residents(); ++r) p.matched[r] = (m[r] != kUnmatched);
    return p;
}

namespace detail {

namespace {

struct Augmenter {
    const Instance& inst;
    const std::vector<int>& cap;
    std::vector<std::vector<int>> slots;  // hospital -> residents held
    std::vector<int> assign;
    std::vector<char> seen;  // hospitals visited in the current search

    Augmenter(const Instance& i, const std::vector<int>& c)
        : inst(i), cap(c), slots(i.hospitals()), assign(i.residents(), kUnmatched) {}

    bool place(int r) {
        for (int h : inst.rpref[r]) {
            if (seen[h] || cap[h] == 0) continue;
            seen[h] = 1;
            if (static_cast<int>(slots[h].size()) < cap[h]) {
                slots[h].push_back(r);
                assign[r] = h;
                return true;
            }
            for (int& occ : slots[h])
                if (place(occ)) {  // occ found room elsewhere, r takes its slot
                    occ = r;
                    assign[r] = h;
                    return true;
                }
        }
        return false;
    }
};

}  // namespace

std::vector<int> max_matching_assignment(const Instance& inst,
                                         const std::vector<int>& cap) {
    Augmenter a(inst, cap);
    for (int r = 0; r < inst.residents(); ++r) {
        a.seen.assign(inst.hospitals(), 0);
        a.place(r);
    }
    return a.assign;
}

int max_matching_size(const Instance& inst, const std::vector<int>& cap) {
    std::vector<int> assign = max_matching_assignment(inst, cap);
    int size = 0;
    for (int h : assign) size += (h != kUnmatched);
    return size;
}

}  // namespace detail

}  // namespace hrlq
