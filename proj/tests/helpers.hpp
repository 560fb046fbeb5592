// Fixtures shared by the test suites: the worked examples that recur across
// engines, plus seeded instance generators. The generators live here instead
// of reusing gen_random so the suites that test the generators do not depend
// on them.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hrlq/model.hpp"
#include "hrlq/rng.hpp"

namespace fx {

inline hrlq::Instance make(std::vector<std::vector<int>> rp, std::vector<std::vector<int>> hp,
                           std::vector<int> lq, std::vector<int> uq) {
    hrlq::Instance inst;
    inst.rpref = std::move(rp);
    inst.hpref = std::move(hp);
    inst.lq = std::move(lq);
    inst.uq = std::move(uq);
    hrlq::finalize(inst);
    return inst;
}

// r1: h1,h2; r2: h1; h1 [0,1]: r1,r2; h2 [1,1]: r1. The stable matching
// {(r1,h1)} leaves h2 short; the only feasible envy-free matching is
// {(r1,h2)}.
inline hrlq::Instance shortage() {
    return make({{0, 1}, {0}}, {{0, 1}, {0}}, {0, 1}, {1, 1});
}

// shortage with both lower quotas at 1: no feasible envy-free matching at all.
inline hrlq::Instance starved() {
    return make({{0, 1}, {0}}, {{0, 1}, {0}}, {1, 1}, {1, 1});
}

// n residents all preferring the big hospital h1 [0,n] over h2 [1,1]; both
// hospitals rank r1..rn in index order. Stable matchings starve h2, yet a
// full envy-free matching exists.
inline hrlq::Instance crowd(int n) {
    std::vector<std::vector<int>> rp(n, {0, 1});
    std::vector<int> order(n);
    for (int r = 0; r < n; ++r) order[r] = r;
    return make(rp, {order, order}, {0, 1}, {n, 1});
}

// r1: h1,h3; r2: h2,h3; r3: h2; h1 [0,1]: r1; h2 [0,1]: r2,r3;
// h3 [1,1]: r1,r2. Stable = {(r1,h1),(r2,h2)} is infeasible; relaxed stable
// matchings reach size 3.
inline hrlq::Instance cascade() {
    return make({{0, 2}, {1, 2}, {1}}, {{0}, {1, 2}, {0, 1}}, {0, 0, 1}, {1, 1, 1});
}

// Seeding rsm_approx with {(r3,h2)} stops it at size 2 while the optimum is
// 3, so the 3/2 guarantee is met with equality.
inline hrlq::Instance tightThreeHalves() {
    return make({{0}, {0, 1}, {2, 1}}, {{1, 0}, {1, 2}, {2}}, {0, 1, 0}, {1, 1, 1});
}

// Two instances where augmenting from the given envy-free matching cannot
// grow it although a larger feasible envy-free matching exists (the
// augmentation is maximal, not maximum, outside the short-list class).
inline std::pair<hrlq::Instance, hrlq::Matching> plateauA() {
    hrlq::Instance inst = make({{0, 3}, {1, 2, 3}, {2}}, {{0}, {1}, {1, 2}, {0, 1}},
                               {0, 0, 0, 1}, {1, 1, 1, 1});
    hrlq::Matching m(3);
    m[0] = 0;
    m[1] = 3;
    return {inst, m};
}

inline std::pair<hrlq::Instance, hrlq::Matching> plateauB() {
    hrlq::Instance inst =
        make({{0, 1}, {0}, {2, 1}}, {{0, 1}, {0, 2}, {2}}, {0, 1, 0}, {2, 1, 1});
    hrlq::Matching m(3);
    m[0] = 1;
    m[2] = 2;
    return {inst, m};
}

// Subset preference lists, upper quotas 1..2 (or all 1), sparse lower quotas.
inline hrlq::Instance randomInstance(hrlq::SplitMix64& rng, int maxR, int maxH,
                                     bool unit = false) {
    while (true) {
        int n = rng.range(1, maxR), m = rng.range(1, maxH);
        std::vector<std::vector<int>> rp(n), hp(m);
        for (int r = 0; r < n; ++r) {
            std::vector<int> hs;
            for (int h = 0; h < m; ++h)
                if (rng.chance(1, 2)) hs.push_back(h);
            if (hs.empty()) hs.push_back(rng.range(0, m - 1));
            rng.shuffle(hs);
            rp[r] = hs;
            for (int h : hs) hp[h].push_back(r);
        }
        bool ok = true;
        for (int h = 0; h < m; ++h)
            if (hp[h].empty()) ok = false;
        if (!ok) continue;
        for (int h = 0; h < m; ++h) rng.shuffle(hp[h]);
        std::vector<int> lq(m), uq(m);
        for (int h = 0; h < m; ++h) {
            uq[h] = unit ? 1 : rng.range(1, 2);
            lq[h] = rng.chance(1, 3) ? rng.range(0, std::min<int>(uq[h], hp[h].size())) : 0;
        }
        return make(rp, hp, lq, uq);
    }
}

// Every lower-quota hospital ranks all residents, as the exact complete-list
// solver requires.
inline hrlq::Instance randomCL(hrlq::SplitMix64& rng, int maxR, int maxH) {
    int n = rng.range(1, maxR), m = rng.range(1, maxH);
    int lqCount = rng.range(0, std::min(2, m));
    std::vector<char> isLq(m, 0);
    for (int i = 0; i < lqCount; ++i) isLq[rng.range(0, m - 1)] = 1;
    std::vector<std::vector<int>> rp(n), hp(m);
    for (int h = 0; h < m; ++h) {
        if (isLq[h]) {
            for (int r = 0; r < n; ++r) hp[h].push_back(r);
        } else {
            for (int r = 0; r < n; ++r)
                if (rng.chance(1, 2)) hp[h].push_back(r);
        }
        rng.shuffle(hp[h]);
        for (int r : hp[h]) rp[r].push_back(h);
    }
    for (int r = 0; r < n; ++r) rng.shuffle(rp[r]);
    std::vector<int> lq(m, 0), uq(m);
    int budget = n;
    for (int h = 0; h < m; ++h) {
        uq[h] = rng.range(1, 2);
        if (isLq[h]) {
            lq[h] = std::min(rng.range(1, uq[h]), budget);
            budget -= lq[h];
        }
    }
    return make(rp, hp, lq, uq);
}

// Unit quotas and resident lists of length at most two, the class where the
// augmenting solver is exact.
inline hrlq::Instance random012r(hrlq::SplitMix64& rng, int maxR, int maxH) {
    while (true) {
        int n = rng.range(1, maxR), m = rng.range(1, maxH);
        std::vector<std::vector<int>> rp(n), hp(m);
        for (int r = 0; r < n; ++r) {
            int a = rng.range(0, m - 1);
            rp[r].push_back(a);
            if (m > 1 && rng.chance(2, 3)) {
                int b = rng.range(0, m - 1);
                if (b != a) rp[r].push_back(b);
            }
            if (rng.chance(1, 2) && rp[r].size() == 2) std::swap(rp[r][0], rp[r][1]);
            for (int h : rp[r]) hp[h].push_back(r);
        }
        bool ok = true;
        for (int h = 0; h < m; ++h)
            if (hp[h].empty()) ok = false;
        if (!ok) continue;
        for (int h = 0; h < m; ++h) rng.shuffle(hp[h]);
        std::vector<int> lq(m, 0), uq(m, 1);
        for (int h = 0; h < m; ++h) lq[h] = rng.chance(1, 3) ? 1 : 0;
        return make(rp, hp, lq, uq);
    }
}

// Short resident lists and many unit lower quotas: deferred acceptance often
// leaves a lower quota unfilled, which is what the kernel tests need.
inline hrlq::Instance starvedInstance(hrlq::SplitMix64& rng, int maxR, int maxH) {
    while (true) {
        int n = rng.range(2, maxR), m = rng.range(2, maxH);
        std::vector<std::vector<int>> rp(n), hp(m);
        for (int r = 0; r < n; ++r) {
            int a = rng.range(0, m - 1);
            rp[r].push_back(a);
            int b = rng.range(0, m - 1);
            if (b != a && rng.chance(2, 3)) rp[r].push_back(b);
            if (rp[r].size() == 2 && rng.chance(1, 2)) std::swap(rp[r][0], rp[r][1]);
            for (int h : rp[r]) hp[h].push_back(r);
        }
        bool ok = true;
        for (int h = 0; h < m; ++h)
            if (hp[h].empty()) ok = false;
        if (!ok) continue;
        for (int h = 0; h < m; ++h) rng.shuffle(hp[h]);
        std::vector<int> lq(m), uq(m, 1);
        for (int h = 0; h < m; ++h) lq[h] = rng.chance(1, 2) ? 1 : 0;
        return make(rp, hp, lq, uq);
    }
}

// Resident 0 is hospital 0's favourite and settles there, leaving the last
// hospital's lower quota starved; the crowd of rejects at hospital 0 makes
// the kernel's kept-outsiders cap truncate.
inline hrlq::Instance plantedCrowd(hrlq::SplitMix64& rng, int maxR) {
    while (true) {
        int n = rng.range(6, maxR), m = rng.range(3, 4);
        int star = m - 1;
        std::vector<std::vector<int>> rp(n), hp(m);
        rp[0] = {0, star};
        for (int r = 1; r < n; ++r) {
            rp[r].push_back(0);
            int extra = rng.range(1, m - 2);
            if (rng.chance(1, 2)) rp[r].push_back(extra);
            if (rp[r].size() == 2 && rng.chance(1, 3)) std::swap(rp[r][0], rp[r][1]);
        }
        for (int r = 0; r < n; ++r)
            for (int h : rp[r]) hp[h].push_back(r);
        bool ok = true;
        for (int h = 0; h < m; ++h)
            if (hp[h].empty()) ok = false;
        if (!ok) continue;
        for (int h = 0; h < m; ++h) rng.shuffle(hp[h]);
        for (size_t i = 0; i < hp[0].size(); ++i)
            if (hp[0][i] == 0) std::swap(hp[0][0], hp[0][i]);
        std::vector<int> lq(m, 0), uq(m, 1);
        lq[star] = 1;
        for (int h = 1; h < star; ++h) lq[h] = rng.chance(1, 3) ? 1 : 0;
        return make(rp, hp, lq, uq);
    }
}

// Every resident tops its own private seat, so the shared tail hospitals all
// end up with zero load; single-lister tails past the first force the
// kernel's one-extra-edge rule to drop edges, and the lone starved seat
// keeps the instance deficient.
inline hrlq::Instance plantedTails(hrlq::SplitMix64& rng) {
    int n = rng.range(3, 5), tails = rng.range(3, 5);
    int star = n + tails;
    std::vector<std::vector<int>> rp(n), hp(n + tails + 1);
    for (int r = 0; r < n; ++r) {
        rp[r].push_back(r);
        for (int tl = 0; tl < tails; ++tl)
            if (rng.chance(1, 2)) rp[r].push_back(n + tl);
    }
    for (int tl = 0; tl < tails; ++tl) {
        int r = rng.range(0, n - 1);
        bool has = false;
        for (int h : rp[r]) has = has || (h == n + tl);
        if (!has) rp[r].push_back(n + tl);
    }
    rp[0].push_back(star);
    for (int r = 0; r < n; ++r)
        for (int h : rp[r]) hp[h].push_back(r);
    for (int h = 0; h <= star; ++h) rng.shuffle(hp[h]);
    std::vector<int> lq(n + tails + 1, 0), uq(n + tails + 1, 1);
    lq[star] = 1;
    return make(rp, hp, lq, uq);
}

}  // namespace fx
