#include "hrlq/generate.hpp"

#include <algorithm>
#include <numeric>

#include "hrlq/rng.hpp"

namespace hrlq {

namespace {

std::vector<std::vector<int>> sortedNeighbors(const Graph& g) {
    auto nb = graph_neighbors(g);
    for (auto& list : nb) std::sort(list.begin(), list.end());
    return nb;
}

void checkK(const Graph& g, int k) {
    if (k < 1 || k > g.vertices())
        throw PreconditionError("independent-set size k must be between 1 and the vertex count");
}

}  // namespace

Instance gen_indset(const Graph& g, int k) {
    require_graph(g);
    checkK(g, k);
    int n = g.vertices(), me = g.edge_count();
    auto inc = graph_incident_edges(g);

    Instance inst;
    inst.rpref.resize(n + me);
    inst.hpref.resize(n + 1);
    inst.lq.assign(n + 1, 0);
    inst.uq.assign(n + 1, 1);
    for (int i = 0; i < n; ++i) {
        inst.rpref[i] = {i, n};
        inst.hpref[i].push_back(i);
        for (int e : inc[i]) inst.hpref[i].push_back(n + e);
        inst.uq[i] = static_cast<int>(inc[i].size()) + 1;
    }
    for (int e = 0; e < me; ++e) {
        auto [u, v] = g.edges[e];
        inst.rpref[n + e] = {std::min(u, v), std::max(u, v)};
    }
    inst.hpref[n].resize(n);
    std::iota(inst.hpref[n].begin(), inst.hpref[n].end(), 0);
    inst.lq[n] = k;
    inst.uq[n] = k;
    finalize(inst);
    return inst;
}

Instance gen_indset_unit(const Graph& g, int k) {
    require_graph(g);
    checkK(g, k);
    int n = g.vertices(), me = g.edge_count();
    auto inc = graph_incident_edges(g);

    std::vector<int> off(n + 1, 0);
    for (int i = 0; i < n; ++i) off[i + 1] = off[i] + static_cast<int>(inc[i].size()) + 1;
    int seats = off[n];  // one block of deg+1 unit seats per vertex

    Instance inst;
    inst.rpref.resize(n + me);
    inst.hpref.resize(seats + k);
    inst.lq.assign(seats + k, 0);
    inst.uq.assign(seats + k, 1);
    for (int i = 0; i < n; ++i) {
        for (int s = off[i]; s < off[i + 1]; ++s) {
            inst.rpref[i].push_back(s);
            inst.hpref[s].push_back(i);
            for (int e : inc[i]) inst.hpref[s].push_back(n + e);
        }
        for (int x = 0; x < k; ++x) inst.rpref[i].push_back(seats + x);
    }
    for (int e = 0; e < me; ++e) {
        auto [a, b] = g.edges[e];
        int u = std::min(a, b), v = std::max(a, b);
        for (int s = off[u]; s < off[u + 1]; ++s) inst.rpref[n + e].push_back(s);
        for (int s = off[v]; s < off[v + 1]; ++s) inst.rpref[n + e].push_back(s);
    }
    for (int x = 0; x < k; ++x) {
        inst.hpref[seats + x].resize(n);
        std::iota(inst.hpref[seats + x].begin(), inst.hpref[seats + x].end(), 0);
        inst.lq[seats + x] = 1;
    }
    finalize(inst);
    return inst;
}

Instance gen_mvc_efm(const Graph& g) {
    require_graph(g);
    int n = g.vertices();
    auto nb = sortedNeighbors(g);

    Instance inst;
    inst.rpref.resize(3 * n);
    inst.hpref.resize(4 * n);
    inst.lq.assign(4 * n, 0);
    inst.uq.assign(4 * n, 1);
    for (int i = 0; i < n; ++i) {
        int r1 = 3 * i, r2 = 3 * i + 1, r3 = 3 * i + 2;
        int h1 = 4 * i, h2 = 4 * i + 1, h3 = 4 * i + 2, h4 = 4 * i + 3;
        inst.rpref[r1] = {h1};
        inst.rpref[r2] = {h2, h1, h3};
        inst.rpref[r3] = {h4, h2};
        for (int j : nb[i]) inst.rpref[r3].push_back(4 * j);
        inst.rpref[r3].push_back(h3);
        inst.hpref[h1] = {r2};
        for (int j : nb[i]) inst.hpref[h1].push_back(3 * j + 2);
        inst.hpref[h1].push_back(r1);
        inst.hpref[h2] = {r2, r3};
        inst.hpref[h3] = {r3, r2};
        inst.hpref[h4] = {r3};
        inst.lq[h3] = 1;
    }
    finalize(inst);
    return inst;
}

Instance gen_mvc_rsm(const Graph& g) {
    require_graph(g);
    int n = g.vertices();
    auto nb = sortedNeighbors(g);

    Instance inst;
    inst.rpref.resize(3 * n);
    inst.hpref.resize(3 * n);
    inst.lq.assign(3 * n, 0);
    inst.uq.assign(3 * n, 1);
    for (int i = 0; i < n; ++i) {
        int r1 = 3 * i, r2 = 3 * i + 1, r3 = 3 * i + 2;
        int h1 = 3 * i, h2 = 3 * i + 1, h3 = 3 * i + 2;
        inst.rpref[r1] = {h3};
        for (int j : nb[i]) inst.rpref[r1].push_back(3 * j + 1);
        inst.rpref[r1].push_back(h1);
        inst.rpref[r2] = {h2, h3};
        inst.rpref[r3] = {h2};
        inst.hpref[h1] = {r1};
        inst.hpref[h2] = {r2};
        for (int j : nb[i]) inst.hpref[h2].push_back(3 * j);
        inst.hpref[h2].push_back(r3);
        inst.hpref[h3] = {r2, r1};
        inst.lq[h3] = 1;
    }
    finalize(inst);
    return inst;
}

namespace {

std::vector<char> pickLqSet(SplitMix64& rng, int hospitals, int count) {
    std::vector<int> ids(hospitals);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    std::vector<char> isLq(hospitals, 0);
    for (int i = 0; i < count; ++i) isLq[ids[i]] = 1;
    return isLq;
}

// hand out positive lower quotas left to right, never promising more seats
// than residents exist or than the hospital lists
void assignLq(SplitMix64& rng, Instance& inst, const std::vector<char>& isLq, int residents) {
    int remaining = 0;
    for (char f : isLq) remaining += f;
    int budget = residents;
    for (int h = 0; h < inst.hospitals(); ++h) {
        if (!isLq[h]) continue;
        --remaining;
        int cap = std::min<int>({inst.uq[h], budget - remaining,
                                 static_cast<int>(inst.hpref[h].size())});
        inst.lq[h] = rng.range(1, std::max(1, cap));
        budget -= inst.lq[h];
    }
}

Instance randomGeneral(SplitMix64& rng, const RandomSpec& spec, bool clRestricted) {
    int n = spec.residents, m = spec.hospitals;
    std::vector<char> isLq = pickLqSet(rng, m, spec.lqHospitals);

    Instance inst;
    inst.rpref.resize(n);
    inst.hpref.resize(m);
    inst.lq.assign(m, 0);
    inst.uq.assign(m, 1);
    for (int r = 0; r < n; ++r) {
        for (int h = 0; h < m; ++h)
            if ((clRestricted && isLq[h]) || rng.chance(1, 2)) inst.rpref[r].push_back(h);
        if (inst.rpref[r].empty()) inst.rpref[r].push_back(static_cast<int>(rng.bounded(m)));
        rng.shuffle(inst.rpref[r]);
    }
    for (int h = 0; h < m; ++h)
        if (isLq[h]) {
            bool listed = false;
            for (int r = 0; r < n; ++r)
                for (int h2 : inst.rpref[r]) listed = listed || (h2 == h);
            if (!listed) inst.rpref[rng.bounded(n)].push_back(h);
        }
    for (int r = 0; r < n; ++r)
        for (int h : inst.rpref[r]) inst.hpref[h].push_back(r);
    for (int h = 0; h < m; ++h) {
        rng.shuffle(inst.hpref[h]);
        inst.uq[h] = rng.range(1, spec.maxUpper);
    }
    assignLq(rng, inst, isLq, n);
    finalize(inst);
    return inst;
}

Instance randomShortLists(SplitMix64& rng, const RandomSpec& spec) {
    int n = spec.residents, m = spec.hospitals;
    std::vector<char> isLq = pickLqSet(rng, m, spec.lqHospitals);

    Instance inst;
    inst.rpref.resize(n);
    inst.hpref.resize(m);
    inst.lq.assign(m, 0);
    inst.uq.assign(m, 1);
    for (int r = 0; r < n; ++r) {
        int a = static_cast<int>(rng.bounded(m));
        inst.rpref[r].push_back(a);
        if (rng.chance(2, 3)) {
            int b = static_cast<int>(rng.bounded(m));
            if (b != a) inst.rpref[r].push_back(b);
        }
    }
    std::vector<int> count(m, 0);
    for (int r = 0; r < n; ++r)
        for (int h : inst.rpref[r]) ++count[h];
    for (int h = 0; h < m; ++h) {
        if (!isLq[h] || count[h] > 0) continue;
        // a spot is a short list to append to, or an entry safe to overwrite:
        // one that is not the sole listing of some other lower-quota hospital.
        // At least one spot exists because lq hospitals never outnumber
        // residents, so h never duplicates an entry of its chosen list.
        std::vector<std::pair<int, int>> spots;
        for (int r = 0; r < n; ++r) {
            if (inst.rpref[r].size() < 2) {
                spots.push_back({r, -1});
                continue;
            }
            for (int j = 0; j < static_cast<int>(inst.rpref[r].size()); ++j) {
                int e = inst.rpref[r][j];
                if (!isLq[e] || count[e] > 1) spots.push_back({r, j});
            }
        }
        auto [r, j] = spots[rng.bounded(spots.size())];
        if (j < 0) {
            inst.rpref[r].push_back(h);
        } else {
            --count[inst.rpref[r][j]];
            inst.rpref[r][j] = h;
        }
        ++count[h];
    }
    for (int r = 0; r < n; ++r)
        for (int h : inst.rpref[r]) inst.hpref[h].push_back(r);
    for (int h = 0; h < m; ++h) {
        rng.shuffle(inst.hpref[h]);
        if (isLq[h]) inst.lq[h] = 1;
    }
    finalize(inst);
    return inst;
}

}  // namespace

Instance gen_random(const RandomSpec& spec) {
    if (spec.residents < 1 || spec.hospitals < 1)
        throw PreconditionError("gen_random: need at least one resident and one hospital");
    if (spec.maxUpper < 1)
        throw PreconditionError("gen_random: the upper-quota cap must be at least 1");
    if (spec.lqHospitals < 0 || spec.lqHospitals > spec.hospitals)
        throw PreconditionError("gen_random: lower-quota hospital count out of range");
    if (spec.lqHospitals > spec.residents)
        throw PreconditionError(
            "gen_random: unsatisfiable, lower quotas would outnumber the residents");

    SplitMix64 rng(spec.seed);
    if (spec.family == "random") return randomGeneral(rng, spec, false);
    if (spec.family == "random-cl") return randomGeneral(rng, spec, true);
    if (spec.family == "random-012r") return randomShortLists(rng, spec);
    throw PreconditionError("gen_random: unknown family '" + spec.family + "'");
}

}  // namespace hrlq
