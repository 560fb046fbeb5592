#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hrlq/envyfree.hpp"
#include "hrlq/generate.hpp"
#include "hrlq/graph.hpp"
#include "hrlq/model.hpp"
#include "hrlq/oracle.hpp"
#include "hrlq/rng.hpp"
#include "hrlq/stable.hpp"

using namespace hrlq;

namespace {

const Graph kSingle{1, {}};
const Graph kEdge{2, {{0, 1}}};
const Graph kTriangle{3, {{0, 1}, {0, 2}, {1, 2}}};
const Graph kPath{3, {{0, 1}, {1, 2}}};

void checkCoverIdentities(const Graph& g) {
    int want = 3 * g.vertices() - brute_vc(g);
    Instance efm = gen_mvc_efm(g);
    OracleBest a = brute_maxefm(efm, 3 * g.vertices());
    REQUIRE(a.found);
    CHECK(a.value == want);
    CHECK(deficiency(efm, stable_matching(efm)) > 0);

    Instance rsm = gen_mvc_rsm(g);
    OracleBest b = brute_maxrsm(rsm, 3 * g.vertices());
    REQUIRE(b.found);
    CHECK(b.value == want);
}

void checkIndsetIdentities(const Graph& g) {
    for (int k = 1; k <= g.vertices(); ++k) {
        bool independent = brute_is(g, k);
        Instance inst = gen_indset(g, k);
        OracleBest ob = brute_maxefm(inst, inst.residents());
        CHECK((ob.found && ob.value == inst.residents()) == independent);
        Instance unit = gen_indset_unit(g, k);
        OracleBest obUnit = brute_maxefm(unit, unit.residents());
        CHECK((obUnit.found && obUnit.value == unit.residents()) == independent);
    }
}

}  // namespace

TEST_SUITE("generate") {

TEST_CASE("vertex cover gadgets on the textbook graphs") {
    CHECK(gen_mvc_efm(kTriangle).residents() == 9);
    CHECK(gen_mvc_efm(kTriangle).hospitals() == 12);
    CHECK(gen_mvc_rsm(kTriangle).residents() == 9);
    CHECK(gen_mvc_rsm(kTriangle).hospitals() == 9);

    // 3|V| - minimum vertex cover: 3, 5, 7, 8
    for (const Graph* g : {&kSingle, &kEdge, &kTriangle, &kPath}) checkCoverIdentities(*g);
}

TEST_CASE("the gadget layout itself is pinned down") {
    Instance efm = gen_mvc_efm(kSingle);
    CHECK(efm.rpref == std::vector<std::vector<int>>{{0}, {1, 0, 2}, {3, 1, 2}});
    CHECK(efm.hpref == std::vector<std::vector<int>>{{1, 0}, {1, 2}, {2, 1}, {2}});
    CHECK(efm.lq == std::vector<int>{0, 0, 1, 0});
    CHECK(efm.uq == std::vector<int>{1, 1, 1, 1});

    Instance rsm = gen_mvc_rsm(kSingle);
    CHECK(rsm.rpref == std::vector<std::vector<int>>{{2, 0}, {1, 2}, {1}});
    CHECK(rsm.hpref == std::vector<std::vector<int>>{{0}, {1, 2}, {1, 0}});
    CHECK(rsm.lq == std::vector<int>{0, 0, 1});
    CHECK(rsm.uq == std::vector<int>{1, 1, 1});

    // neighbour hospitals are spliced into the middle of the lists
    Instance efmEdge = gen_mvc_efm(kEdge);
    CHECK(efmEdge.rpref[2] == std::vector<int>{3, 1, 4, 2});
    CHECK(efmEdge.hpref[0] == std::vector<int>{1, 5, 0});
    Instance rsmEdge = gen_mvc_rsm(kEdge);
    CHECK(rsmEdge.rpref[0] == std::vector<int>{2, 4, 0});
    CHECK(rsmEdge.hpref[1] == std::vector<int>{1, 3, 2});
}

TEST_CASE("independent set gadgets") {
    Instance tri1 = gen_indset(kTriangle, 1);
    CHECK(tri1.residents() == 6);
    CHECK(tri1.hospitals() == 4);
    Instance triUnit = gen_indset_unit(kTriangle, 1);
    CHECK(triUnit.residents() == 6);
    CHECK(triUnit.hospitals() == 10);  // 2|E| + |V| seats plus k quota seats

    for (const Graph* g : {&kSingle, &kEdge, &kTriangle, &kPath})
        checkIndsetIdentities(*g);

    Graph edgeless{3, {}};
    checkIndsetIdentities(edgeless);

    CHECK_THROWS_AS(gen_indset(kTriangle, 0), PreconditionError);
    CHECK_THROWS_AS(gen_indset(kTriangle, 4), PreconditionError);
    CHECK_THROWS_AS(gen_indset_unit(kTriangle, 0), PreconditionError);
    CHECK_THROWS_AS(gen_indset_unit(kTriangle, 4), PreconditionError);
}

TEST_CASE("identities hold on random graphs too") {
    SplitMix64 rng(606060);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.range(1, 5);
        Graph g{n, {}};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(1, 2)) g.edges.push_back({u, v});
        checkCoverIdentities(g);
        checkIndsetIdentities(g);
    }
}

TEST_CASE("random families respect their contracts") {
    for (const char* family : {"random", "random-cl", "random-012r"}) {
        for (int i = 0; i < 60; ++i) {
            RandomSpec spec;
            spec.family = family;
            spec.residents = 1 + i % 7;
            spec.hospitals = 1 + i % 5;
            spec.maxUpper = 1 + i % 2;
            spec.lqHospitals = i % (std::min(spec.residents, spec.hospitals) + 1);
            spec.seed = 1000 + i;
            Instance inst = gen_random(spec);
            CHECK(validate_instance(inst).empty());
            CHECK(inst.residents() == spec.residents);
            CHECK(inst.hospitals() == spec.hospitals);

            int positive = 0, total = 0;
            for (int q : inst.lq) {
                positive += q > 0;
                total += q;
            }
            CHECK(positive == spec.lqHospitals);
            CHECK(total <= spec.residents);

            Instance again = gen_random(spec);
            CHECK(again.rpref == inst.rpref);
            CHECK(again.hpref == inst.hpref);
            CHECK(again.lq == inst.lq);
            CHECK(again.uq == inst.uq);

            if (spec.family == std::string("random-cl")) CHECK(is_cl_restricted(inst));
            if (spec.family == std::string("random-012r")) {
                for (const auto& l : inst.rpref) CHECK(l.size() <= 2);
                for (int q : inst.uq) CHECK(q == 1);
            }
        }
    }
}

TEST_CASE("unsatisfiable or malformed random specs are refused") {
    RandomSpec spec;
    spec.residents = 2;
    spec.hospitals = 3;
    spec.lqHospitals = 3;  // three quotas cannot share two residents
    CHECK_THROWS_AS(gen_random(spec), PreconditionError);

    RandomSpec none;
    none.residents = 0;
    CHECK_THROWS_AS(gen_random(none), PreconditionError);

    RandomSpec odd;
    odd.family = "zigzag";
    CHECK_THROWS_AS(gen_random(odd), PreconditionError);
}

}  // TEST_SUITE
