#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hrlq/model.hpp"
#include "hrlq/oracle.hpp"
#include "hrlq/relaxed.hpp"
#include "hrlq/rng.hpp"
#include "hrlq/stable.hpp"

using namespace hrlq;

TEST_SUITE("relaxed") {

TEST_CASE("minimal feasible matching fills quotas exactly") {
    Instance shortage = fx::shortage();
    Matching m = minimal_feasible_matching(shortage);
    CHECK(hospital_loads(shortage, m) == shortage.lq);

    Instance starved = fx::starved();
    Matching both = minimal_feasible_matching(starved);
    CHECK(hospital_loads(starved, both) == starved.lq);

    // one resident cannot satisfy two unit lower quotas
    Instance cramped = fx::make({{0, 1}}, {{0}, {0}}, {1, 1}, {1, 1});
    CHECK_THROWS_AS(minimal_feasible_matching(cramped), InfeasibleError);

    SplitMix64 rng(710);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = fx::randomInstance(rng, 6, 4);
        try {
            Matching seed = minimal_feasible_matching(inst);
            CHECK(validate_matching(inst, seed).empty());
            CHECK(hospital_loads(inst, seed) == inst.lq);
        } catch (const InfeasibleError&) {
            CHECK_FALSE(brute_maxrsm(inst).found);
        }
    }
}

TEST_CASE("worked examples") {
    Instance shortage = fx::shortage();
    RelaxedResult res = rsm_approx(shortage);
    CHECK(matching_size(res.matching) == 2);
    CHECK(is_feasible(shortage, res.matching));
    CHECK(is_relaxed_stable(shortage, res.matching).ok);

    Instance cascade = fx::cascade();
    CHECK(brute_maxrsm(cascade).value == 3);
    // two hand-checked relaxed stable matchings of different sizes
    Matching small(3);
    small[0] = 2;
    small[1] = 1;
    CHECK(is_feasible(cascade, small));
    CHECK(is_relaxed_stable(cascade, small).ok);
    Matching large(3);
    large[0] = 0;
    large[1] = 2;
    large[2] = 1;
    CHECK(is_feasible(cascade, large));
    CHECK(is_relaxed_stable(cascade, large).ok);
    CHECK_FALSE(is_feasible(cascade, stable_matching(cascade)));
}

TEST_CASE("the 3/2 factor is attained with equality") {
    Instance tight = fx::tightThreeHalves();
    Matching seed(3);
    seed[2] = 1;
    RelaxedResult res = rsm_approx(tight, seed);
    CHECK(matching_size(res.matching) == 2);
    CHECK(res.matching[1] == 0);
    CHECK(res.matching[2] == 1);
    CHECK(is_relaxed_stable(tight, res.matching).ok);

    OracleBest ob = brute_maxrsm(tight);
    REQUIRE(ob.found);
    CHECK(ob.value == 3);
    CHECK(3 * matching_size(res.matching) == 2 * ob.value);
}

TEST_CASE("approximation behaviour on random instances") {
    SplitMix64 rng(77001);
    int feasible = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        Instance inst = fx::randomInstance(rng, 6, 4);
        RelaxedResult res;
        try {
            res = rsm_approx(inst);
        } catch (const InfeasibleError&) {
            CHECK_FALSE(brute_maxrsm(inst).found);
            continue;
        }
        ++feasible;
        OracleBest ob = brute_maxrsm(inst);
        REQUIRE(ob.found);
        const Matching& m = res.matching;
        CHECK(validate_matching(inst, m).empty());
        CHECK(is_feasible(inst, m));
        CHECK(is_relaxed_stable(inst, m).ok);
        CHECK(3 * matching_size(m) >= 2 * ob.value);

        // level-0 residents stay within the lower quotas, and only they block
        std::vector<int> zeroLoad(inst.hospitals(), 0);
        for (int r = 0; r < inst.residents(); ++r)
            if (m[r] != kUnmatched && res.level[r] == 0) zeroLoad[m[r]]++;
        for (int h = 0; h < inst.hospitals(); ++h) CHECK(zeroLoad[h] <= inst.lq[h]);
        for (auto [r, h] : blocking_pairs(inst, m)) {
            (void)h;
            CHECK(res.level[r] == 0);
            CHECK(m[r] != kUnmatched);
        }

        CHECK(matching_size(m) >= matching_size(stable_matching(inst)));

        bool noLq = true;
        for (int q : inst.lq) noLq &= (q == 0);
        if (noLq) CHECK(m == stable_matching(inst));

        RelaxedResult again = rsm_approx(inst);
        CHECK(again.matching == m);
        CHECK(again.level == res.level);
    }
    CHECK(feasible > 500);  // the corpus must actually exercise the solver
}

TEST_CASE("explicit seeds are validated") {
    Instance tight = fx::tightThreeHalves();
    Matching wrong(3);  // h2's lower quota left unfilled
    CHECK_THROWS_AS(rsm_approx(tight, wrong), PreconditionError);

    Matching overfull(3);  // fills a hospital beyond its lower quota
    overfull[1] = 0;
    overfull[2] = 1;
    CHECK_THROWS_AS(rsm_approx(tight, overfull), PreconditionError);
}

}  // TEST_SUITE
