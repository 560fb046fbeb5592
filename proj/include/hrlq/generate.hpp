// Instance generators: graph-based gadget families whose optima encode
// vertex-cover / independent-set answers, plus seeded random families for
// property testing.
#pragma once

#include <cstdint>
#include <string>

#include "hrlq/graph.hpp"
#include "hrlq/model.hpp"

namespace hrlq {

// One resident per vertex and per edge. Vertex residents want their own
// hospital, then the quota hospital x with quotas [k,k]; edge residents list
// their two endpoint hospitals. G has an independent set of size k exactly
// when the instance has a feasible envy-free matching covering everyone.
Instance gen_indset(const Graph& g, int k);

// Same encoding with every quota at most one: each vertex hospital is split
// into a block of unit seats, and x becomes k unit seats.
Instance gen_indset_unit(const Graph& g, int k);

// Three residents and four hospitals per vertex, h3 with quotas [1,1]. The
// largest envy-free feasible matching has size 3|V| minus the minimum vertex
// cover, and no stable matching of the output is feasible.
Instance gen_mvc_efm(const Graph& g);

// Three residents and three hospitals per vertex, h3 with quotas [1,1]. The
// largest relaxed stable matching has size 3|V| minus the minimum vertex
// cover.
Instance gen_mvc_rsm(const Graph& g);

// Where a gadget leaves an order unspecified, lists follow ascending
// vertex / edge index so outputs are reproducible.

struct RandomSpec {
    std::string family = "random";  // random | random-cl | random-012r
    int residents = 8;
    int hospitals = 4;
    int maxUpper = 2;    // upper quotas are drawn from 1..maxUpper
    int lqHospitals = 1; // how many hospitals get a positive lower quota
    std::uint64_t seed = 0;
};

// Seeded pseudo-random instance; the seed fully determines the output.
// random-cl makes every positive-lower-quota hospital rank all residents;
// random-012r caps resident lists at two entries and all quotas at one.
Instance gen_random(const RandomSpec& spec);

}  // namespace hrlq
