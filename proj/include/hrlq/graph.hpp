// Plain undirected graph: input to the vertex-cover/independent-set oracles
// and to the gadget generators.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hrlq/model.hpp"

namespace hrlq {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int vertices() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// No self-loops, no duplicate edges (as unordered pairs), endpoints in range.
inline std::vector<std::string> validate_graph(const Graph& g) {
    std::vector<std::string> bad;
    if (g.n < 0) bad.push_back("negative vertex count");
    std::vector<std::vector<char>> seen(g.n, std::vector<char>(g.n, 0));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        std::string tag = "edge " + std::to_string(i);
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
            bad.push_back(tag + ": endpoint out of range");
            continue;
        }
        if (u == v) {
            bad.push_back(tag + ": self-loop at vertex " + std::to_string(u));
            continue;
        }
        if (seen[u][v]) bad.push_back(tag + ": duplicate of (" + std::to_string(u) + "," + std::to_string(v) + ")");
        seen[u][v] = seen[v][u] = 1;
    }
    return bad;
}

inline void require_graph(const Graph& g) {
    auto bad = validate_graph(g);
    if (!bad.empty()) throw PreconditionError("invalid graph: " + bad.front());
}

inline std::vector<std::vector<int>> graph_neighbors(const Graph& g) {
    std::vector<std::vector<int>> nb(g.n);
    for (auto [u, v] : g.edges) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    return nb;
}

// Edge indices incident to each vertex, ascending.
inline std::vector<std::vector<int>> graph_incident_edges(const Graph& g) {
    std::vector<std::vector<int>> inc(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        inc[g.edges[e].first].push_back(e);
        inc[g.edges[e].second].push_back(e);
    }
    return inc;
}

}  // namespace hrlq
