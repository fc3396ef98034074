#pragma once

// Hand-transcribed example graphs. Vertex ids follow the drawings: for the
// pentagons, A..E (top-right going counter-clockwise from 18 degrees) are
// 0..4; multipartite parts are numbered consecutively.

#include "cutpoly/workbench.hpp"
#include "oracle.hpp"

namespace fixtures {

using cutpoly::Cut;
using cutpoly::Edge;
using cutpoly::Graph;

inline Graph make(int n, std::vector<Edge> edges) { return Graph::from_edges(n, std::move(edges)); }

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v)
        e.push_back({v, v + 1});
    return make(n, e);
}

inline Graph cycle(int n) { return cutpoly::generate({cutpoly::GraphFamily::Cycle, n}); }
inline Graph complete(int n) { return cutpoly::generate({cutpoly::GraphFamily::Complete, n}); }
inline Graph multipartite(std::vector<int> parts) {
    cutpoly::GeneratorSpec spec{cutpoly::GraphFamily::CompleteMultipartite};
    spec.parts = std::move(parts);
    return cutpoly::generate(spec);
}

// Pentagon with chords AC, BD, BE; X = {C}, Y = {A}.
inline Graph adjacent_pentagon() {
    return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 3}, {1, 4}});
}

// Pentagon with chords AC, AD; X = {B, C}, Y = {A, B}; L = {B}.
inline Graph nonadjacent_pentagon() {
    return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}});
}

// Cactus drawing: hexagon, square, triangle and two pendant edges.
inline Graph drawn_cactus() {
    return make(13, {{0, 2}, {2, 4}, {4, 10}, {3, 10}, {1, 3}, {0, 1}, {1, 6}, {6, 9}, {5, 9}, {1, 5},
                     {2, 7}, {7, 8}, {8, 12}, {7, 12}, {4, 11}});
}

// Almost tree (2) drawing: a 4-vertex block with one chord, a triangle, a
// 5-vertex block with one chord, and bridges.
inline Graph drawn_almost_tree() {
    return make(13, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {2, 4}, {4, 5}, {5, 6}, {4, 6}, {4, 7}, {4, 8},
                     {8, 9}, {9, 10}, {10, 11}, {11, 12}, {8, 12}, {10, 12}});
}

inline oracle::Edges edges_of(const Graph& g) {
    oracle::Edges out;
    for (const auto& e : g.edges())
        out.push_back({e.u, e.v});
    return out;
}

inline oracle::Side side_of(const Cut& c) {
    oracle::Side s(static_cast<std::size_t>(c.vertex_count()), false);
    for (int v : c.vertex_list())
        s[v] = true;
    return s;
}

inline Cut cut(const Graph& g, std::vector<int> vertices) { return Cut::from_vertices(vertices, g.vertex_count()); }

} // namespace fixtures
