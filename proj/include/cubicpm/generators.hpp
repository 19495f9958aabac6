#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

inline CubicMultigraph make_k4() {
    return build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4);
}

// Two vertices joined by three parallel edges.
inline CubicMultigraph make_b3() {
    return build_graph({{0, 1}, {0, 1}, {0, 1}}, 2);
}

inline CubicMultigraph make_k33() {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
    return build_graph(es, 6);
}

inline CubicMultigraph make_prism() {
    return build_graph({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}, 6);
}

inline CubicMultigraph make_petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) es.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) es.emplace_back(i, i + 5);
    return build_graph(es, 10);
}

using RailPair = std::pair<int, int>;  // unordered {a,b}, 1-indexed rails, a < b

inline std::vector<RailPair> alternating_sigma(int length) {
    static const RailPair cycle[3] = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<RailPair> sigma;
    for (int i = 0; i < length; ++i) sigma.push_back(cycle[i % 3]);
    return sigma;
}

// Three rails R1,R2,R3 between two end vertices; position i puts a rung pair
// {x_i, y_i} on the two rails sigma_i. The hub of a maximum decomposition at
// every interior pair is K4.
inline CubicMultigraph make_k4_chain(const std::vector<RailPair>& sigma) {
    const int length = static_cast<int>(sigma.size());
    require(length >= 1, ErrorKind::BadParams, "k4_chain needs at least one position");
    for (int i = 0; i < length; ++i) {
        auto [a, b] = sigma[i];
        require(a >= 1 && b <= 3 && a < b, ErrorKind::BadParams,
                "sigma entries must be pairs from {1,2,3}");
        if (i > 0)
            require(sigma[i] != sigma[i - 1], ErrorKind::BadParams,
                    "consecutive sigma entries must differ");
    }
    const int s = 0;
    const int t = 2 * length + 1;
    auto x_of = [&](int i) { return 1 + 2 * i; };
    auto y_of = [&](int i) { return 2 + 2 * i; };
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < length; ++i) es.emplace_back(x_of(i), y_of(i));  // rungs
    for (int rail = 1; rail <= 3; ++rail) {
        std::vector<int> stops;
        for (int i = 0; i < length; ++i) {
            auto [a, b] = sigma[i];
            if (rail == a) stops.push_back(x_of(i));
            else if (rail == b) stops.push_back(y_of(i));
        }
        int prev = s;
        for (int v : stops) {
            es.emplace_back(prev, v);
            prev = v;
        }
        es.emplace_back(prev, t);
    }
    return build_graph(es, 2 * length + 2);
}

inline CubicMultigraph make_k4_chain(int length) { return make_k4_chain(alternating_sigma(length)); }

// Cyclic chain of L diamonds (K4 minus an edge) joined by single edges;
// every pair of junction edges is a 2-edge-cut. necklace(1) is K4.
inline CubicMultigraph make_necklace(int blocks) {
    require(blocks >= 1, ErrorKind::BadParams, "necklace needs at least one block");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < blocks; ++i) {
        int p = 4 * i, q = 4 * i + 1, r = 4 * i + 2, s = 4 * i + 3;
        es.emplace_back(p, q);
        es.emplace_back(p, r);
        es.emplace_back(q, r);
        es.emplace_back(p, s);
        es.emplace_back(q, s);
    }
    for (int i = 0; i < blocks; ++i)
        es.emplace_back(4 * i + 2, 4 * ((i + 1) % blocks) + 3);
    return build_graph(es, 4 * blocks);
}

// Expand vertex v into a triangle on {v, n, n+1}; the lowest incident edge
// stays at v, the others move to the new vertices.
inline CubicMultigraph triangle_replace(const CubicMultigraph& g, int v) {
    require(v >= 0 && v < g.vertex_count(), ErrorKind::BadIndex, "vertex out of range");
    const int n = g.vertex_count();
    std::vector<int> inc = g.incident(v);
    std::sort(inc.begin(), inc.end());
    std::vector<std::pair<int, int>> es = g.edges();
    auto redirect = [&](int e, int to) {
        auto& [a, b] = es[e];
        if (a == v) a = to;
        else b = to;
    };
    redirect(inc[1], n);
    redirect(inc[2], n + 1);
    es.emplace_back(v, n);
    es.emplace_back(v, n + 1);
    es.emplace_back(n, n + 1);
    return build_graph(es, n + 2);
}

// Two triangles sharing an edge, closed into a cubic bridgeless host by a
// rail through a doubled edge. The four triangle vertices form one
// elementary twig behind a 2-cut.
inline CubicMultigraph make_double_triangle() {
    return build_graph(
        {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 5}}, 6);
}

// --- non-cubic instances for the k-regular construction ---------------------

inline Multigraph make_k44() {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b) es.emplace_back(a, b);
    return Multigraph(8, es);
}

inline Multigraph make_circulant_c8_12() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 2) % 8);
    return Multigraph(8, es);
}

}  // namespace cubicpm
