#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/generators.hpp"
#include "cubicpm/isomorphism.hpp"

namespace cubicpm {

namespace detail {

// Insert an edge between two subdivision points on edges e and f (possibly
// the same edge). The reverse operation, suppressing an edge, always applies
// to some edge of a connected cubic multigraph, so iterating this from B3
// reaches every connected class.
inline CubicMultigraph insert_on_edges(const CubicMultigraph& g, int e, int f) {
    const int n = g.vertex_count();
    const int a = n, b = n + 1;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e || i == f) continue;
        es.push_back(g.ends(i));
    }
    if (e == f) {
        auto [u, v] = g.ends(e);
        es.emplace_back(u, a);
        es.emplace_back(a, b);
        es.emplace_back(b, v);
        es.emplace_back(a, b);
    } else {
        auto [u1, v1] = g.ends(e);
        auto [u2, v2] = g.ends(f);
        es.emplace_back(u1, a);
        es.emplace_back(a, v1);
        es.emplace_back(u2, b);
        es.emplace_back(b, v2);
        es.emplace_back(a, b);
    }
    return CubicMultigraph(n + 2, es);
}

}  // namespace detail

namespace detail {

// Subdivide edge e at a new vertex and hang a theta lobe (a doubled pair
// behind a stem vertex) off it. Reverses the reduction of graphs in which
// every edge suppression would create a loop or a disconnection: such graphs
// consist of theta lobes pending from subdivision points.
inline CubicMultigraph theta_pendant(const CubicMultigraph& g, int e) {
    const int n = g.vertex_count();
    const int c = n, a = n + 1, x = n + 2, z = n + 3;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) es.push_back(g.ends(i));
    auto [p, q] = g.ends(e);
    es.emplace_back(p, c);
    es.emplace_back(c, q);
    es.emplace_back(c, a);
    es.emplace_back(a, x);
    es.emplace_back(a, z);
    es.emplace_back(x, z);
    es.emplace_back(x, z);
    return CubicMultigraph(n + 4, es);
}

}  // namespace detail

// All connected cubic loopless multigraphs on n vertices, one per isomorphism
// class. Generated from B3 by edge insertion (n-2 parents) and theta-pendant
// attachment (n-4 parents); together these reverse-reduce every connected
// class, so the closure is complete.
inline const std::vector<CubicMultigraph>& connected_cubic_classes(int n) {
    require(n >= 2 && n % 2 == 0, ErrorKind::BadParams, "n must be even and at least 2");
    require(n <= 14, ErrorKind::SizeLimit, "class enumeration capped at n = 14");
    static std::map<int, std::vector<CubicMultigraph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 2) {
        cache[2] = {make_b3()};
        return cache[2];
    }
    std::set<std::string> seen;
    std::vector<CubicMultigraph> out;
    for (const auto& h : connected_cubic_classes(n - 2)) {
        for (int e = 0; e < h.edge_count(); ++e)
            for (int f = e; f < h.edge_count(); ++f) {
                CubicMultigraph g = detail::insert_on_edges(h, e, f);
                if (seen.insert(canonical_form(g)).second) out.push_back(g);
            }
    }
    if (n >= 6) {
        for (const auto& h : connected_cubic_classes(n - 4)) {
            for (int e = 0; e < h.edge_count(); ++e) {
                CubicMultigraph g = detail::theta_pendant(h, e);
                if (seen.insert(canonical_form(g)).second) out.push_back(g);
            }
        }
    }
    cache[n] = std::move(out);
    return cache[n];
}

inline std::vector<CubicMultigraph> bridgeless_cubic_classes(int n) {
    std::vector<CubicMultigraph> out;
    for (const auto& g : connected_cubic_classes(n))
        if (is_bridgeless(g)) out.push_back(g);
    return out;
}

}  // namespace cubicpm
