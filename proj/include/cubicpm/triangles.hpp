#pragma once

#include <array>
#include <set>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

// Simple cycles of length 2..4 as sorted edge-id sets. Parallel edges give
// 2-cycles; distinct parallel picks give distinct cycles.
inline std::vector<std::vector<int>> short_cycles(const Multigraph& g) {
    std::set<std::vector<int>> found;
    const int m = g.edge_count();
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.ends(e);
        for (int f = e + 1; f < m; ++f) {
            auto [c, d] = g.ends(f);
            if ((a == c && b == d) || (a == d && b == c)) found.insert({e, f});
        }
    }
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int e1 : g.incident(a)) {
            int b = g.other_end(e1, a);
            if (b <= a) continue;
            for (int e2 : g.incident(b)) {
                if (e2 == e1) continue;
                int c = g.other_end(e2, b);
                if (c <= a || c == b) continue;
                // triangle a-b-c
                for (int e3 : g.incident(c)) {
                    if (e3 == e1 || e3 == e2) continue;
                    if (g.other_end(e3, c) == a) {
                        std::vector<int> cyc{e1, e2, e3};
                        std::sort(cyc.begin(), cyc.end());
                        found.insert(cyc);
                    }
                }
                // 4-cycle a-b-c-d
                for (int e3 : g.incident(c)) {
                    if (e3 == e1 || e3 == e2) continue;
                    int d = g.other_end(e3, c);
                    if (d <= a || d == b || d == c) continue;
                    for (int e4 : g.incident(d)) {
                        if (e4 == e1 || e4 == e2 || e4 == e3) continue;
                        if (g.other_end(e4, d) == a) {
                            std::vector<int> cyc{e1, e2, e3, e4};
                            std::sort(cyc.begin(), cyc.end());
                            found.insert(cyc);
                        }
                    }
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

struct TriangleRecord {
    std::array<int, 3> vertices;  // sorted, pairwise adjacent
    bool relevant = false;
};

struct TriangleReport {
    std::vector<TriangleRecord> triangles;
    bool pruned = true;  // no irrelevant triangle present
};

// 3-cycles on the triple {a,b,c}, as edge sets.
inline std::vector<std::vector<int>> triangles_on(const Multigraph& g, int a, int b, int c) {
    std::vector<std::vector<int>> out;
    auto edges_between = [&](int u, int v) {
        std::vector<int> es;
        for (int e : g.incident(u))
            if (g.other_end(e, u) == v) es.push_back(e);
        return es;
    };
    for (int e1 : edges_between(a, b))
        for (int e2 : edges_between(b, c))
            for (int e3 : edges_between(a, c)) {
                std::vector<int> t{e1, e2, e3};
                std::sort(t.begin(), t.end());
                out.push_back(t);
            }
    return out;
}

// A triangle is relevant iff it shares precisely one edge with some cycle of
// length three or four other than itself.
inline TriangleReport classify_triangles(const Multigraph& g) {
    TriangleReport rep;
    auto cycles = short_cycles(g);
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                auto tris = triangles_on(g, a, b, c);
                if (tris.empty()) continue;
                bool relevant = false;
                for (const auto& t : tris) {
                    for (const auto& cyc : cycles) {
                        if (cyc.size() < 3) continue;  // only 3- and 4-cycles count
                        if (cyc == t) continue;
                        int shared = 0;
                        for (int e : cyc)
                            if (std::binary_search(t.begin(), t.end(), e)) ++shared;
                        if (shared == 1) relevant = true;
                    }
                }
                rep.triangles.push_back({{a, b, c}, relevant});
                if (!relevant) rep.pruned = false;
            }
    return rep;
}

inline bool is_pruned(const Multigraph& g) { return classify_triangles(g).pruned; }

}  // namespace cubicpm
