#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cubicpm/edgeset.hpp"
#include "cubicpm/multigraph.hpp"

namespace cubicpm {

struct EnumerationCaps {
    int max_vertices = 40;                   // perfect matching enumeration
    long long max_family = 10'000'000;       // |M(G,X)| cap
};

using Matching = EdgeSet;

inline bool is_perfect_matching(const Multigraph& g, const EdgeSet& m) {
    std::vector<int> cover(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (m.test(e)) {
            auto [u, v] = g.ends(e);
            ++cover[u];
            ++cover[v];
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cover[v] != 1) return false;
    return true;
}

// Backtracking on the lowest-id uncovered vertex, branching over its incident
// edges in id order; output sorted lexicographically by edge-id set.
inline std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g,
                                                         const EnumerationCaps& caps = {}) {
    require(g.vertex_count() <= caps.max_vertices, ErrorKind::SizeLimit,
            "perfect matching enumeration capped at n = " + std::to_string(caps.max_vertices));
    std::vector<Matching> out;
    const int n = g.vertex_count();
    if (n == 0) {
        out.push_back(EdgeSet(g.edge_count()));
        return out;
    }
    if (n % 2 == 1) return out;
    std::vector<char> covered(n, 0);
    EdgeSet current(g.edge_count());
    auto rec = [&](auto&& self, int done) -> void {
        if (done == n) {
            out.push_back(current);
            return;
        }
        int v = 0;
        while (covered[v]) ++v;
        std::vector<int> inc = g.incident(v);
        std::sort(inc.begin(), inc.end());
        for (int e : inc) {
            int w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            current.set(e);
            self(self, done + 2);
            current.reset(e);
            covered[v] = covered[w] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
    return out;
}

struct MatchingCounts {
    long long total = 0;                 // m(G)
    std::vector<long long> per_edge;     // matchings containing each edge
    long long m_star = 0;                // min over edges
};

inline MatchingCounts matching_counts(const Multigraph& g, const EnumerationCaps& caps = {}) {
    auto all = enumerate_perfect_matchings(g, caps);
    MatchingCounts c;
    c.total = static_cast<long long>(all.size());
    c.per_edge.assign(g.edge_count(), 0);
    for (const auto& m : all)
        for (int e = 0; e < g.edge_count(); ++e)
            if (m.test(e)) ++c.per_edge[e];
    c.m_star = c.per_edge.empty() ? 0 : *std::min_element(c.per_edge.begin(), c.per_edge.end());
    if (c.total == 0) c.m_star = 0;
    return c;
}

// Element of M(G,X): every vertex of X covered exactly once by edges of E_X.
// Boundary edges may collide outside X.
struct BoundaryMatching {
    EdgeSet edge_set;
    std::vector<int> boundary_trace;  // ids of M intersect delta(X), sorted
};

inline std::vector<BoundaryMatching> enumerate_boundary_matchings(const Multigraph& g,
                                                                  const std::vector<int>& xs,
                                                                  const EnumerationCaps& caps = {}) {
    require(!xs.empty(), ErrorKind::EmptySide, "X must be nonempty");
    auto mask = subset_mask(g, xs);
    std::vector<int> xverts = mask_to_vertices(mask);
    std::vector<BoundaryMatching> out;
    std::vector<char> covered(g.vertex_count(), 0);
    EdgeSet current(g.edge_count());
    long long produced = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        while (idx < xverts.size() && covered[xverts[idx]]) ++idx;
        if (idx == xverts.size()) {
            if (++produced > caps.max_family)
                fail(ErrorKind::SizeLimit,
                     "|M(G,X)| exceeds cap " + std::to_string(caps.max_family));
            BoundaryMatching bm;
            bm.edge_set = current;
            for (int e = 0; e < g.edge_count(); ++e)
                if (current.test(e)) {
                    auto [u, v] = g.ends(e);
                    if (mask[u] != mask[v]) bm.boundary_trace.push_back(e);
                }
            out.push_back(std::move(bm));
            return;
        }
        int v = xverts[idx];
        std::vector<int> inc = g.incident(v);
        std::sort(inc.begin(), inc.end());
        for (int e : inc) {
            int w = g.other_end(e, v);
            if (mask[w] && covered[w]) continue;
            covered[v] = 1;
            if (mask[w]) covered[w] = 1;
            current.set(e);
            self(self, idx + 1);
            current.reset(e);
            covered[v] = 0;
            if (mask[w]) covered[w] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const BoundaryMatching& a, const BoundaryMatching& b) {
        return a.edge_set.lex_less(b.edge_set);
    });
    return out;
}

namespace detail {

// Component count of the edge set `edges`; when `inside` is given, only
// components every edge of which lies in G|mask are counted.
inline int component_count(const Multigraph& g, const EdgeSet& edges, const std::vector<char>* mask) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<char> touched(n, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (edges.test(e)) {
            auto [u, v] = g.ends(e);
            touched[u] = touched[v] = 1;
            parent[find(u)] = find(v);
        }
    std::vector<char> bad(n, 0);
    if (mask) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (edges.test(e)) {
                auto [u, v] = g.ends(e);
                if (!(*mask)[u] || !(*mask)[v]) bad[find(u)] = 1;
            }
    }
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (touched[v] && find(v) == v && !bad[v]) ++count;
    return count;
}

}  // namespace detail

// Number of components of M triangle M2; each is an even alternating cycle.
inline int symdiff_components(const Multigraph& g, const Matching& m1, const Matching& m2) {
    require(is_perfect_matching(g, m1) && is_perfect_matching(g, m2), ErrorKind::NotPerfect,
            "symdiff_components needs two perfect matchings");
    return detail::component_count(g, m1 ^ m2, nullptr);
}

// a(G,X,M): maximum over M' in M(G,X) of the number of components of
// M triangle M' that lie entirely inside G|X (those are exactly the disjoint
// M-alternating cycles realized by M').
inline int alternating_number(const Multigraph& g, const std::vector<int>& xs,
                              const BoundaryMatching& m,
                              const std::vector<BoundaryMatching>& family) {
    auto mask = subset_mask(g, xs);
    int best = 0;
    for (const auto& other : family)
        best = std::max(best, detail::component_count(g, m.edge_set ^ other.edge_set, &mask));
    return best;
}

inline int alternating_number(const Multigraph& g, const std::vector<int>& xs,
                              const BoundaryMatching& m, const EnumerationCaps& caps = {}) {
    return alternating_number(g, xs, m, enumerate_boundary_matchings(g, xs, caps));
}

struct SwitchReport {
    Matching first, second;
    int components = 0;
};

// Argmax of symdiff_components over all pairs of perfect matchings.
inline SwitchReport max_switch_components(const Multigraph& g, const EnumerationCaps& caps = {}) {
    auto all = enumerate_perfect_matchings(g, caps);
    require(!all.empty(), ErrorKind::BadParams, "graph has no perfect matching");
    SwitchReport rep{all[0], all[0], 0};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            int c = detail::component_count(g, all[i] ^ all[j], nullptr);
            if (c > rep.components) rep = {all[i], all[j], c};
        }
    return rep;
}

// The flipping construction: distinct perfect matchings obtained from M by
// flipping subsets of the components of M triangle M2.
inline std::vector<Matching> flip_component_subsets(const Multigraph& g, const Matching& m1,
                                                    const Matching& m2, int max_components = 20) {
    require(is_perfect_matching(g, m1) && is_perfect_matching(g, m2), ErrorKind::NotPerfect,
            "flipping needs perfect matchings");
    EdgeSet diff = m1 ^ m2;
    // split diff into components
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        if (diff.test(e)) {
            auto [u, v] = g.ends(e);
            parent[find(u)] = find(v);
        }
    std::vector<int> roots;
    std::vector<EdgeSet> comps;
    for (int e = 0; e < g.edge_count(); ++e)
        if (diff.test(e)) {
            int r = find(g.ends(e).first);
            auto it = std::find(roots.begin(), roots.end(), r);
            if (it == roots.end()) {
                roots.push_back(r);
                comps.emplace_back(g.edge_count());
                it = roots.end() - 1;
            }
            comps[it - roots.begin()].set(e);
        }
    require(static_cast<int>(comps.size()) <= max_components, ErrorKind::SizeLimit,
            "too many components to flip explicitly");
    std::vector<Matching> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << comps.size()); ++sub) {
        Matching m = m1;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if ((sub >> i) & 1) m = m ^ comps[i];
        out.push_back(m);
    }
    return out;
}

}  // namespace cubicpm
