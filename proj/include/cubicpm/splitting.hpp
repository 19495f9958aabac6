#pragma once

#include <array>
#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/triangles.hpp"

namespace cubicpm {

// Splitting along v1 v2 v3 v4: remove v2 and v3, add v1v4 and v1'v4'.
struct SplitRecord {
    std::array<int, 4> path{};       // host vertex ids
    int v1_prime = -1, v4_prime = -1;
    CubicMultigraph result;
    std::vector<int> vertex_origin;  // result vertex -> host vertex
    std::vector<int> edge_origin;    // result edge -> host edge, -1 for new
    int edge_v1v4 = -1, edge_v1pv4p = -1;  // result edge ids
    int host_edge_v1pv2 = -1, host_edge_v3v4p = -1, host_edge_v2v3 = -1;
};

namespace detail {

inline int unique_edge_between(const Multigraph& g, int u, int v) {
    int found = -1;
    for (int e : g.incident(u))
        if (g.other_end(e, u) == v) {
            require(found < 0, ErrorKind::HypothesisFailed, "parallel edges between path vertices");
            found = e;
        }
    return found;
}

}  // namespace detail

inline SplitRecord split_path(const CubicMultigraph& g, int v1, int v2, int v3, int v4) {
    for (int v : {v1, v2, v3, v4})
        require(v >= 0 && v < g.vertex_count(), ErrorKind::BadIndex, "path vertex out of range");
    require(v1 != v2 && v1 != v3 && v1 != v4 && v2 != v3 && v2 != v4 && v3 != v4,
            ErrorKind::NotAPath, "path vertices must be distinct");
    require(g.vertex_count() >= 6, ErrorKind::HypothesisFailed, "splitting needs |V(G)| >= 6");
    require(is_cyclically_4ec(g), ErrorKind::HypothesisFailed,
            "splitting needs a cyclically 4-edge-connected graph");
    int e12 = detail::unique_edge_between(g, v1, v2);
    int e23 = detail::unique_edge_between(g, v2, v3);
    int e34 = detail::unique_edge_between(g, v3, v4);
    require(e12 >= 0 && e23 >= 0 && e34 >= 0, ErrorKind::NotAPath,
            "v1 v2 v3 v4 is not a path");

    SplitRecord rec;
    rec.path = {v1, v2, v3, v4};
    rec.host_edge_v2v3 = e23;
    // v1' is the neighbor of v2 different from v1 and v3; v4' similarly.
    for (int e : g.incident(v2)) {
        int w = g.other_end(e, v2);
        if (w != v1 && w != v3) {
            rec.v1_prime = w;
            rec.host_edge_v1pv2 = e;
        }
    }
    for (int e : g.incident(v3)) {
        int w = g.other_end(e, v3);
        if (w != v2 && w != v4) {
            rec.v4_prime = w;
            rec.host_edge_v3v4p = e;
        }
    }
    require(rec.v1_prime >= 0 && rec.v4_prime >= 0, ErrorKind::NotAPath,
            "path vertices lack outside neighbors");

    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == v2 || v == v3) continue;
        new_id[v] = static_cast<int>(rec.vertex_origin.size());
        rec.vertex_origin.push_back(v);
    }
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        if (a == v2 || a == v3 || b == v2 || b == v3) continue;
        es.emplace_back(new_id[a], new_id[b]);
        rec.edge_origin.push_back(e);
    }
    rec.edge_v1v4 = static_cast<int>(es.size());
    es.emplace_back(new_id[v1], new_id[v4]);
    rec.edge_origin.push_back(-1);
    rec.edge_v1pv4p = static_cast<int>(es.size());
    es.emplace_back(new_id[rec.v1_prime], new_id[rec.v4_prime]);
    rec.edge_origin.push_back(-1);
    rec.result = CubicMultigraph(g.vertex_count() - 2, es);
    require(is_bridgeless(rec.result), ErrorKind::HypothesisFailed,
            "split result is not bridgeless");
    // at most two irrelevant triangles can appear
    auto tri = classify_triangles(rec.result);
    int irrelevant = 0;
    for (const auto& t : tri.triangles)
        if (!t.relevant) ++irrelevant;
    require(irrelevant <= 2, ErrorKind::HypothesisFailed,
            "split produced more than two irrelevant triangles");
    return rec;
}

// Unique lift of a perfect matching of the split graph avoiding v1v4: add
// v2v3 when v1'v4' is unused, else reroute through v1'v2 and v3v4'.
inline Matching canonical_extension(const Matching& m_split, const SplitRecord& rec,
                                    const CubicMultigraph& host) {
    require(!m_split.test(rec.edge_v1v4), ErrorKind::UsesNewEdge,
            "matchings containing v1v4 have no canonical extension");
    Matching m(host.edge_count());
    for (int e = 0; e < rec.result.edge_count(); ++e) {
        if (!m_split.test(e)) continue;
        if (e == rec.edge_v1pv4p) continue;
        m.set(rec.edge_origin[e]);
    }
    if (m_split.test(rec.edge_v1pv4p)) {
        m.set(rec.host_edge_v1pv2);
        m.set(rec.host_edge_v3v4p);
    } else {
        m.set(rec.host_edge_v2v3);
    }
    require(is_perfect_matching(host, m), ErrorKind::NotPerfect,
            "canonical extension failed to produce a perfect matching");
    return m;
}

struct FourSplitReport {
    int edge = -1;
    long long count_e = 0;                 // perfect matchings of G containing e
    std::array<long long, 4> split_counts{};  // matchings containing e per split
    long long sum = 0;                     // S
    bool identity = false;                 // 3 * count_e == S
    bool each_extends_from_three = false;  // membership table rows all equal 3
    std::array<std::array<int, 4>, 2> paths_used{};  // (w1,x1,y1),(w2,x2,y2) summary
};

// The S/3 identity behind the main induction: split along the four paths
// v w w_i {x_i,y_i} and compare matching counts through canonical extensions.
inline FourSplitReport four_split_identity(const CubicMultigraph& g, int e,
                                           const EnumerationCaps& caps = {}) {
    require(e >= 0 && e < g.edge_count(), ErrorKind::BadIndex, "edge out of range");
    require(g.vertex_count() >= 6, ErrorKind::HypothesisFailed, "need |V(G)| >= 6");
    require(is_cyclically_4ec(g), ErrorKind::HypothesisFailed,
            "need a cyclically 4-edge-connected graph");
    auto [u, v] = g.ends(e);
    int w = -1;
    for (int f : g.incident(v)) {
        int cand = g.other_end(f, v);
        if (cand == u) continue;
        if (w < 0 || cand < w) w = cand;
    }
    std::vector<int> w_next;
    for (int f : g.incident(w)) {
        int cand = g.other_end(f, w);
        if (cand != v) w_next.push_back(cand);
    }
    std::sort(w_next.begin(), w_next.end());
    require(w_next.size() == 2, ErrorKind::HypothesisFailed, "w does not have two other neighbors");
    std::array<std::array<int, 2>, 2> tails{};
    for (int i = 0; i < 2; ++i) {
        std::vector<int> ends;
        for (int f : g.incident(w_next[i])) {
            int cand = g.other_end(f, w_next[i]);
            if (cand != w) ends.push_back(cand);
        }
        std::sort(ends.begin(), ends.end());
        require(ends.size() == 2, ErrorKind::HypothesisFailed, "w_i lacks two neighbors");
        tails[i] = {ends[0], ends[1]};
    }

    FourSplitReport rep;
    rep.edge = e;
    rep.paths_used = {std::array<int, 4>{w, w_next[0], tails[0][0], tails[0][1]},
                      std::array<int, 4>{w, w_next[1], tails[1][0], tails[1][1]}};
    auto host_matchings = enumerate_perfect_matchings(g, caps);
    for (const auto& m : host_matchings)
        if (m.test(e)) ++rep.count_e;

    std::vector<int> containing_counts(host_matchings.size(), 0);
    int split_idx = 0;
    for (int i = 0; i < 2; ++i) {
        for (int tail : tails[i]) {
            SplitRecord rec = split_path(g, v, w, w_next[i], tail);
            // e survives the split: locate its id in the result
            int e_split = -1;
            for (int f = 0; f < rec.result.edge_count(); ++f)
                if (rec.edge_origin[f] == e) e_split = f;
            require(e_split >= 0, ErrorKind::HypothesisFailed, "split removed the tracked edge");
            auto split_matchings = enumerate_perfect_matchings(rec.result, caps);
            long long count = 0;
            for (const auto& ms : split_matchings) {
                if (!ms.test(e_split)) continue;
                ++count;
                // containing e forces avoiding v1v4 (both cover v)
                Matching lifted = canonical_extension(ms, rec, g);
                for (std::size_t h = 0; h < host_matchings.size(); ++h)
                    if (host_matchings[h] == lifted) ++containing_counts[h];
            }
            rep.split_counts[split_idx++] = count;
            rep.sum += count;
        }
    }
    rep.identity = 3 * rep.count_e == rep.sum;
    rep.each_extends_from_three = true;
    for (std::size_t h = 0; h < host_matchings.size(); ++h) {
        if (!host_matchings[h].test(e)) continue;
        if (containing_counts[h] != 3) rep.each_extends_from_three = false;
    }
    return rep;
}

}  // namespace cubicpm
