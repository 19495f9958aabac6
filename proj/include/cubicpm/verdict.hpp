#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "cubicpm/balanced.hpp"
#include "cubicpm/constants.hpp"
#include "cubicpm/enumerate_graphs.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

struct Main2Verdict {
    int n = 0;
    long long c = 0;
    long long m_total = 0;
    long long m_star = 0;
    int max_components = 0;
    bool s1 = false;  // m*(G) >= 2^{n/c}, decided as (m*)^c >= 2^n
    bool s2 = false;  // max components >= n/c, decided as c * components >= n
    SwitchReport switch_report;
    long long flipped_distinct = 0;  // 2^{components} matchings built explicitly
    bool flipping_verified = false;
};

// Theorem-2 verdict at desk scale. Exponential comparisons are exact integer
// power comparisons, never floating point.
inline Main2Verdict main2_verdict(const CubicMultigraph& g, const EnumerationCaps& caps = {}) {
    Main2Verdict v;
    v.n = g.vertex_count();
    v.c = minimal_ceps();
    auto counts = matching_counts(g, caps);
    v.m_total = counts.total;
    v.m_star = counts.m_star;
    v.switch_report = max_switch_components(g, caps);
    v.max_components = v.switch_report.components;
    BigInt lhs = boost::multiprecision::pow(BigInt(v.m_star), static_cast<unsigned>(v.c));
    BigInt rhs = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(v.n));
    v.s1 = v.m_star >= 1 && lhs >= rhs;
    v.s2 = v.c * static_cast<long long>(v.max_components) >= v.n;
    auto flips = flip_component_subsets(g, v.switch_report.first, v.switch_report.second);
    std::set<std::vector<int>> distinct;
    bool all_perfect = true;
    for (const auto& m : flips) {
        all_perfect = all_perfect && is_perfect_matching(g, m);
        distinct.insert(m.ids());
    }
    v.flipped_distinct = static_cast<long long>(distinct.size());
    v.flipping_verified = all_perfect &&
                          v.flipped_distinct == (1ll << v.max_components) &&
                          v.flipped_distinct <= v.m_total;
    return v;
}

struct MStarWitness {
    CubicMultigraph graph;
    int witness_edge = -1;  // lies in exactly one perfect matching
};

// All cubic bridgeless multigraphs on n vertices (up to isomorphism) with
// m*(G) = 1, substitute witnesses for the unreproducible figure.
inline std::vector<MStarWitness> search_mstar1(int n, const EnumerationCaps& caps = {}) {
    require(n % 2 == 0 && n >= 2, ErrorKind::BadParams, "n must be even and positive");
    require(n <= 14, ErrorKind::SizeLimit, "search capped at n = 14");
    std::vector<MStarWitness> out;
    for (const auto& g : bridgeless_cubic_classes(n)) {
        auto counts = matching_counts(g, caps);
        if (counts.m_star != 1) continue;
        MStarWitness w;
        w.graph = g;
        for (int e = 0; e < g.edge_count(); ++e)
            if (counts.per_edge[e] == 1) {
                w.witness_edge = e;
                break;
            }
        require(w.witness_edge >= 0, ErrorKind::PreconditionFailed, "witness edge missing");
        out.push_back(std::move(w));
    }
    return out;
}

struct KRegularReport {
    int k = 0;
    int n = 0;
    long long pm_count = 0;
    Matching m1, m2, m3;
    long long m1_m2_overlap = 0;       // <= n/(2k)
    int degree3_count = 0;             // vertices of degree 3 in M1 u M2 u M3
    Rational degree3_bound;            // (1 - 1/k)(1 - 2/k) n
    CubicMultigraph reduced;           // G''
    int dropped_cycle_components = 0;  // all-degree-2 components removed
    long long c = 0;
    long long reduced_pm_count = 0;
    bool bound_chain_consistent = false;  // m(G) >= m(G'') and m(G'')^c >= 2^{|V(G'')|}
};

// The k-regular construction: pick M1, M2, M3 against a 1/k-balanced
// distribution, keep the union, delete degree-1 vertices and suppress
// degree-2 paths; the result is cubic bridgeless and carries the bound chain.
inline KRegularReport kregular_construct(const Multigraph& g, int k,
                                         const EnumerationCaps& caps = {}) {
    require(k >= 4, ErrorKind::PreconditionFailed, "k must be at least 4");
    require(g.is_regular(k), ErrorKind::PreconditionFailed, "graph is not k-regular");
    require(g.connected(), ErrorKind::Disconnected, "graph must be connected");
    for (int size = 1; size <= k - 2 && size <= 3; ++size)
        require(all_cuts_of_size(g, size).empty(), ErrorKind::PreconditionFailed,
                "graph is not (k-1)-edge-connected");
    KRegularReport rep;
    rep.k = k;
    rep.n = g.vertex_count();
    auto pms = enumerate_perfect_matchings(g, caps);
    require(!pms.empty(), ErrorKind::PreconditionFailed, "no perfect matching");
    rep.pm_count = static_cast<long long>(pms.size());
    // (i) the 1/k-balanced distribution exists (Edmonds polytope membership)
    balanced_distribution(g, mask_to_vertices(std::vector<char>(g.vertex_count(), 1)),
                          Rational(1, k), caps);
    // (ii) M1 arbitrary: first enumerated
    rep.m1 = pms[0];
    // (iii) M2 with |M2 ^ M1| <= n/(2k)
    Rational overlap_bound = Rational(rep.n, 2 * k);
    bool found = false;
    for (const auto& m : pms) {
        long long overlap = (m & rep.m1).count();
        if (Rational(overlap) <= overlap_bound) {
            rep.m2 = m;
            rep.m1_m2_overlap = overlap;
            found = true;
            break;
        }
    }
    require(found, ErrorKind::PreconditionFailed, "no M2 with small overlap (expectation argument)");
    // (iv) M3 maximizing the number of vertices with three distinct matching edges
    auto edge_at = [&](const Matching& m, int v) {
        for (int e : g.incident(v))
            if (m.test(e)) return e;
        return -1;
    };
    auto degree3_count = [&](const Matching& m3) {
        int count = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int e1 = edge_at(rep.m1, v), e2 = edge_at(rep.m2, v), e3 = edge_at(m3, v);
            if (e1 != e2 && e1 != e3 && e2 != e3) ++count;
        }
        return count;
    };
    rep.degree3_bound = Rational((k - 1) * (k - 2), k * k) * rep.n;
    int best = -1;
    for (const auto& m : pms) {
        int count = degree3_count(m);
        if (count > best) {
            best = count;
            rep.m3 = m;
        }
    }
    rep.degree3_count = best;
    require(Rational(best) >= rep.degree3_bound, ErrorKind::NoM3,
            "no M3 reaches the expectation bound (diagnostic: potential implementation bug)");
    // (v) union, delete degree-1 vertices, suppress degree-2 paths
    Matching uni = rep.m1 | rep.m2 | rep.m3;
    std::vector<std::vector<int>> inc(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (uni.test(e)) {
            auto [a, b] = g.ends(e);
            inc[a].push_back(e);
            inc[b].push_back(e);
        }
    std::vector<int> new_id(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(inc[v].size()) == 3) new_id[v] = next++;
    std::vector<std::pair<int, int>> es;
    std::vector<char> used_edge(g.edge_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (new_id[v] < 0) continue;
        for (int e0 : inc[v]) {
            if (used_edge[e0]) continue;
            // walk through degree-2 vertices until the next degree-3 vertex
            int cur = v, e = e0;
            bool valid = true;
            while (true) {
                used_edge[e] = 1;
                int w = g.other_end(e, cur);
                if (static_cast<int>(inc[w].size()) == 3) {
                    es.emplace_back(new_id[v], new_id[w]);
                    break;
                }
                if (static_cast<int>(inc[w].size()) == 1) {
                    valid = false;  // pendant pair, dropped below
                    break;
                }
                int e_next = inc[w][0] == e ? inc[w][1] : inc[w][0];
                cur = w;
                e = e_next;
            }
            if (!valid)
                fail(ErrorKind::PreconditionFailed,
                     "degree-1 vertex adjacent to a degree-3 chain; union is inconsistent");
        }
    }
    // degree-1 pairs: both ends degree 1 (their three matchings coincide)
    for (int v = 0; v < g.vertex_count(); ++v)
        if (inc[v].size() == 1) {
            int w = g.other_end(inc[v][0], v);
            require(inc[w].size() == 1, ErrorKind::PreconditionFailed,
                    "degree-1 vertex not paired with a degree-1 vertex");
        }
    {
        // components made only of degree-2 vertices vanish entirely
        std::vector<int> parent(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::vector<char> touched(g.vertex_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            if (uni.test(e) && !used_edge[e]) {
                auto [a, b] = g.ends(e);
                if (inc[a].size() != 2 || inc[b].size() != 2) continue;
                touched[a] = touched[b] = 1;
                parent[find(a)] = find(b);
            }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (touched[v] && find(v) == v) ++rep.dropped_cycle_components;
    }
    rep.reduced = CubicMultigraph(next, es);
    require(is_bridgeless(rep.reduced), ErrorKind::PreconditionFailed,
            "reduced graph is not bridgeless");
    rep.c = minimal_ceps();
    rep.reduced_pm_count = static_cast<long long>(enumerate_perfect_matchings(rep.reduced, caps).size());
    BigInt lhs = boost::multiprecision::pow(BigInt(rep.reduced_pm_count),
                                            static_cast<unsigned>(rep.c));
    BigInt rhs = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(rep.reduced.vertex_count()));
    rep.bound_chain_consistent = rep.pm_count >= rep.reduced_pm_count && lhs >= rhs;
    return rep;
}

}  // namespace cubicpm
