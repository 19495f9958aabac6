#pragma once

// Deliberately naive second routes. Tests cross-check the production
// algorithms against these; keep them dumb and obviously correct.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/multigraph.hpp"

namespace cubicpm::bruteforce {

// Every bipartition, no shortcuts. Returns the set of cut edge sets of the
// given size; cyclic-only when requested.
inline std::set<std::vector<int>> cuts_by_bipartition(const Multigraph& g, int k, bool cyclic_only) {
    const int n = g.vertex_count();
    require(n <= 20, ErrorKind::SizeLimit, "bipartition oracle limited to n <= 20");
    std::set<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        if (mask & (1u << (n - 1))) continue;
        std::vector<char> side(n, 0);
        for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1;
        auto delta = edges_crossing(g, side);
        if (static_cast<int>(delta.size()) != k) continue;
        if (cyclic_only) {
            std::vector<char> co(n);
            for (int v = 0; v < n; ++v) co[v] = !side[v];
            if (!induced_has_cycle(g, side) || !induced_has_cycle(g, co)) continue;
        }
        out.insert(delta);
    }
    return out;
}

// Perfect matching count by vertex-pairing recursion; shares no code with the
// edge-set enumerator.
inline long long count_perfect_matchings(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 1) return 0;
    std::vector<char> used(n, 0);
    long long total = 0;
    auto rec = [&](auto&& self, int covered) -> void {
        if (covered == n) {
            ++total;
            return;
        }
        int v = 0;
        while (used[v]) ++v;
        used[v] = 1;
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (used[w]) continue;
            used[w] = 1;
            self(self, covered + 2);
            used[w] = 0;
        }
        used[v] = 0;
    };
    rec(rec, 0);
    return total;
}

// Permanent of a 0/1 biadjacency matrix by Ryser's formula; counts perfect
// matchings of a bipartite graph.
inline long long permanent(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    long long total = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j)
                if ((mask >> j) & 1) row += a[i][j];
            prod *= row;
        }
        int bits = __builtin_popcount(mask);
        total += ((n - bits) % 2 == 0 ? 1 : -1) * prod;
    }
    return total;
}

// All simple cycles of G|X as edge-id sets (2-cycles from parallel edges
// included).
inline std::vector<std::vector<int>> simple_cycles_in_induced(const Multigraph& g,
                                                              const std::vector<char>& mask) {
    std::set<std::vector<int>> found;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path_edges;
    for (int root = 0; root < n; ++root) {
        if (!mask[root]) continue;
        on_path[root] = 1;
        auto dfs = [&](auto&& self, int v) -> void {
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (!mask[w] || !mask[v]) continue;
                if (w == root && (path_edges.empty() || e != path_edges.back())) {
                    if (!path_edges.empty()) {
                        std::vector<int> cyc = path_edges;
                        cyc.push_back(e);
                        if (cyc.size() >= 2) {
                            std::sort(cyc.begin(), cyc.end());
                            found.insert(cyc);
                        }
                    }
                    continue;
                }
                if (w <= root || on_path[w]) continue;
                on_path[w] = 1;
                path_edges.push_back(e);
                self(self, w);
                path_edges.pop_back();
                on_path[w] = 0;
            }
        };
        dfs(dfs, root);
        on_path[root] = 0;
    }
    return {found.begin(), found.end()};
}

// Maximum number of vertex-disjoint M-alternating cycles in G|X, by explicit
// cycle enumeration and backtracking over the packing.
inline int alternating_cycle_packing(const Multigraph& g, const std::vector<char>& mask,
                                     const std::vector<int>& matching_edges) {
    std::vector<char> in_m(g.edge_count(), 0);
    for (int e : matching_edges) in_m[e] = 1;
    std::vector<std::vector<int>> alt;        // edge sets
    std::vector<std::vector<char>> alt_mask;  // vertex masks
    for (const auto& cyc : simple_cycles_in_induced(g, mask)) {
        if (cyc.size() % 2 != 0) continue;
        // Alternation: every vertex of the cycle meets one matched cycle edge.
        std::size_t matched = 0;
        for (int e : cyc) matched += in_m[e];
        if (matched * 2 != cyc.size()) continue;
        std::map<int, int> matched_at;
        bool ok = true;
        for (int e : cyc) {
            auto [u, v] = g.ends(e);
            if (in_m[e]) {
                matched_at[u] += 1;
                matched_at[v] += 1;
            } else {
                matched_at[u] += 0;
                matched_at[v] += 0;
            }
        }
        for (auto [v, c] : matched_at)
            if (c != 1) ok = false;
        if (!ok) continue;
        std::vector<char> vm(g.vertex_count(), 0);
        for (int e : cyc) {
            auto [u, v] = g.ends(e);
            vm[u] = vm[v] = 1;
        }
        alt.push_back(cyc);
        alt_mask.push_back(vm);
    }
    int best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    auto rec = [&](auto&& self, std::size_t i, int picked) -> void {
        best = std::max(best, picked);
        if (i >= alt.size()) return;
        if (picked + static_cast<int>(alt.size() - i) <= best) return;
        // skip
        self(self, i + 1, picked);
        // take if disjoint
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alt_mask[i][v] && used[v]) return;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alt_mask[i][v]) used[v] = 1;
        self(self, i + 1, picked + 1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alt_mask[i][v]) used[v] = 0;
    };
    rec(rec, 0, 0);
    return best;
}

// Unit-capacity max flow (stops at 4) between the contracted ends of two
// vertex-disjoint edges.
inline int maxflow_between_contracted_edges(const Multigraph& g, int e_src, int e_dst, int cap = 4) {
    const int n = g.vertex_count();
    auto [s1, s2] = g.ends(e_src);
    auto [t1, t2] = g.ends(e_dst);
    std::vector<int> group(n, -1);
    group[s1] = group[s2] = 0;
    group[t1] = group[t2] = 1;
    // residual capacities: each undirected edge 1 unit either way
    std::vector<std::array<int, 2>> res(g.edge_count(), {1, 1});
    auto side_of = [&](int e, int v) { return g.ends(e).first == v ? 0 : 1; };
    int flow = 0;
    while (flow < cap) {
        std::vector<int> pred_edge(n, -1), pred_vert(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (group[v] == 0) {
                seen[v] = 1;
                queue.push_back(v);
            }
        bool reached = false;
        int reach_v = -1;
        for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
            int v = queue[qi];
            for (int e : g.incident(v)) {
                if (e == e_src || e == e_dst) continue;
                int w = g.other_end(e, v);
                if (seen[w]) continue;
                if (res[e][side_of(e, v)] <= 0) continue;
                seen[w] = 1;
                pred_edge[w] = e;
                pred_vert[w] = v;
                if (group[w] == 1) {
                    reached = true;
                    reach_v = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (!reached) break;
        int v = reach_v;
        while (pred_edge[v] >= 0) {
            int e = pred_edge[v];
            int u = pred_vert[v];
            res[e][side_of(e, u)] -= 1;
            res[e][1 - side_of(e, u)] += 1;
            v = u;
        }
        ++flow;
    }
    return flow;
}

// Flow route for the cyclic-connectivity decision.
inline bool cyclically_4ec_by_flow(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<char> removed(g.edge_count(), 0);
        removed[e] = 1;
        std::vector<int> comp;
        detail::collect_components(g, removed, comp);
        if (*std::max_element(comp.begin(), comp.end()) > 0) return false;  // bridge
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        for (int f = e + 1; f < g.edge_count(); ++f) {
            auto [c, d] = g.ends(f);
            if (a == c || a == d || b == c || b == d) continue;
            if (maxflow_between_contracted_edges(g, e, f) <= 3) return false;
        }
    }
    return true;
}

}  // namespace cubicpm::bruteforce
