#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

// G|X contains a cycle iff some edge inside X closes one (parallel edges
// close 2-cycles, which count).
inline bool induced_has_cycle(const Multigraph& g, const std::vector<char>& mask) {
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        if (!mask[u] || !mask[v]) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) return true;
        parent[ru] = rv;
    }
    return false;
}

struct EdgeCut {
    std::vector<int> side;       // X, sorted
    std::vector<int> cut_edges;  // delta(X), sorted edge ids
    int size = 0;
    bool odd = false;
    bool cyclic = false;
};

// delta(X) with parity and cyclic flag. Precondition: {} != X != V.
inline EdgeCut edge_cut(const Multigraph& g, const std::vector<int>& xs) {
    require(!xs.empty(), ErrorKind::EmptySide, "cut side is empty");
    auto mask = subset_mask(g, xs);
    require(static_cast<int>(xs.size()) < g.vertex_count(), ErrorKind::EmptySide,
            "cut side is the whole vertex set");
    EdgeCut cut;
    cut.side = xs;
    std::sort(cut.side.begin(), cut.side.end());
    cut.side.erase(std::unique(cut.side.begin(), cut.side.end()), cut.side.end());
    cut.cut_edges = edges_crossing(g, mask);
    cut.size = static_cast<int>(cut.cut_edges.size());
    cut.odd = cut.size % 2 == 1;
    std::vector<char> co(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) co[i] = !mask[i];
    cut.cyclic = induced_has_cycle(g, mask) && induced_has_cycle(g, co);
    return cut;
}

namespace detail {

// Canonical representative: the side avoiding vertex 0.
inline EdgeCut canonical_cut(const Multigraph& g, const std::vector<int>& side) {
    auto mask = subset_mask(g, side);
    if (mask[0]) return edge_cut(g, complement_vertices(g, mask));
    return edge_cut(g, side);
}

inline void collect_components(const Multigraph& g, const std::vector<char>& removed_edge,
                               std::vector<int>& comp) {
    comp.assign(g.vertex_count(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                if (removed_edge[e]) continue;
                int w = g.other_end(e, v);
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
}

}  // namespace detail

// All edge cuts of the given size (1, 2 or 3), cyclic or not, one entry per
// bipartition. Exhaustive bipartition sweep for small n, minimal-edge-subset
// scan beyond.
inline std::vector<EdgeCut> all_cuts_of_size(const Multigraph& g, int k, int exhaustive_limit = 16) {
    require(k >= 1 && k <= 3, ErrorKind::BadParams, "cut size must be 1..3");
    require(g.connected(), ErrorKind::Disconnected, "cut enumeration needs a connected graph");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::set<std::vector<int>> seen;
    std::vector<EdgeCut> out;
    if (n < 2) return out;

    auto push = [&](const std::vector<int>& side) {
        EdgeCut cut = detail::canonical_cut(g, side);
        if (cut.size != k) return;
        if (seen.insert(cut.cut_edges).second) out.push_back(std::move(cut));
    };

    if (n <= std::min(exhaustive_limit, 24)) {
        // Sides drawn from subsets not containing vertex n-1.
        for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
            int crossing = 0;
            for (int e = 0; e < m && crossing <= k; ++e) {
                auto [u, v] = g.ends(e);
                bool iu = u < n - 1 && ((mask >> u) & 1);
                bool iv = v < n - 1 && ((mask >> v) & 1);
                if (iu != iv) ++crossing;
            }
            if (crossing != k) continue;
            std::vector<int> side;
            for (int v = 0; v + 1 < n; ++v)
                if ((mask >> v) & 1) side.push_back(v);
            push(side);
        }
    } else {
        std::vector<char> removed(m, 0);
        std::vector<int> comp;
        auto try_subset = [&]() {
            detail::collect_components(g, removed, comp);
            int classes = *std::max_element(comp.begin(), comp.end()) + 1;
            if (classes < 2) return;
            for (int c = 0; c < classes; ++c) {
                std::vector<int> side;
                for (int v = 0; v < n; ++v)
                    if (comp[v] == c) side.push_back(v);
                if (static_cast<int>(side.size()) == n) continue;
                auto mask = subset_mask(g, side);
                auto delta = edges_crossing(g, mask);
                if (static_cast<int>(delta.size()) != k) continue;
                bool match = true;
                for (int e : delta)
                    if (!removed[e]) match = false;
                if (match) push(side);
            }
        };
        // Iterate k-subsets of edges.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        if (m >= k) {
            while (true) {
                for (int i = 0; i < k; ++i) removed[idx[i]] = 1;
                try_subset();
                for (int i = 0; i < k; ++i) removed[idx[i]] = 0;
                int pos = k - 1;
                while (pos >= 0 && idx[pos] == m - k + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const EdgeCut& a, const EdgeCut& b) { return a.cut_edges < b.cut_edges; });
    return out;
}

struct ConnectivityReport {
    bool bridgeless = false;
    std::vector<EdgeCut> bridges;
    std::vector<EdgeCut> two_edge_cuts;
    std::vector<EdgeCut> cyclic_three_cuts;
    // True iff no cyclic edge-cut of size <= 3 exists; graphs with no cyclic
    // cut at all (K4, B3, K3,3) count as cyclically 4-edge-connected.
    bool cyclically_4_edge_connected = false;
};

inline ConnectivityReport connectivity_report(const Multigraph& g, int exhaustive_limit = 16) {
    require(g.connected(), ErrorKind::Disconnected, "connectivity report needs a connected graph");
    ConnectivityReport rep;
    rep.bridges = all_cuts_of_size(g, 1, exhaustive_limit);
    rep.two_edge_cuts = all_cuts_of_size(g, 2, exhaustive_limit);
    for (auto& cut : all_cuts_of_size(g, 3, exhaustive_limit))
        if (cut.cyclic) rep.cyclic_three_cuts.push_back(cut);
    rep.bridgeless = rep.bridges.empty();
    bool cyclic_small = false;
    for (const auto& c : rep.bridges) cyclic_small |= c.cyclic;
    for (const auto& c : rep.two_edge_cuts) cyclic_small |= c.cyclic;
    cyclic_small |= !rep.cyclic_three_cuts.empty();
    rep.cyclically_4_edge_connected = !cyclic_small;
    return rep;
}

inline bool is_bridgeless(const Multigraph& g) {
    return g.connected() && all_cuts_of_size(g, 1).empty();
}

inline bool is_cyclically_4ec(const Multigraph& g, int exhaustive_limit = 16) {
    return connectivity_report(g, exhaustive_limit).cyclically_4_edge_connected;
}

// First cyclic cut of size <= 3 in enumeration order, if any. Works on the
// subdivided hubs that contain degree-2 vertices.
inline std::optional<EdgeCut> find_cyclic_cut_upto3(const Multigraph& g, int exhaustive_limit = 16) {
    for (int k = 1; k <= 3; ++k)
        for (auto& cut : all_cuts_of_size(g, k, exhaustive_limit))
            if (cut.cyclic) return cut;
    return std::nullopt;
}

// All cyclic cuts of size 2 or 3; the cuts a cut-contraction can act on.
inline std::vector<EdgeCut> cyclic_cuts_2_3(const Multigraph& g, int exhaustive_limit = 16) {
    std::vector<EdgeCut> out;
    for (int k = 2; k <= 3; ++k)
        for (auto& cut : all_cuts_of_size(g, k, exhaustive_limit))
            if (cut.cyclic) out.push_back(cut);
    return out;
}

}  // namespace cubicpm
