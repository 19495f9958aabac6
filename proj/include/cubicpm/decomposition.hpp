#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cubicpm/contraction.hpp"
#include "cubicpm/cuts.hpp"
#include "cubicpm/multigraph.hpp"

namespace cubicpm {

// Tree T plus phi: V(G) -> V(T); every tree edge induces a 2- or 3-edge-cut
// and |phi^{-1}(t)| + deg_T(t) >= 3 holds at every tree vertex.
struct SmallCutDecomposition {
    int tree_size = 0;
    std::vector<std::pair<int, int>> tree_edges;  // ids are positions in this list
    std::vector<int> phi;                         // graph vertex -> tree vertex

    std::vector<int> preimage(int t) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(phi.size()); ++v)
            if (phi[v] == t) out.push_back(v);
        return out;
    }

    int tree_degree(int t) const {
        int d = 0;
        for (auto [a, b] : tree_edges) d += (a == t) + (b == t);
        return d;
    }

    std::vector<std::vector<int>> tree_adjacency() const {
        std::vector<std::vector<int>> adj(tree_size);
        for (int f = 0; f < static_cast<int>(tree_edges.size()); ++f) {
            adj[tree_edges[f].first].push_back(f);
            adj[tree_edges[f].second].push_back(f);
        }
        return adj;
    }

    // Tree vertices reachable from `start` without crossing edge `banned`.
    std::vector<int> tree_component(int start, int banned_edge) const {
        auto adj = tree_adjacency();
        std::vector<char> seen(tree_size, 0);
        std::vector<int> stack{start}, out;
        seen[start] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            out.push_back(t);
            for (int f : adj[t]) {
                if (f == banned_edge) continue;
                auto [a, b] = tree_edges[f];
                int w = a == t ? b : a;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline std::vector<int> preimage_of(const SmallCutDecomposition& d, const std::vector<int>& ts) {
    std::vector<char> want(d.tree_size, 0);
    for (int t : ts) want[t] = 1;
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(d.phi.size()); ++v)
        if (want[d.phi[v]]) out.push_back(v);
    return out;
}

// The edge-cut phi^{-1}(f), recomputed from scratch; the side is the preimage
// of the component containing the edge's first endpoint.
inline EdgeCut cut_of_tree_edge(const Multigraph& g, const SmallCutDecomposition& d, int f) {
    auto comp = d.tree_component(d.tree_edges[f].first, f);
    return edge_cut(g, preimage_of(d, comp));
}

inline void validate_decomposition(const Multigraph& g, const SmallCutDecomposition& d) {
    require(d.tree_size >= 2 && static_cast<int>(d.tree_edges.size()) == d.tree_size - 1,
            ErrorKind::PreconditionFailed, "decomposition tree must have E(T) nonempty");
    // connectivity of T
    std::vector<int> parent(d.tree_size);
    for (int i = 0; i < d.tree_size; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : d.tree_edges) {
        require(a >= 0 && a < d.tree_size && b >= 0 && b < d.tree_size && a != b,
                ErrorKind::PreconditionFailed, "bad tree edge");
        require(find(a) != find(b), ErrorKind::PreconditionFailed, "tree has a cycle");
        parent[find(a)] = find(b);
    }
    require(static_cast<int>(d.phi.size()) == g.vertex_count(), ErrorKind::PreconditionFailed,
            "phi must map every vertex");
    for (int v : d.phi)
        require(v >= 0 && v < d.tree_size, ErrorKind::PreconditionFailed, "phi out of range");
    for (int t = 0; t < d.tree_size; ++t)
        require(static_cast<int>(d.preimage(t).size()) + d.tree_degree(t) >= 3,
                ErrorKind::PreconditionFailed,
                "degree rule fails at tree vertex " + std::to_string(t));
    for (int f = 0; f < static_cast<int>(d.tree_edges.size()); ++f) {
        EdgeCut cut = cut_of_tree_edge(g, d, f);
        require(cut.size == 2 || cut.size == 3, ErrorKind::PreconditionFailed,
                "tree edge " + std::to_string(f) + " induces a cut of size " +
                    std::to_string(cut.size));
    }
}

// Construction behind the refinable-collections lemma: a star for larger
// collections, explicit two-vertex trees for the small cases.
inline SmallCutDecomposition refine_decomposition(const CubicMultigraph& g,
                                                  const std::vector<std::vector<int>>& ys) {
    const int n = g.vertex_count();
    std::vector<char> taken(n, 0);
    for (const auto& y : ys) {
        require(y.size() >= 2, ErrorKind::PreconditionFailed, "collection member smaller than 2");
        EdgeCut cut = edge_cut(g, y);
        require(cut.size == 2 || cut.size == 3, ErrorKind::PreconditionFailed,
                "collection member with |delta| not in {2,3}");
        for (int v : y) {
            require(!taken[v], ErrorKind::PreconditionFailed, "collection members overlap");
            taken[v] = 1;
        }
    }
    SmallCutDecomposition d;
    d.phi.assign(n, -1);
    int uncovered = n;
    for (char t : taken) uncovered -= t;
    const int k = static_cast<int>(ys.size());
    if (k == 0) {
        auto cuts = cyclic_cuts_2_3(g);
        require(!cuts.empty(), ErrorKind::PreconditionFailed,
                "graph is cyclically 4-edge-connected; nothing to refine");
        d.tree_size = 2;
        d.tree_edges = {{0, 1}};
        auto mask = subset_mask(g, cuts.front().side);
        for (int v = 0; v < n; ++v) d.phi[v] = mask[v] ? 0 : 1;
    } else if (k == 1) {
        require(uncovered > 1, ErrorKind::PreconditionFailed,
                "single member must leave more than one vertex outside");
        d.tree_size = 2;
        d.tree_edges = {{0, 1}};
        for (int v = 0; v < n; ++v) d.phi[v] = taken[v] ? 0 : 1;
    } else if (k == 2 && uncovered == 0) {
        d.tree_size = 2;
        d.tree_edges = {{0, 1}};
        auto mask = subset_mask(g, ys[0]);
        for (int v = 0; v < n; ++v) d.phi[v] = mask[v] ? 0 : 1;
    } else {
        d.tree_size = k + 1;  // leaves 0..k-1, centre k
        for (int i = 0; i < k; ++i) d.tree_edges.emplace_back(i, k);
        for (int v = 0; v < n; ++v) d.phi[v] = k;
        for (int i = 0; i < k; ++i)
            for (int v : ys[i]) d.phi[v] = i;
    }
    validate_decomposition(g, d);
    return d;
}

// --- hubs --------------------------------------------------------------------

struct HubResult {
    CubicMultigraph graph;
    std::vector<int> vertex_origin;     // hub vertex -> G vertex, -1 for new
    std::vector<int> vertex_tree_edge;  // new vertex -> tree edge id, else -1
    std::vector<int> edge_origin;       // hub edge -> G edge, -1 for new
    std::vector<int> edge_tree_edge;    // new edge -> tree edge id, else -1
};

// Hub of G at the subtree T0: contract the cut of every component hanging off
// T0, keeping T0's side, in increasing tree-edge id order (or the order given).
inline HubResult hub(const CubicMultigraph& g, const SmallCutDecomposition& d,
                     const std::vector<int>& t0, std::vector<int> order = {}) {
    std::vector<char> in_t0(d.tree_size, 0);
    for (int t : t0) in_t0[t] = 1;
    require(!preimage_of(d, t0).empty(), ErrorKind::EmptyPreimage,
            "hub needs a subtree with nonempty preimage");
    // components of T minus T0, each with its connecting tree edge
    std::vector<int> comp_edge;  // tree edge ids
    std::vector<std::vector<int>> comp_verts;
    {
        std::vector<char> seen(d.tree_size, 0);
        auto adj = d.tree_adjacency();
        for (int f = 0; f < static_cast<int>(d.tree_edges.size()); ++f) {
            auto [a, b] = d.tree_edges[f];
            if (in_t0[a] == in_t0[b]) continue;
            int root = in_t0[a] ? b : a;
            if (seen[root]) continue;
            std::vector<int> verts, stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                verts.push_back(t);
                for (int fe : adj[t]) {
                    auto [x, y] = d.tree_edges[fe];
                    int w = x == t ? y : x;
                    if (in_t0[w] || seen[w]) continue;
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
            comp_edge.push_back(f);
            comp_verts.push_back(std::move(verts));
        }
    }
    if (order.empty()) {
        order.resize(comp_edge.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return comp_edge[a] < comp_edge[b]; });
    }

    HubResult res;
    res.graph = g;
    res.vertex_origin.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) res.vertex_origin[v] = v;
    res.vertex_tree_edge.assign(g.vertex_count(), -1);
    res.edge_origin.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) res.edge_origin[e] = e;
    res.edge_tree_edge.assign(g.edge_count(), -1);

    for (int idx : order) {
        const auto& region = comp_verts[idx];
        std::vector<char> region_tree(d.tree_size, 0);
        for (int t : region) region_tree[t] = 1;
        std::vector<int> side;
        for (int v = 0; v < res.graph.vertex_count(); ++v) {
            int orig = res.vertex_origin[v];
            if (orig >= 0 && region_tree[d.phi[orig]]) side.push_back(v);
        }
        EdgeCut cut = edge_cut(res.graph, side);
        require(cut.size == 2 || cut.size == 3, ErrorKind::PreconditionFailed,
                "hanging component induces a cut of size " + std::to_string(cut.size));
        auto rec = cut_contract(res.graph, cut);
        const ContractionPiece& piece = rec.with_complement;
        HubResult next;
        next.graph = piece.graph;
        for (int v = 0; v < piece.graph.vertex_count(); ++v) {
            int prev = piece.vertex_origin[v];
            next.vertex_origin.push_back(prev >= 0 ? res.vertex_origin[prev] : -1);
            next.vertex_tree_edge.push_back(prev >= 0 ? res.vertex_tree_edge[prev]
                                                      : comp_edge[idx]);
        }
        for (int e = 0; e < piece.graph.edge_count(); ++e) {
            int prev = piece.edge_origin[e];
            next.edge_origin.push_back(prev >= 0 ? res.edge_origin[prev] : -1);
            next.edge_tree_edge.push_back(prev >= 0 ? res.edge_tree_edge[prev] : comp_edge[idx]);
        }
        res = std::move(next);
    }
    return res;
}

inline HubResult hub_at(const CubicMultigraph& g, const SmallCutDecomposition& d, int t) {
    return hub(g, d, std::vector<int>{t});
}

// --- maximization ------------------------------------------------------------

namespace detail {

struct MarkedQuotient {
    Multigraph graph;
    std::vector<int> real_origin;      // quotient vertex -> G vertex, -1 for markers
    std::vector<int> marker_tree_edge; // quotient vertex -> tree edge id, -1 for reals
};

// Keep phi^{-1}(t) as real vertices and identify the region hanging off each
// incident tree edge to a single marker vertex. 3-cut markers take the role
// of the new vertex of a contraction; 2-cut markers take the role of the
// subdivision vertex on the new edge.
inline MarkedQuotient marked_quotient(const CubicMultigraph& g, const SmallCutDecomposition& d,
                                      int t) {
    MarkedQuotient q;
    auto adj = d.tree_adjacency();
    std::vector<int> vmap(g.vertex_count(), -1);
    auto pre = d.preimage(t);
    require(!pre.empty(), ErrorKind::EmptyPreimage, "quotient needs a nonempty preimage");
    for (int v : pre) {
        vmap[v] = static_cast<int>(q.real_origin.size());
        q.real_origin.push_back(v);
        q.marker_tree_edge.push_back(-1);
    }
    for (int f : adj[t]) {
        auto [a, b] = d.tree_edges[f];
        int root = a == t ? b : a;
        int marker = static_cast<int>(q.real_origin.size());
        q.real_origin.push_back(-1);
        q.marker_tree_edge.push_back(f);
        for (int tv : d.tree_component(root, f))
            for (int v = 0; v < g.vertex_count(); ++v)
                if (d.phi[v] == tv) vmap[v] = marker;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
        int qu = vmap[u], qv = vmap[v];
        if (qu == qv) continue;  // internal to a region (or would be a loop)
        es.emplace_back(qu, qv);
    }
    q.graph = Multigraph(static_cast<int>(q.real_origin.size()), es);
    return q;
}

}  // namespace detail

// Repeatedly split a tree vertex whose marked quotient still has a cyclic cut
// of size <= 3 (skipping empty preimages and members of ys). |V(T)| grows at
// every split and is bounded, so this terminates; the result satisfies the
// trichotomy: empty preimage, member of ys, or cyclically 4-edge-connected hub.
inline SmallCutDecomposition maximize_decomposition(const CubicMultigraph& g,
                                                    SmallCutDecomposition d,
                                                    const std::vector<std::vector<int>>& ys) {
    validate_decomposition(g, d);
    std::set<std::vector<int>> protected_sets;
    for (auto y : ys) {
        std::sort(y.begin(), y.end());
        protected_sets.insert(y);
    }
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int t = 0; t < d.tree_size && !progressed; ++t) {
            auto pre = d.preimage(t);
            if (pre.empty()) continue;
            if (protected_sets.count(pre)) continue;
            auto q = detail::marked_quotient(g, d, t);
            auto cut = find_cyclic_cut_upto3(q.graph);
            if (!cut) continue;
            require(cut->size == 2 || cut->size == 3, ErrorKind::PreconditionFailed,
                    "quotient produced a bridge; host graph is not bridgeless");
            std::vector<char> in_z(q.graph.vertex_count(), 0);
            for (int v : cut->side) in_z[v] = 1;
            int t2 = d.tree_size++;
            // real vertices on the Z side stay at t, the others move to t2
            for (int i = 0; i < q.graph.vertex_count(); ++i) {
                if (q.real_origin[i] >= 0 && !in_z[i]) d.phi[q.real_origin[i]] = t2;
            }
            // reattach neighbours whose marker is outside Z
            for (int i = 0; i < q.graph.vertex_count(); ++i) {
                if (q.marker_tree_edge[i] < 0 || in_z[i]) continue;
                auto& [a, b] = d.tree_edges[q.marker_tree_edge[i]];
                if (a == t) a = t2;
                else b = t2;
            }
            d.tree_edges.emplace_back(t, t2);
            validate_decomposition(g, d);
            progressed = true;
        }
    }
    return d;
}

}  // namespace cubicpm
