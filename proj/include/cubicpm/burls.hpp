#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicpm/balanced.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/generators.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/twigs.hpp"

namespace cubicpm {

// Vertex set certified to be a burl, with the lemma (or LP) that certified it.
struct Burl {
    std::vector<int> vertices;  // sorted
    TwigKind kind = TwigKind::None;
    std::string certificate;
};

inline Burl make_burl(const Multigraph& g, std::vector<int> xs, const std::string& cert) {
    std::sort(xs.begin(), xs.end());
    Burl b;
    b.kind = is_twig(g, xs);
    b.vertices = std::move(xs);
    b.certificate = cert;
    return b;
}

// Twigs are burls outright.
inline std::optional<Burl> burl_by_twig(const Multigraph& g, const std::vector<int>& xs) {
    if (is_twig(g, xs) == TwigKind::None) return std::nullopt;
    return make_burl(g, xs, "twig");
}

// |delta(X)| = 4 and the induced subgraph has two perfect matchings.
inline std::optional<Burl> burl_by_4cut(const Multigraph& g, const std::vector<int>& xs,
                                        const EnumerationCaps& caps = {}) {
    EdgeCut cut = edge_cut(g, xs);
    require(cut.size == 4, ErrorKind::NotFourCut,
            "expected |delta(X)| = 4, got " + std::to_string(cut.size));
    auto mask = subset_mask(g, xs);
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < cut.side.size(); ++i) new_id[cut.side[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int e : edges_inside(g, mask)) {
        auto [u, v] = g.ends(e);
        es.emplace_back(new_id[u], new_id[v]);
    }
    Multigraph induced(static_cast<int>(cut.side.size()), es);
    auto pms = enumerate_perfect_matchings(induced, caps);
    if (pms.size() < 2) return std::nullopt;
    return make_burl(g, xs, "4cut");
}

namespace detail {

inline void check_path_in_tree(const SmallCutDecomposition& d, const std::vector<int>& path) {
    require(!path.empty(), ErrorKind::HypothesisFailed, "empty tree path");
    auto adj = d.tree_adjacency();
    std::vector<char> seen(d.tree_size, 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        int t = path[i];
        require(t >= 0 && t < d.tree_size && !seen[t], ErrorKind::HypothesisFailed,
                "tree path repeats or leaves the tree");
        seen[t] = 1;
        if (i == 0) continue;
        bool adjacent = false;
        for (int f : adj[t]) {
            auto [a, b] = d.tree_edges[f];
            if (a + b - t == path[i - 1]) adjacent = true;
        }
        require(adjacent, ErrorKind::HypothesisFailed, "vertices not consecutive in the tree");
    }
}

// Tree edges incident to the path, in path order: the outer edge at the first
// vertex, then the path edges, then the outer edge at the last vertex.
// Requires every path vertex to have tree degree 2.
inline std::vector<int> incident_edges_in_order(const SmallCutDecomposition& d,
                                                const std::vector<int>& path) {
    auto adj = d.tree_adjacency();
    for (int t : path)
        require(d.tree_degree(t) == 2, ErrorKind::HypothesisFailed,
                "path vertex " + std::to_string(t) + " does not have tree degree 2");
    auto edge_between = [&](int a, int b) {
        for (int f : adj[a]) {
            auto [x, y] = d.tree_edges[f];
            if (x + y - a == b) return f;
        }
        return -1;
    };
    std::vector<int> order;
    int first = path.front();
    int next_on_path = path.size() > 1 ? path[1] : -1;
    for (int f : adj[first]) {
        auto [x, y] = d.tree_edges[f];
        if (x + y - first != next_on_path) order.push_back(f);
    }
    require(order.size() == (path.size() > 1 ? 1u : 2u), ErrorKind::HypothesisFailed,
            "path end has no outer edge");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) order.push_back(edge_between(path[i], path[i + 1]));
    if (path.size() > 1) {
        int last = path.back();
        int prev = path[path.size() - 2];
        for (int f : adj[last]) {
            auto [x, y] = d.tree_edges[f];
            if (x + y - last != prev) order.push_back(f);
        }
    }
    require(order.size() == path.size() + 1, ErrorKind::HypothesisFailed,
            "expected |V(P)|+1 incident tree edges");
    return order;
}

inline bool hub_isomorphic_to(const CubicMultigraph& g, const SmallCutDecomposition& d, int t,
                              const std::string& canon) {
    return canonical_form(hub_at(g, d, t).graph) == canon;
}

inline const std::string& k4_canon() {
    static const std::string c = canonical_form(make_k4());
    return c;
}

inline const std::string& b3_canon() {
    static const std::string c = canonical_form(make_b3());
    return c;
}

}  // namespace detail

// Path of 10 degree-2 tree vertices with K4 hubs and 3-cuts on all incident
// tree edges certifies phi^{-1}(P) as a burl.
inline Burl burl_by_k4_chain(const CubicMultigraph& g, const SmallCutDecomposition& d,
                             const std::vector<int>& path) {
    detail::check_path_in_tree(d, path);
    require(path.size() == 10, ErrorKind::HypothesisFailed,
            "|V(P)| must be 10, got " + std::to_string(path.size()));
    auto order = detail::incident_edges_in_order(d, path);
    for (int f : order) {
        int size = cut_of_tree_edge(g, d, f).size;
        require(size == 3, ErrorKind::HypothesisFailed,
                "incident tree edge " + std::to_string(f) + " has cut size " + std::to_string(size));
    }
    for (int t : path)
        require(detail::hub_isomorphic_to(g, d, t, detail::k4_canon()), ErrorKind::HypothesisFailed,
                "hub at tree vertex " + std::to_string(t) + " is not K4");
    return make_burl(g, preimage_of(d, path), "k4chain");
}

// Path of degree-2 tree vertices with three incident 2-cut tree edges.
inline Burl burl_by_2cuts(const CubicMultigraph& g, const SmallCutDecomposition& d,
                          const std::vector<int>& path) {
    detail::check_path_in_tree(d, path);
    auto order = detail::incident_edges_in_order(d, path);
    int twos = 0;
    for (int f : order)
        if (cut_of_tree_edge(g, d, f).size == 2) ++twos;
    require(twos >= 3, ErrorKind::HypothesisFailed,
            "need three incident 2-cut tree edges, found " + std::to_string(twos));
    return make_burl(g, preimage_of(d, path), "2cuts");
}

// Path of 32 degree-2 tree vertices whose hubs are K4 or B3: dispatches to
// the 2-cut corollary or finds 11 consecutive 3-cut incident edges and uses
// the K4-chain lemma on the window between them.
inline Burl burl_by_tree_branch(const CubicMultigraph& g, const SmallCutDecomposition& d,
                                const std::vector<int>& path) {
    detail::check_path_in_tree(d, path);
    require(path.size() == 32, ErrorKind::HypothesisFailed,
            "|V(P)| must be 32, got " + std::to_string(path.size()));
    for (int t : path) {
        bool ok = detail::hub_isomorphic_to(g, d, t, detail::k4_canon()) ||
                  detail::hub_isomorphic_to(g, d, t, detail::b3_canon());
        require(ok, ErrorKind::HypothesisFailed,
                "hub at tree vertex " + std::to_string(t) + " is neither K4 nor B3");
    }
    auto order = detail::incident_edges_in_order(d, path);  // 33 edges in path order
    int twos = 0;
    for (int f : order)
        if (cut_of_tree_edge(g, d, f).size == 2) ++twos;
    if (twos >= 3) {
        Burl inner = burl_by_2cuts(g, d, path);
        inner.certificate = "treebranch/2cuts";
        return inner;
    }
    // at most two 2-cuts among 33 edges: some run of 11 consecutive 3-cuts
    int run = 0, run_end = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (cut_of_tree_edge(g, d, order[i]).size == 3) {
            if (++run >= 11 && run_end < 0) run_end = static_cast<int>(i);
        } else {
            run = 0;
        }
        if (run_end >= 0) break;
    }
    require(run_end >= 0, ErrorKind::HypothesisFailed, "no run of 11 consecutive 3-cut edges");
    // edges order[run_end-10 .. run_end] surround path vertices
    // path[run_end-10 .. run_end-1]
    std::vector<int> window(path.begin() + (run_end - 10), path.begin() + run_end);
    burl_by_k4_chain(g, d, window);  // certifies the window; throws if the hypothesis fails
    return make_burl(g, preimage_of(d, path), "treebranch/k4chain");
}

}  // namespace cubicpm
