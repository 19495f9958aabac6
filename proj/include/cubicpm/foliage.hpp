#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/burls.hpp"
#include "cubicpm/constants.hpp"
#include "cubicpm/core.hpp"
#include "cubicpm/foliage_fwd.hpp"

namespace cubicpm {

inline ConstantValue foliage_weight(const Foliage& f) {
    ConstantValue beta1 = cv_times_x(Rational(154, 314));
    ConstantValue beta2 = cv_times_x(Rational(74, 314));
    ConstantValue total;
    for (const auto& b : f.burls)
        total = total + (b.kind != TwigKind::None ? beta1 : beta2);
    return total;
}

inline void validate_foliage_disjoint(const Foliage& f) {
    std::vector<int> all;
    for (const auto& b : f.burls) all.insert(all.end(), b.vertices.begin(), b.vertices.end());
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(), ErrorKind::PreconditionFailed,
            "foliage members overlap");
}

namespace detail {

[[noreturn]] inline void stuck(const std::string& what) {
    // Diagnostic only: the induction of the Klee lemma should never reach
    // this; the message is the trace for manual comparison with the proof.
    fail(ErrorKind::InductionStuck, what);
}

struct KleeContext {
    EnumerationCaps caps;
};

inline void check_klee_preconditions(const CubicMultigraph& g, const std::vector<int>& zs,
                                     ErrorKind kind) {
    require(is_pruned(g), kind, "klee needs a pruned graph");
    EdgeCut cut = edge_cut(g, zs);
    bool ok = (cut.size == 2 && zs.size() >= 2) || (cut.size == 3 && zs.size() >= 4);
    require(ok, kind,
            "need |delta(Z)|=2 with |Z|>=2 or |delta(Z)|=3 with |Z|>=4; got cut " +
                std::to_string(cut.size) + " and |Z|=" + std::to_string(zs.size()));
    auto rec = cut_contract(g, cut);
    require(!has_core(rec.with_side.graph).has_core, kind,
            "the delta(Z)-contraction containing Z has a core");
}

inline Burl map_burl_to_host(const Multigraph& host, const Burl& b,
                             const std::vector<int>& vertex_origin) {
    std::vector<int> verts;
    for (int v : b.vertices) {
        require(vertex_origin[v] >= 0, ErrorKind::PreconditionFailed,
                "burl touches a new element and cannot be lifted");
        verts.push_back(vertex_origin[v]);
    }
    return make_burl(host, verts, b.certificate);
}

inline Foliage klee_recurse(const CubicMultigraph& g, std::vector<int> zs, const KleeContext& ctx);

// Contract everything outside `keep_side_in_g` (which is phi^{-1} of the
// tree remainder, in host coordinates), recurse on the piece that holds the
// leftover of Z, and lift the foliage back to host coordinates.
inline std::vector<Burl> recurse_through_contraction(const CubicMultigraph& g,
                                                     const std::vector<int>& zs,
                                                     const std::vector<int>& removed_side_in_g,
                                                     const KleeContext& ctx) {
    EdgeCut cut_g = edge_cut(g, removed_side_in_g);
    if (cut_g.size != 2 && cut_g.size != 3) stuck("removed side induces a cut of size " + std::to_string(cut_g.size));
    auto rec = cut_contract(g, cut_g);
    const ContractionPiece& piece = rec.with_complement;

    // Z' = surviving part of Z plus the new vertex of a 3-cut contraction.
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : removed_side_in_g) removed[v] = 1;
    std::vector<int> zprime;
    for (int i = 0; i < piece.graph.vertex_count(); ++i) {
        int orig = piece.vertex_origin[i];
        if (orig < 0) {
            zprime.push_back(i);  // new vertex stands in for the removed part of Z
            continue;
        }
        if (!removed[orig] &&
            std::binary_search(zs.begin(), zs.end(), orig))
            zprime.push_back(i);
    }

    PruneResult pruned = prune(piece.graph);
    if (pruned.contractions > 1)
        stuck("contraction produced " + std::to_string(pruned.contractions) + " irrelevant triangles");
    std::vector<int> zp;
    for (int v : zprime) zp.push_back(pruned.final_of_original[v]);
    std::sort(zp.begin(), zp.end());
    zp.erase(std::unique(zp.begin(), zp.end()), zp.end());

    std::vector<Burl> lifted;
    if (zp.size() > 6) {
        check_klee_preconditions(pruned.graph, zp, ErrorKind::InductionStuck);
        Foliage sub = klee_recurse(pruned.graph, zp, ctx);
        // expand the pruned triangle back, then drop members touching the
        // new element, then map into host coordinates
        std::vector<std::vector<int>> expand(pruned.graph.vertex_count());
        for (int v = 0; v < piece.graph.vertex_count(); ++v)
            expand[pruned.final_of_original[v]].push_back(v);
        for (const auto& b : sub.burls) {
            std::vector<int> in_piece;
            for (int w : b.vertices)
                for (int v : expand[w]) in_piece.push_back(v);
            std::sort(in_piece.begin(), in_piece.end());
            bool drop = false;
            if (cut_g.size == 3) {
                drop = std::binary_search(in_piece.begin(), in_piece.end(), piece.new_vertex);
            } else {
                auto [a, b2] = piece.graph.ends(piece.new_edge);
                drop = std::binary_search(in_piece.begin(), in_piece.end(), a) &&
                       std::binary_search(in_piece.begin(), in_piece.end(), b2);
            }
            if (drop) continue;
            lifted.push_back(map_burl_to_host(g, make_burl(piece.graph, in_piece, b.certificate),
                                              piece.vertex_origin));
        }
    }
    return lifted;
}

inline Foliage klee_recurse(const CubicMultigraph& g, std::vector<int> zs, const KleeContext& ctx) {
    std::sort(zs.begin(), zs.end());
    const ConstantValue alpha = cv_times_x(Rational(1, 314));
    const ConstantValue beta2 = cv_times_x(Rational(74, 314));
    auto finish = [&](Foliage f, const char* branch) {
        validate_foliage_disjoint(f);
        for (const auto& b : f.burls)
            for (int v : b.vertices)
                if (!std::binary_search(zs.begin(), zs.end(), v))
                    stuck(std::string("foliage leaves Z in branch ") + branch);
        ConstantValue target = alpha.scaled(static_cast<int>(zs.size())) + beta2;
        if (compare(foliage_weight(f), target) < 0)
            stuck(std::string("weight bound fails in branch ") + branch + " with |Z|=" +
                  std::to_string(zs.size()));
        return f;
    };

    if (zs.size() <= 6) {
        auto twig = burl_by_twig(g, zs);
        if (!twig) stuck("base case |Z|<=6 is not a twig");
        twig->certificate = "twig(klee-base)";
        return finish(Foliage{{*twig}}, "base");
    }

    EdgeCut zcut = edge_cut(g, zs);
    auto rec = cut_contract(g, zcut);
    const ContractionPiece& piece = rec.with_side;  // contains Z
    const CubicMultigraph& gp = piece.graph;

    // map host->piece for Z bookkeeping
    std::vector<int> to_piece(g.vertex_count(), -1);
    for (int i = 0; i < gp.vertex_count(); ++i)
        if (piece.vertex_origin[i] >= 0) to_piece[piece.vertex_origin[i]] = i;

    if (is_cyclically_4ec(gp)) stuck("contraction piece is cyclically 4-edge-connected but has no core");

    std::vector<std::vector<int>> ysets;
    for (const auto& t : elementary_twigs(gp, /*allow_irrelevant=*/true)) {
        if (static_cast<int>(t.vertices.size()) >= gp.vertex_count())
            stuck("elementary twig covers the whole contraction piece");
        ysets.push_back(t.vertices);
    }
    SmallCutDecomposition d = maximize_decomposition(gp, refine_decomposition(gp, ysets), ysets);

    // locate the tree vertex holding the new element
    int t0;
    if (zcut.size == 3) {
        t0 = d.phi[piece.new_vertex];
    } else {
        auto [a, b] = gp.ends(piece.new_edge);
        t0 = d.phi[std::min(a, b)];
    }

    // t*: degree >= 3, maximizing the component of T - t* containing t0
    auto adj = d.tree_adjacency();
    auto component_of = [&](int removed, int start) {
        std::vector<char> seen(d.tree_size, 0);
        std::vector<int> stack{start}, out;
        seen[start] = 1;
        seen[removed] = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            out.push_back(t);
            for (int f : adj[t]) {
                auto [x, y] = d.tree_edges[f];
                int w = x + y - t;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return out;
    };
    int t_star = t0;
    {
        int best_size = -1;
        for (int t = 0; t < d.tree_size; ++t) {
            if (t == t0 || d.tree_degree(t) < 3) continue;
            int size = static_cast<int>(component_of(t, t0).size());
            if (size > best_size) {
                best_size = size;
                t_star = t;
            }
        }
    }

    // ordered path components of T - t* (excluding the one holding t0)
    struct PathComp {
        int connect_edge;
        std::vector<int> verts;  // ordered from t* outward
    };
    std::vector<PathComp> paths;
    std::vector<int> t0_component;
    std::vector<char> in_t0_comp(d.tree_size, 0);
    if (t_star != t0) {
        t0_component = component_of(t_star, t0);
        for (int t : t0_component) in_t0_comp[t] = 1;
    }
    for (int f : adj[t_star]) {
        auto [x, y] = d.tree_edges[f];
        int root = x + y - t_star;
        if (in_t0_comp[root]) continue;  // the t0 side may branch; handled separately
        // the remaining components are paths by the choice of t*
        std::vector<int> verts{root};
        int prev = t_star, cur = root;
        while (true) {
            int next = -1;
            for (int fe : adj[cur]) {
                auto [a, b] = d.tree_edges[fe];
                int w = a + b - cur;
                if (w != prev) {
                    if (next >= 0) stuck("hanging component is not a path");
                    next = w;
                }
            }
            if (next < 0) break;
            verts.push_back(next);
            prev = cur;
            cur = next;
        }
        paths.push_back({f, std::move(verts)});
    }
    std::sort(paths.begin(), paths.end(),
              [](const PathComp& a, const PathComp& b) { return a.connect_edge < b.connect_edge; });

    auto leaf_twig = [&](const PathComp& p) {
        int leaf = p.verts.back();
        if (d.tree_degree(leaf) != 1) stuck("far end of a hanging path is not a leaf");
        auto twig = burl_by_twig(gp, d.preimage(leaf));
        if (!twig) stuck("leaf preimage is not a twig");
        return map_burl_to_host(g, *twig, piece.vertex_origin);
    };

    // Case A: some hanging path has at least 33 vertices.
    for (const auto& p : paths) {
        if (p.verts.size() < 33) continue;
        std::size_t start = p.verts.size() - 33;
        std::vector<int> tprime(p.verts.begin() + start, p.verts.end());
        std::vector<int> p32(tprime.begin(), tprime.end() - 1);
        int leaf = tprime.back();
        if (d.tree_degree(leaf) != 1) stuck("case A: far end is not a leaf");
        Burl branch_burl = burl_by_tree_branch(gp, d, p32);
        auto twig = burl_by_twig(gp, d.preimage(leaf));
        if (!twig) stuck("case A: leaf preimage is not a twig");

        std::vector<int> removed_in_g;
        for (int v : preimage_of(d, tprime)) {
            int orig = piece.vertex_origin[v];
            if (orig < 0) stuck("case A: removed side touches the new element");
            removed_in_g.push_back(orig);
        }
        auto lifted = recurse_through_contraction(g, zs, removed_in_g, ctx);
        Foliage f;
        f.burls = std::move(lifted);
        f.burls.push_back(map_burl_to_host(g, *twig, piece.vertex_origin));
        f.burls.push_back(map_burl_to_host(g, branch_burl, piece.vertex_origin));
        return finish(std::move(f), "A");
    }

    if (t_star != t0 && static_cast<int>(preimage_of(d, t0_component).size()) >= 7) {
        // Case B: recurse on the t0 side, harvest one twig per other path.
        if (paths.size() < 2) stuck("case B: fewer than two hanging paths");
        std::vector<int> removed_in_g;
        std::vector<int> rest{t_star};
        for (const auto& p : paths) rest.insert(rest.end(), p.verts.begin(), p.verts.end());
        for (int v : preimage_of(d, rest)) {
            int orig = piece.vertex_origin[v];
            if (orig < 0) stuck("case B: removed side touches the new element");
            removed_in_g.push_back(orig);
        }
        auto lifted = recurse_through_contraction(g, zs, removed_in_g, ctx);
        Foliage f;
        f.burls = std::move(lifted);
        for (const auto& p : paths) f.burls.push_back(leaf_twig(p));
        return finish(std::move(f), "B");
    }

    // Cases C and D: only the harvested twigs are needed.
    if (t_star != t0 && paths.size() < 2) stuck("case C: fewer than two hanging paths");
    if (paths.empty()) stuck("case D: no hanging path");
    Foliage f;
    for (const auto& p : paths) f.burls.push_back(leaf_twig(p));
    return finish(std::move(f), t_star != t0 ? "C" : "D");
}

}  // namespace detail

// Constructive form of the Klee lemma: a foliage inside Z with weight at
// least alpha |Z| + beta2, built by the lemma's induction.
inline Foliage klee_foliage(const CubicMultigraph& g, std::vector<int> zs,
                            const EnumerationCaps& caps = {}) {
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    detail::check_klee_preconditions(g, zs, ErrorKind::PreconditionFailed);
    detail::KleeContext ctx{caps};
    return detail::klee_recurse(g, zs, ctx);
}

}  // namespace cubicpm
