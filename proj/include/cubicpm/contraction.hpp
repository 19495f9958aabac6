#pragma once

#include <array>
#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/multigraph.hpp"
#include "cubicpm/triangles.hpp"

namespace cubicpm {

// One side of a C-contraction, with maps back to the host graph. New
// elements (the identification vertex of a 3-cut, the joining edge of a
// 2-cut) have origin -1.
struct ContractionPiece {
    CubicMultigraph graph;
    std::vector<int> vertex_origin;  // piece vertex -> host vertex
    std::vector<int> edge_origin;    // piece edge -> host edge
    int new_vertex = -1;
    int new_edge = -1;
};

struct CutContractionRecord {
    EdgeCut cut;
    ContractionPiece with_side;        // piece containing cut.side
    ContractionPiece with_complement;  // piece containing the other side
};

namespace detail {

inline ContractionPiece contract_keeping(const Multigraph& g, const EdgeCut& cut,
                                         const std::vector<int>& keep) {
    auto keep_mask = subset_mask(g, keep);
    ContractionPiece piece;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v : keep) {
        new_id[v] = static_cast<int>(piece.vertex_origin.size());
        piece.vertex_origin.push_back(v);
    }
    std::vector<std::pair<int, int>> es;
    for (int e : edges_inside(g, keep_mask)) {
        auto [u, v] = g.ends(e);
        es.emplace_back(new_id[u], new_id[v]);
        piece.edge_origin.push_back(e);
    }
    int n_keep = static_cast<int>(keep.size());
    if (cut.size == 3) {
        piece.new_vertex = n_keep;
        piece.vertex_origin.push_back(-1);
        for (int e : cut.cut_edges) {
            auto [u, v] = g.ends(e);
            int inside = keep_mask[u] ? u : v;
            es.emplace_back(new_id[inside], piece.new_vertex);
            piece.edge_origin.push_back(e);
        }
        piece.graph = CubicMultigraph(n_keep + 1, es);
    } else {
        auto [u1, v1] = g.ends(cut.cut_edges[0]);
        auto [u2, v2] = g.ends(cut.cut_edges[1]);
        int a = keep_mask[u1] ? u1 : v1;
        int b = keep_mask[u2] ? u2 : v2;
        require(a != b, ErrorKind::PreconditionFailed,
                "2-cut edges share an endpoint; host graph is not bridgeless");
        piece.new_edge = static_cast<int>(es.size());
        es.emplace_back(new_id[a], new_id[b]);
        piece.edge_origin.push_back(-1);
        piece.graph = CubicMultigraph(n_keep, es);
    }
    return piece;
}

}  // namespace detail

// C-contractions of both sides of a 2- or 3-edge-cut. Both pieces are
// re-validated cubic and bridgeless.
inline CutContractionRecord cut_contract(const Multigraph& g, const EdgeCut& cut) {
    require(cut.size == 2 || cut.size == 3, ErrorKind::BadCutSize,
            "cut-contraction needs a 2- or 3-edge-cut, got size " + std::to_string(cut.size));
    CutContractionRecord rec;
    rec.cut = cut;
    auto mask = subset_mask(g, cut.side);
    rec.with_side = detail::contract_keeping(g, cut, cut.side);
    rec.with_complement = detail::contract_keeping(g, cut, complement_vertices(g, mask));
    for (const ContractionPiece* piece : {&rec.with_side, &rec.with_complement})
        require(is_bridgeless(piece->graph), ErrorKind::PreconditionFailed,
                "contraction piece is not bridgeless");
    return rec;
}

struct PruneResult {
    CubicMultigraph graph;
    int contractions = 0;
    // Triangles contracted, in the coordinates of the graph at that step.
    std::vector<std::array<int, 3>> contracted;
    // original vertex -> final vertex (collapsed triangles map to the
    // identification vertex of their step)
    std::vector<int> final_of_original;
};

// Repeatedly contract the first irrelevant triangle until none is left.
// Lemma guarantees |V(G')| >= |V(G)| - 2k and |V(G')| >= |V(G)|/3.
inline PruneResult prune(const CubicMultigraph& g) {
    PruneResult res;
    res.graph = g;
    res.final_of_original.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) res.final_of_original[v] = v;
    while (true) {
        auto rep = classify_triangles(res.graph);
        const TriangleRecord* pick = nullptr;
        for (const auto& t : rep.triangles)
            if (!t.relevant) {
                pick = &t;
                break;
            }
        if (!pick) break;
        std::vector<int> tri(pick->vertices.begin(), pick->vertices.end());
        EdgeCut cut = edge_cut(res.graph, tri);
        require(cut.size == 3, ErrorKind::PreconditionFailed,
                "triangle cut has size " + std::to_string(cut.size));
        auto rec = cut_contract(res.graph, cut);
        const ContractionPiece& piece = rec.with_complement;
        // remap the original->current table through this contraction
        std::vector<int> cur_to_next(res.graph.vertex_count(), piece.new_vertex);
        for (int i = 0; i < piece.graph.vertex_count(); ++i)
            if (piece.vertex_origin[i] >= 0) cur_to_next[piece.vertex_origin[i]] = i;
        for (auto& m : res.final_of_original) m = cur_to_next[m];
        res.contracted.push_back(pick->vertices);
        res.graph = piece.graph;
        ++res.contractions;
    }
    require(res.graph.vertex_count() >= g.vertex_count() - 2 * res.contractions,
            ErrorKind::PreconditionFailed, "prune lost too many vertices");
    require(3 * res.graph.vertex_count() >= g.vertex_count(), ErrorKind::PreconditionFailed,
            "prune result below |V(G)|/3");
    return res;
}

}  // namespace cubicpm
