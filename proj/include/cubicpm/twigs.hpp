#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/triangles.hpp"

namespace cubicpm {

enum class TwigKind { None, Twig2, Twig3 };

inline const char* to_string(TwigKind k) {
    switch (k) {
        case TwigKind::None: return "none";
        case TwigKind::Twig2: return "twig2";
        case TwigKind::Twig3: return "twig3";
    }
    return "none";
}

// 2-twig: |delta(X)| = 2. 3-twig: |delta(X)| = 3 and |X| >= 5 (neither a
// triangle nor a single vertex).
inline TwigKind is_twig(const Multigraph& g, const std::vector<int>& xs) {
    EdgeCut cut = edge_cut(g, xs);
    if (cut.size == 2) return TwigKind::Twig2;
    if (cut.size == 3 && static_cast<int>(cut.side.size()) >= 5) return TwigKind::Twig3;
    return TwigKind::None;
}

struct ElementaryTwig {
    std::vector<int> vertices;  // sorted
    bool double_twig = false;   // union of two intersecting simple twigs
    std::vector<std::array<int, 3>> triangles;  // relevant triangles covered
};

// Pairwise disjoint elementary twigs covering every relevant triangle. Each
// simple twig is the union of a relevant triangle with the first cycle of
// length <= 4 sharing exactly one edge with it; intersecting simple twigs of
// distinct triangles merge pairwise.
inline std::vector<ElementaryTwig> elementary_twigs(const CubicMultigraph& g,
                                                    bool allow_irrelevant = false) {
    auto rep = classify_triangles(g);
    if (!allow_irrelevant)
        require(rep.pruned, ErrorKind::NotPruned, "graph contains an irrelevant triangle");
    auto cycles = short_cycles(g);
    struct Simple {
        std::vector<int> vertices;
        std::array<int, 3> triangle;
    };
    std::vector<Simple> simples;
    for (const auto& tri : rep.triangles) {
        if (!tri.relevant) continue;
        auto [a, b, c] = tri.vertices;
        bool found = false;
        for (const auto& tedges : triangles_on(g, a, b, c)) {
            for (const auto& cyc : cycles) {
                if (cyc.size() < 3 || cyc == tedges) continue;
                int shared = 0;
                for (int e : cyc)
                    if (std::binary_search(tedges.begin(), tedges.end(), e)) ++shared;
                if (shared != 1) continue;
                std::set<int> verts{a, b, c};
                for (int e : cyc) {
                    verts.insert(g.ends(e).first);
                    verts.insert(g.ends(e).second);
                }
                simples.push_back({{verts.begin(), verts.end()}, tri.vertices});
                found = true;
                break;
            }
            if (found) break;
        }
        require(found, ErrorKind::PreconditionFailed,
                "relevant triangle admits no witnessing cycle");
    }
    // identical vertex sets merge outright
    std::vector<ElementaryTwig> twigs;
    for (const auto& s : simples) {
        bool merged = false;
        for (auto& t : twigs)
            if (t.vertices == s.vertices) {
                t.triangles.push_back(s.triangle);
                t.double_twig = true;
                merged = true;
                break;
            }
        if (!merged) twigs.push_back({s.vertices, false, {s.triangle}});
    }
    // merge intersecting pairs in triangle-id order, until disjoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < twigs.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < twigs.size() && !changed; ++j) {
                std::vector<int> inter;
                std::set_intersection(twigs[i].vertices.begin(), twigs[i].vertices.end(),
                                      twigs[j].vertices.begin(), twigs[j].vertices.end(),
                                      std::back_inserter(inter));
                if (inter.empty()) continue;
                std::vector<int> uni;
                std::set_union(twigs[i].vertices.begin(), twigs[i].vertices.end(),
                               twigs[j].vertices.begin(), twigs[j].vertices.end(),
                               std::back_inserter(uni));
                twigs[i].vertices = std::move(uni);
                twigs[i].double_twig = true;
                for (auto& t : twigs[j].triangles) twigs[i].triangles.push_back(t);
                twigs.erase(twigs.begin() + j);
                changed = true;
            }
    }
    for (const auto& t : twigs)
        require(t.vertices.size() <= 8 ||
                    static_cast<int>(t.vertices.size()) == g.vertex_count(),
                ErrorKind::PreconditionFailed, "elementary twig larger than 8 vertices");
    return twigs;
}

}  // namespace cubicpm
