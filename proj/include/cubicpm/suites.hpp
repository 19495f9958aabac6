#pragma once

// The lemma-verification suites. Each suite checks one family of facts over
// the fixed corpus and reports every violation; the acceptance criteria are
// suites c1..c11.

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubicpm/balanced.hpp"
#include "cubicpm/bruteforce.hpp"
#include "cubicpm/constants.hpp"
#include "cubicpm/core.hpp"
#include "cubicpm/corpus.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/foliage.hpp"
#include "cubicpm/splitting.hpp"
#include "cubicpm/verdict.hpp"

namespace cubicpm {

struct SuiteResult {
    std::string name;
    std::string description;
    long long checks = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

namespace suites {

namespace detail {

class Suite {
  public:
    Suite(std::string name, std::string description) {
        result_.name = std::move(name);
        result_.description = std::move(description);
    }
    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok) result_.failures.push_back(what);
    }
    template <typename F>
    void guarded(const std::string& what, F&& f) {
        ++result_.checks;
        try {
            std::forward<F>(f)();
        } catch (const std::exception& e) {
            result_.failures.push_back(what + ": " + e.what());
        }
    }
    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

inline std::vector<int> all_vertices(const Multigraph& g) {
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

inline long long twig_family_cap_columns = 4000;  // LP columns for sampled cross-checks

}  // namespace detail

// c1: exact matching counts on the named small graphs.
inline SuiteResult counts_suite() {
    detail::Suite s("c1", "exact m and m* on the named small graphs");
    struct Row {
        const char* name;
        CubicMultigraph g;
        long long m, m_star;
    };
    std::vector<Row> rows;
    rows.push_back({"k4", make_k4(), 3, 1});
    rows.push_back({"b3", make_b3(), 3, 1});
    rows.push_back({"k33", make_k33(), 6, 2});
    rows.push_back({"petersen", make_petersen(), 6, 2});
    rows.push_back({"prism", make_prism(), 4, 1});
    for (const auto& row : rows) {
        auto counts = matching_counts(row.g);
        s.check(counts.total == row.m, std::string(row.name) + ": m mismatch");
        s.check(counts.m_star == row.m_star, std::string(row.name) + ": m* mismatch");
    }
    return s.take();
}

// c2: m(G-e) >= 2, m(G) >= 4 for n >= 6, m(G) >= n/4 + 2 over the corpus.
inline SuiteResult smallcount_suite() {
    detail::Suite s("c2", "small-count bounds over the corpus");
    for (const auto& entry : full_corpus()) {
        auto counts = matching_counts(entry.graph);
        const int n = entry.graph.vertex_count();
        for (int e = 0; e < entry.graph.edge_count(); ++e)
            s.check(counts.total - counts.per_edge[e] >= 2,
                    entry.name + ": m(G-e) < 2 at edge " + std::to_string(e));
        if (n >= 6) s.check(counts.total >= 4, entry.name + ": m(G) < 4");
        s.check(4 * counts.total >= n + 8, entry.name + ": m(G) < n/4 + 2");
    }
    return s.take();
}

// c3: balanced distributions exist with exact marginals, and every support
// element meets every 3-cut in exactly one edge.
inline SuiteResult balanced_suite() {
    detail::Suite s("c3", "balanced distributions, exact marginals, 3-cut claim");
    for (const auto& entry : full_corpus()) {
        s.guarded(entry.name + ": balanced distribution", [&] {
            auto d = balanced_distribution(entry.graph, detail::all_vertices(entry.graph));
            if (!verify_balanced(entry.graph, d)) throw Error(ErrorKind::Infeasible, "marginals");
            for (const auto& cut : all_cuts_of_size(entry.graph, 3))
                if (!check_balanced_claim(d, cut))
                    throw Error(ErrorKind::NotThreeCut,
                                "claim fails on a 3-cut of " + entry.name);
        });
    }
    return s.take();
}

// c4: twig and 4-cut burl certificates via the exact LP.
inline SuiteResult burls_suite() {
    detail::Suite s("c4", "LP certificates: 2-twigs >= 2/3, 3-twigs >= 1/3, 4-cut burls");
    const Rational third(1, 3), two_thirds(2, 3);
    for (const auto& entry : full_corpus()) {
        const auto& g = entry.graph;
        if (g.vertex_count() > 16) continue;  // family caps; the window below covers large graphs
        for (int k = 2; k <= 3; ++k) {
            for (const auto& cut : all_cuts_of_size(g, k)) {
                std::vector<std::vector<int>> sides{cut.side};
                sides.push_back(complement_vertices(g, subset_mask(g, cut.side)));
                for (const auto& side : sides) {
                    TwigKind kind = is_twig(g, side);
                    if (kind == TwigKind::None) continue;
                    s.guarded(entry.name + ": twig LP", [&] {
                        EnumerationCaps caps;
                        caps.max_family = detail::twig_family_cap_columns;
                        BurlCertificate cert;
                        try {
                            cert = burl_certificate(g, side, Rational(1, 3), caps);
                        } catch (const Error& e) {
                            if (e.kind() == ErrorKind::SizeLimit) return;  // above cap: skipped
                            throw;
                        }
                        Rational bound = kind == TwigKind::Twig2 ? two_thirds : third;
                        if (cert.min_expected < bound)
                            throw Error(ErrorKind::PreconditionFailed,
                                        "twig certificate below bound");
                    });
                }
            }
        }
    }
    // Lemma 4-cut burls on small corpus graphs
    for (const auto& entry : full_corpus(8)) {
        const auto& g = entry.graph;
        if (g.vertex_count() > 10) continue;
        for (std::uint32_t mask = 1; mask + 1 < (1u << g.vertex_count()); ++mask) {
            std::vector<int> side;
            for (int v = 0; v < g.vertex_count(); ++v)
                if ((mask >> v) & 1) side.push_back(v);
            if (side.empty() || static_cast<int>(side.size()) >= g.vertex_count()) continue;
            EdgeCut cut = edge_cut(g, side);
            if (cut.size != 4) continue;
            auto burl = burl_by_4cut(g, side);
            if (!burl) continue;
            s.guarded(entry.name + ": 4cut burl LP", [&] {
                auto cert = burl_certificate(g, side);
                if (cert.min_expected < third)
                    throw Error(ErrorKind::PreconditionFailed, "4cut burl below 1/3");
            });
        }
    }
    // the k4_chain(12) middle-10 window, certified by LP
    s.guarded("k4_chain(12) window LP", [&] {
        auto g = make_k4_chain(12);
        // end triangles as leaves; the interior splits into the 10 rung pairs
        std::vector<std::vector<int>> ys = {{0, 1, 2}, {2 * 12 - 1, 2 * 12, 2 * 12 + 1}};
        auto d = maximize_decomposition(g, refine_decomposition(g, ys), ys);
        // middle 10: the ten degree-2 tree vertices with K4 hubs
        std::vector<int> middle;
        for (int t = 0; t < d.tree_size; ++t)
            if (d.tree_degree(t) == 2 && d.preimage(t).size() == 2) middle.push_back(t);
        if (middle.size() != 10)
            throw Error(ErrorKind::PreconditionFailed,
                        "expected a 10-vertex middle window, got " + std::to_string(middle.size()));
        // order them along the path
        std::sort(middle.begin(), middle.end(), [&](int a, int b) {
            return d.preimage(a).front() < d.preimage(b).front();
        });
        Burl b = burl_by_k4_chain(g, d, middle);
        auto cert = burl_certificate(g, b.vertices);
        if (!cert.is_burl)
            throw Error(ErrorKind::PreconditionFailed, "window LP certificate below 1/3");
    });
    return s.take();
}

// c5: contraction pieces are cubic bridgeless, m* is supermultiplicative, and
// triangle contraction never increases m*.
inline SuiteResult contraction_suite() {
    detail::Suite s("c5", "cut-contraction and triangle-contraction counting");
    for (const auto& entry : full_corpus()) {
        const auto& g = entry.graph;
        if (g.vertex_count() > 14) continue;
        auto host_counts = matching_counts(g);
        for (int k = 2; k <= 3; ++k) {
            for (const auto& cut : all_cuts_of_size(g, k)) {
                s.guarded(entry.name + ": contraction", [&] {
                    auto rec = cut_contract(g, cut);  // validates cubic + bridgeless
                    auto c1 = matching_counts(rec.with_side.graph);
                    auto c2 = matching_counts(rec.with_complement.graph);
                    if (host_counts.m_star < c1.m_star * c2.m_star)
                        throw Error(ErrorKind::PreconditionFailed,
                                    "m*(G) < m*(G1) m*(G2)");
                });
            }
        }
        for (const auto& tr : classify_triangles(g).triangles) {
            std::vector<int> tri(tr.vertices.begin(), tr.vertices.end());
            EdgeCut cut = edge_cut(g, tri);
            if (cut.size != 3) continue;
            s.guarded(entry.name + ": triangle contraction", [&] {
                auto rec = cut_contract(g, cut);
                auto contracted = matching_counts(rec.with_complement.graph);
                if (contracted.m_star > host_counts.m_star)
                    throw Error(ErrorKind::PreconditionFailed, "m*(G') > m*(G)");
            });
        }
    }
    return s.take();
}

// c6: maximized decompositions satisfy the trichotomy.
inline SuiteResult decompose_suite() {
    detail::Suite s("c6", "Y-maximum decompositions satisfy the trichotomy");
    auto run = [&](const std::string& name, const CubicMultigraph& g) {
        s.guarded(name, [&] {
            std::vector<std::vector<int>> ys;
            for (const auto& t : elementary_twigs(g)) ys.push_back(t.vertices);
            auto d = maximize_decomposition(g, refine_decomposition(g, ys), ys);
            validate_decomposition(g, d);
            std::set<std::vector<int>> protected_sets(ys.begin(), ys.end());
            for (int t = 0; t < d.tree_size; ++t) {
                auto pre = d.preimage(t);
                if (pre.empty()) continue;
                if (protected_sets.count(pre)) continue;
                auto h = hub(g, d, {t});
                if (!is_cyclically_4ec(h.graph))
                    throw Error(ErrorKind::PreconditionFailed,
                                "hub at tree vertex " + std::to_string(t) +
                                    " is not cyclically 4-edge-connected");
            }
        });
    };
    for (int blocks = 3; blocks <= 6; ++blocks)
        run("necklace(" + std::to_string(blocks) + ")", make_necklace(blocks));
    for (int length = 4; length <= 12; ++length)
        run("k4_chain(" + std::to_string(length) + ")", make_k4_chain(length));
    return s.take();
}

// c7: the S/3 splitting identity on every edge of every corpus graph meeting
// the hypotheses, plus the two-matchings-per-edge lemma.
inline SuiteResult splitting_suite() {
    detail::Suite s("c7", "four-split S/3 identity and the per-edge doubling lemma");
    for (const auto& entry : full_corpus()) {
        const auto& g = entry.graph;
        if (g.vertex_count() < 6 || !is_cyclically_4ec(g)) continue;
        auto counts = matching_counts(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            s.check(counts.per_edge[e] >= 2,
                    entry.name + ": edge " + std::to_string(e) + " in < 2 matchings");
            s.guarded(entry.name + ": split identity edge " + std::to_string(e), [&] {
                auto rep = four_split_identity(g, e);
                if (!rep.identity)
                    throw Error(ErrorKind::PreconditionFailed, "3 count_e != S");
                if (!rep.each_extends_from_three)
                    throw Error(ErrorKind::PreconditionFailed,
                                "membership table row != 3");
            });
        }
    }
    return s.take();
}

// c8: the constant system at the minimal c.
inline SuiteResult constants_suite() {
    detail::Suite s("c8", "constant system, minimality, tight set");
    long long c = minimal_ceps();
    s.check(c == 3656, "minimal c is " + std::to_string(c) + ", expected 3656");
    auto sys = constant_system(c);
    for (const auto& ineq : sys.inequality_report)
        s.check(ineq.holds, "inequality (" + std::to_string(ineq.index) + ") fails at c");
    s.check(sys.tight_set == std::vector<int>{4, 6, 9, 10}, "tight set is not {4,6,9,10}");
    auto prev = constant_system(c - 1);
    bool prev_two_fails = false;
    for (const auto& ineq : prev.inequality_report)
        if (ineq.index == 2 && !ineq.holds) prev_two_fails = true;
    s.check(prev_two_fails, "inequality (2) still holds at c-1");
    // the stated enclosure of x
    auto x = x_enclosure();
    s.check(x.lo >= Rational(41503749927884ll, 100000000000000ll) &&
                x.hi <= Rational(41503749927885ll, 100000000000000ll),
            "x enclosure drifted outside the published digits");
    return s.take();
}

// c9: Theorem-2 verdict and the flipping construction over the corpus.
inline SuiteResult verdict_suite() {
    detail::Suite s("c9", "S1 or S2 holds; flipping builds 2^k distinct matchings");
    for (const auto& entry : full_corpus()) {
        s.guarded(entry.name + ": verdict", [&] {
            auto v = main2_verdict(entry.graph);
            if (!v.s1 && !v.s2)
                throw Error(ErrorKind::PreconditionFailed, "neither S1 nor S2 holds");
            if (!v.flipping_verified)
                throw Error(ErrorKind::PreconditionFailed, "flipping construction failed");
        });
    }
    return s.take();
}

// c10: the Klee foliage construction on necklace and chain tails.
inline SuiteResult klee_suite() {
    detail::Suite s("c10", "Klee foliage: disjoint, certified, weight bound");
    const ConstantValue alpha = cv_times_x(Rational(1, 314));
    const ConstantValue beta2 = cv_times_x(Rational(74, 314));
    auto run = [&](const std::string& name, const CubicMultigraph& g, std::vector<int> zs,
                   bool expect_treebranch) {
        s.guarded(name, [&] {
            Foliage f = klee_foliage(g, zs);
            validate_foliage_disjoint(f);
            std::sort(zs.begin(), zs.end());
            for (const auto& b : f.burls) {
                for (int v : b.vertices)
                    if (!std::binary_search(zs.begin(), zs.end(), v))
                        throw Error(ErrorKind::PreconditionFailed, "member leaves Z");
                if (b.kind != TwigKind::None && is_twig(g, b.vertices) == TwigKind::None)
                    throw Error(ErrorKind::PreconditionFailed, "twig member is not a twig");
            }
            ConstantValue target = alpha.scaled(static_cast<int>(zs.size())) + beta2;
            if (compare(foliage_weight(f), target) < 0)
                throw Error(ErrorKind::PreconditionFailed, "weight bound fails");
            if (expect_treebranch) {
                bool saw = false;
                for (const auto& b : f.burls)
                    if (b.certificate.rfind("treebranch", 0) == 0) saw = true;
                if (!saw)
                    throw Error(ErrorKind::PreconditionFailed,
                                "expected the 33-path branch to fire");
            }
        });
    };
    auto necklace_tail = [&](int blocks) {
        std::vector<int> zs;
        for (int v = 4; v < 4 * blocks; ++v) zs.push_back(v);
        run("necklace(" + std::to_string(blocks) + ") tail", make_necklace(blocks), zs, false);
    };
    for (int blocks : {3, 4, 5, 6, 20}) necklace_tail(blocks);
    auto chain_tail = [&](int length, bool expect_treebranch) {
        auto g = make_k4_chain(length);
        std::vector<int> zs{0};
        for (int i = 0; i <= length - 3; ++i) {
            zs.push_back(1 + 2 * i);
            zs.push_back(2 + 2 * i);
        }
        run("k4_chain(" + std::to_string(length) + ") tail", g, zs, expect_treebranch);
    };
    chain_tail(6, false);
    chain_tail(8, false);
    chain_tail(12, false);
    chain_tail(40, true);  // |Z| = 77 >= 73: the >=33-path branch must fire
    return s.take();
}

// c11: the k-regular construction on K4,4 and C8(1,2).
inline SuiteResult kregular_suite() {
    detail::Suite s("c11", "k-regular reduction produces a cubic bridgeless core");
    auto run = [&](const std::string& name, const Multigraph& g, int k) {
        s.guarded(name, [&] {
            auto rep = kregular_construct(g, k);
            if (Rational(rep.reduced.vertex_count()) < rep.degree3_bound)
                throw Error(ErrorKind::PreconditionFailed, "|V(G'')| below the bound");
            if (!rep.bound_chain_consistent)
                throw Error(ErrorKind::PreconditionFailed, "bound chain inconsistent");
            if (!rep.reduced.connected() || !is_bridgeless(rep.reduced))
                throw Error(ErrorKind::PreconditionFailed, "G'' not validated");
        });
    };
    run("k44", make_k44(), 4);
    run("c8(1,2)", make_circulant_c8_12(), 4);
    return s.take();
}

// extra: cut parity of matchings, the basis of the balanced claim.
inline SuiteResult cutparity_suite() {
    detail::Suite s("parity", "|M ^ C| parity over all 2- and 3-cuts");
    for (const auto& entry : full_corpus()) {
        const auto& g = entry.graph;
        if (g.vertex_count() > 14) continue;
        auto matchings = enumerate_perfect_matchings(g);
        for (int k = 2; k <= 3; ++k)
            for (const auto& cut : all_cuts_of_size(g, k))
                for (const auto& m : matchings) {
                    int hits = 0;
                    for (int e : cut.cut_edges)
                        if (m.test(e)) ++hits;
                    s.check(hits % 2 == k % 2,
                            entry.name + ": |M^C| parity violated on a " + std::to_string(k) +
                                "-cut");
                }
    }
    return s.take();
}

// extra: burl monotonicity and label invariance of the LP certificate.
inline SuiteResult monotonicity_suite() {
    detail::Suite s("monotone", "burl superset closure and relabeling invariance");
    auto neck = make_necklace(3);
    s.guarded("necklace superset", [&] {
        auto small = burl_certificate(neck, {0, 1, 2, 3});
        auto big = burl_certificate(neck, {0, 1, 2, 3, 7});  // add the adjacent junction vertex
        if (small.is_burl && !big.is_burl)
            throw Error(ErrorKind::PreconditionFailed, "superset of a burl is not a burl");
    });
    s.guarded("prism superset", [&] {
        auto small = burl_certificate(make_prism(), {0, 1, 2});
        auto big = burl_certificate(make_prism(), {0, 1, 2, 3});
        if (small.is_burl && !big.is_burl)
            throw Error(ErrorKind::PreconditionFailed, "superset of a burl is not a burl");
    });
    s.guarded("relabeling invariance", [&] {
        auto g = make_necklace(3);
        std::vector<int> xs{0, 1, 2, 3};
        auto base = burl_certificate(g, xs);
        std::mt19937 rng(99);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<int> perm(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> es;
            for (auto [a, b] : g.edges()) es.emplace_back(perm[a], perm[b]);
            CubicMultigraph h(g.vertex_count(), es);
            std::vector<int> mapped;
            for (int v : xs) mapped.push_back(perm[v]);
            auto cert = burl_certificate(h, mapped);
            if (cert.min_expected != base.min_expected)
                throw Error(ErrorKind::PreconditionFailed, "min_expected changed under relabeling");
        }
    });
    return s.take();
}

// extra: foliage merging across contractions and splittings.
inline SuiteResult foliage_merge_suite() {
    detail::Suite s("foliage-merge", "foliages merge across cut-contractions and splits");
    const ConstantValue beta1 = cv_times_x(Rational(154, 314));
    s.guarded("necklace(4) junction merge", [&] {
        auto g = make_necklace(4);
        // contract the 2-cut separating blocks {0,1} from {2,3}
        std::vector<int> side;
        for (int v = 0; v < 8; ++v) side.push_back(v);
        auto rec = cut_contract(g, edge_cut(g, side));
        // foliage per piece: the diamond twigs avoiding the new edge
        auto piece_foliage = [&](const ContractionPiece& piece) {
            Foliage f;
            auto [a, b] = piece.graph.ends(piece.new_edge);
            for (int block = 0; block * 4 + 3 < piece.graph.vertex_count(); ++block) {
                std::vector<int> verts{4 * block, 4 * block + 1, 4 * block + 2, 4 * block + 3};
                bool touches_both = std::count(verts.begin(), verts.end(), a) &&
                                    std::count(verts.begin(), verts.end(), b);
                if (touches_both) continue;  // would contain the new edge
                auto burl = burl_by_twig(piece.graph, verts);
                if (burl) f.burls.push_back(*burl);
            }
            return f;
        };
        Foliage f1 = piece_foliage(rec.with_side);
        Foliage f2 = piece_foliage(rec.with_complement);
        Foliage merged;
        for (const auto& piece : {std::make_pair(&f1, &rec.with_side),
                                  std::make_pair(&f2, &rec.with_complement)})
            for (const auto& b : piece.first->burls) {
                std::vector<int> host_verts;
                for (int v : b.vertices) host_verts.push_back(piece.second->vertex_origin[v]);
                merged.burls.push_back(make_burl(g, host_verts, b.certificate));
            }
        validate_foliage_disjoint(merged);
        for (const auto& b : merged.burls) {
            auto cert = burl_certificate(g, b.vertices);
            if (!cert.is_burl)
                throw Error(ErrorKind::PreconditionFailed, "merged member is not a burl in G");
        }
        ConstantValue lhs = foliage_weight(merged);
        ConstantValue rhs = foliage_weight(f1) + foliage_weight(f2) - beta1.scaled(2);
        if (compare(lhs, rhs) < 0)
            throw Error(ErrorKind::PreconditionFailed, "fw(G) < fw(G1)+fw(G2)-2 beta1");
    });
    s.guarded("splitting drops at most two burls", [&] {
        auto g = make_petersen();
        auto rec = split_path(g, 0, 1, 2, 3);
        // search the split result for small LP-certified burls avoiding the
        // new pairs, lift them back, and re-certify in G
        const auto& gp = rec.result;
        std::vector<int> special{rec.path[0], rec.path[3], rec.v1_prime, rec.v4_prime};
        int lifted = 0;
        for (std::uint32_t mask = 1; mask < (1u << gp.vertex_count()); ++mask) {
            if (__builtin_popcount(mask) > 5) continue;
            std::vector<int> side;
            for (int v = 0; v < gp.vertex_count(); ++v)
                if ((mask >> v) & 1) side.push_back(v);
            if (side.empty() || static_cast<int>(side.size()) >= gp.vertex_count()) continue;
            if (is_twig(gp, side) == TwigKind::None) continue;
            bool touches = false;
            for (int v : side)
                if (std::count(special.begin(), special.end(), rec.vertex_origin[v])) touches = true;
            if (touches) continue;
            std::vector<int> host_side;
            for (int v : side) host_side.push_back(rec.vertex_origin[v]);
            auto cert = burl_certificate(g, host_side);
            if (!cert.is_burl)
                throw Error(ErrorKind::PreconditionFailed, "lifted twig not a burl in host");
            ++lifted;
        }
        (void)lifted;  // petersen splits may have no twig at all; validity is what matters
    });
    return s.take();
}

// extra: prune bounds over the corpus.
inline SuiteResult prune_suite() {
    detail::Suite s("prune", "pruning removes all irrelevant triangles within bounds");
    for (const auto& entry : full_corpus()) {
        s.guarded(entry.name + ": prune", [&] {
            auto res = prune(entry.graph);
            if (!classify_triangles(res.graph).pruned)
                throw Error(ErrorKind::PreconditionFailed, "result still has irrelevant triangles");
        });
    }
    auto pet = make_petersen();
    s.guarded("petersen round trip", [&] {
        auto once = prune(triangle_replace(pet, 0));
        if (once.contractions != 1 || !isomorphic(once.graph, pet))
            throw Error(ErrorKind::PreconditionFailed, "single expansion did not prune back");
        auto twice = prune(triangle_replace(triangle_replace(pet, 0), 3));
        if (twice.contractions != 2 || !isomorphic(twice.graph, pet))
            throw Error(ErrorKind::PreconditionFailed, "double expansion did not prune back");
    });
    return s.take();
}

inline const std::vector<std::pair<std::string, SuiteResult (*)()>>& registry() {
    static const std::vector<std::pair<std::string, SuiteResult (*)()>> table = {
        {"c1", counts_suite},        {"c2", smallcount_suite}, {"c3", balanced_suite},
        {"c4", burls_suite},         {"c5", contraction_suite}, {"c6", decompose_suite},
        {"c7", splitting_suite},     {"c8", constants_suite},  {"c9", verdict_suite},
        {"c10", klee_suite},         {"c11", kregular_suite},  {"parity", cutparity_suite},
        {"monotone", monotonicity_suite}, {"foliage-merge", foliage_merge_suite},
        {"prune", prune_suite},
    };
    return table;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

inline SuiteResult run_suite(const std::string& name) {
    for (const auto& [key, fn] : registry())
        if (key == name) return fn();
    fail(ErrorKind::BadParams, "unknown suite '" + name + "'");
}

}  // namespace suites
}  // namespace cubicpm
