#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/contraction.hpp"
#include "cubicpm/core.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/generators.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/twigs.hpp"

using namespace cubicpm;

TEST_CASE("cut contraction pieces") {
    auto g = triangle_replace(make_k4(), 0);
    auto cut = edge_cut(g, {0, 4, 5});  // the new triangle
    auto rec = cut_contract(g, cut);
    CHECK(isomorphic(rec.with_side.graph, make_k4()));        // triangle + new vertex
    CHECK(isomorphic(rec.with_complement.graph, make_k4()));  // the original K4

    auto neck = make_necklace(2);
    auto junction = all_cuts_of_size(neck, 2).front();
    auto rec2 = cut_contract(neck, junction);
    CHECK(isomorphic(rec2.with_side.graph, make_k4()));
    CHECK(isomorphic(rec2.with_complement.graph, make_k4()));

    CHECK_THROWS_MATCHES(cut_contract(g, edge_cut(g, {0, 1})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::BadCutSize; }));
}

TEST_CASE("contraction is supermultiplicative for m*") {
    for (const auto& g : {make_necklace(3), triangle_replace(make_petersen(), 0),
                          make_k4_chain(5)}) {
        auto host = matching_counts(g);
        for (int k = 2; k <= 3; ++k)
            for (const auto& cut : all_cuts_of_size(g, k)) {
                auto rec = cut_contract(g, cut);
                auto a = matching_counts(rec.with_side.graph);
                auto b = matching_counts(rec.with_complement.graph);
                CHECK(host.m_star >= a.m_star * b.m_star);
            }
    }
}

TEST_CASE("triangle contraction: m* never increases and extensions are canonical") {
    auto g = triangle_replace(make_prism(), 0);
    auto host = matching_counts(g);
    for (const auto& tr : classify_triangles(g).triangles) {
        std::vector<int> tri(tr.vertices.begin(), tr.vertices.end());
        auto cut = edge_cut(g, tri);
        if (cut.size != 3) continue;
        auto rec = cut_contract(g, cut);
        auto small = matching_counts(rec.with_complement.graph);
        CHECK(small.m_star <= host.m_star);
        // canonical extension: matchings of G' biject onto matchings of G
        // containing the forced pattern (exactly one cut edge + one triangle edge)
        long long forced = 0;
        for (const auto& m : enumerate_perfect_matchings(g)) {
            int cut_hits = 0;
            for (int e : cut.cut_edges)
                if (m.test(e)) ++cut_hits;
            if (cut_hits == 1) ++forced;
        }
        CHECK(forced == small.total);
    }
}

TEST_CASE("prune") {
    auto pet = make_petersen();
    auto unchanged = prune(pet);
    CHECK(unchanged.contractions == 0);
    CHECK(isomorphic(unchanged.graph, pet));

    auto once = prune(triangle_replace(pet, 0));
    CHECK(once.contractions == 1);
    CHECK(isomorphic(once.graph, pet));

    auto twice = prune(triangle_replace(triangle_replace(pet, 0), 5));
    CHECK(twice.contractions == 2);
    CHECK(isomorphic(twice.graph, pet));

    // K4's triangles are all relevant: prune leaves it alone
    CHECK(prune(make_k4()).contractions == 0);
}

TEST_CASE("has_core") {
    auto pet = has_core(make_petersen());
    CHECK(pet.has_core);
    CHECK(pet.witness.empty());

    CHECK_FALSE(has_core(make_k4()).has_core);
    CHECK_FALSE(has_core(make_b3()).has_core);
    CHECK_FALSE(has_core(make_necklace(3)).has_core);
    CHECK_FALSE(has_core(make_prism()).has_core);
    CHECK_FALSE(has_core(make_k4_chain(6)).has_core);

    // a core reachable after one contraction: expand a Petersen vertex
    auto expanded = has_core(triangle_replace(make_petersen(), 0));
    CHECK(expanded.has_core);
    REQUIRE_FALSE(expanded.witness.empty());
    // replay the witness
    CubicMultigraph cur = triangle_replace(make_petersen(), 0);
    for (const auto& step : expanded.witness) {
        EdgeCut cut = edge_cut(cur, step.kept_side);
        // the witness stores the cut as seen from the kept side's complement
        std::vector<char> mask = subset_mask(cur, step.kept_side);
        auto rec = cut_contract(cur, edge_cut(cur, complement_vertices(cur, mask)));
        cur = rec.with_complement.graph;
    }
    CHECK(cur.vertex_count() >= 6);
    CHECK(is_cyclically_4ec(cur));
}

TEST_CASE("is_twig") {
    auto neck = make_necklace(3);
    CHECK(is_twig(neck, {0, 1, 2, 3}) == TwigKind::Twig2);
    CHECK(is_twig(neck, {0}) == TwigKind::None);
    auto expanded = triangle_replace(make_petersen(), 0);
    // the 5-set around two adjacent original vertices often has a 3-cut; find one
    bool found_twig3 = false;
    for (const auto& cut : all_cuts_of_size(expanded, 3))
        if (cut.side.size() >= 5 && is_twig(expanded, cut.side) == TwigKind::Twig3)
            found_twig3 = true;
    CHECK(found_twig3);
}

TEST_CASE("elementary twigs") {
    CHECK(elementary_twigs(make_petersen()).empty());

    auto neck = make_necklace(3);
    auto twigs = elementary_twigs(neck);
    REQUIRE(twigs.size() == 3);
    for (const auto& t : twigs) CHECK(t.vertices.size() == 4);  // the diamonds

    auto dbl = elementary_twigs(make_double_triangle());
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(dbl[0].double_twig);
    CHECK(dbl[0].triangles.size() == 2);

    CHECK_THROWS_MATCHES(elementary_twigs(triangle_replace(make_petersen(), 0)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::NotPruned; }));

    // a relevant triangle attached to a 4-cycle: the k4_chain end twig
    auto chain = make_k4_chain(4);
    auto chain_twigs = elementary_twigs(chain);
    REQUIRE(chain_twigs.size() == 2);
    for (const auto& t : chain_twigs) CHECK(t.vertices.size() == 5);
}

TEST_CASE("refine_decomposition per the lemma cases") {
    auto neck = make_necklace(3);
    std::vector<std::vector<int>> blocks;
    for (int b = 0; b < 3; ++b)
        blocks.push_back({4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3});
    auto star = refine_decomposition(neck, blocks);
    CHECK(star.tree_size == 4);
    CHECK(star.preimage(3).empty());  // centre
    validate_decomposition(neck, star);

    // single member: two-vertex tree
    auto single = refine_decomposition(neck, {blocks[0]});
    CHECK(single.tree_size == 2);

    // empty collection on a cyclically 4-edge-connected graph fails
    CHECK_THROWS_MATCHES(refine_decomposition(make_petersen(), {}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::PreconditionFailed;
                         }));
    // empty collection on a reducible graph picks a cyclic cut
    auto from_empty = refine_decomposition(neck, {});
    CHECK(from_empty.tree_size == 2);
}

TEST_CASE("maximize_decomposition reaches the K4 chain structure") {
    auto chain = make_k4_chain(6);
    std::vector<std::vector<int>> ys;
    for (const auto& t : elementary_twigs(chain)) ys.push_back(t.vertices);
    auto d = maximize_decomposition(chain, refine_decomposition(chain, ys), ys);
    validate_decomposition(chain, d);
    // interior pairs split out: every nonempty non-Y preimage has a K4 hub
    int k4_hubs = 0;
    std::set<std::vector<int>> protected_sets(ys.begin(), ys.end());
    for (int t = 0; t < d.tree_size; ++t) {
        auto pre = d.preimage(t);
        if (pre.empty() || protected_sets.count(pre)) continue;
        auto h = hub_at(chain, d, t);
        CHECK(isomorphic(h.graph, make_k4()));
        ++k4_hubs;
    }
    CHECK(k4_hubs == 2);  // the five-vertex end twigs eat positions 0,1 and 4,5

    // idempotence
    auto again = maximize_decomposition(chain, d, ys);
    CHECK(again.tree_size == d.tree_size);
    CHECK(again.phi == d.phi);
    CHECK(again.tree_edges == d.tree_edges);
}

TEST_CASE("necklace path decomposition and hubs") {
    auto neck = make_necklace(5);
    SmallCutDecomposition d;
    d.tree_size = 5;
    d.phi.assign(20, 0);
    for (int v = 0; v < 20; ++v) d.phi[v] = v / 4;
    for (int t = 0; t + 1 < 5; ++t) d.tree_edges.emplace_back(t, t + 1);
    validate_decomposition(neck, d);
    for (int f = 0; f < 4; ++f) CHECK(cut_of_tree_edge(neck, d, f).size == 2);
    // hub at an internal diamond is K4 (diamond plus the closing edge)
    for (int t = 1; t <= 3; ++t) CHECK(isomorphic(hub_at(neck, d, t).graph, make_k4()));
    // hub at the whole tree is the graph itself
    auto whole = hub(neck, d, {0, 1, 2, 3, 4});
    CHECK(isomorphic(whole.graph, neck));
}

TEST_CASE("hub is order independent up to isomorphism") {
    auto neck = make_necklace(5);
    SmallCutDecomposition d;
    d.tree_size = 5;
    d.phi.assign(20, 0);
    for (int v = 0; v < 20; ++v) d.phi[v] = v / 4;
    for (int t = 0; t + 1 < 5; ++t) d.tree_edges.emplace_back(t, t + 1);
    auto h1 = hub(neck, d, {2}, {0, 1});
    auto h2 = hub(neck, d, {2}, {1, 0});
    CHECK(isomorphic(h1.graph, h2.graph));
    CHECK_THROWS_MATCHES(hub(neck, d, std::vector<int>{}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::EmptyPreimage;
                         }));
}

TEST_CASE("maximize never decreases the tree and revalidates") {
    auto neck = make_necklace(4);
    std::vector<std::vector<int>> ys;
    for (const auto& t : elementary_twigs(neck)) ys.push_back(t.vertices);
    auto d0 = refine_decomposition(neck, ys);
    auto d1 = maximize_decomposition(neck, d0, ys);
    CHECK(d1.tree_size >= d0.tree_size);
    validate_decomposition(neck, d1);
}
