#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cubicpm/bruteforce.hpp"
#include "cubicpm/generators.hpp"
#include "cubicpm/matching.hpp"

using namespace cubicpm;

namespace {

std::vector<int> all_vertices(const Multigraph& g) {
    std::vector<int> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

}  // namespace

TEST_CASE("perfect matching counts on the small catalog") {
    CHECK(enumerate_perfect_matchings(make_k4()).size() == 3);
    CHECK(enumerate_perfect_matchings(make_b3()).size() == 3);
    // K3,3: permanent of the all-ones 3x3 matrix
    long long k33_expected = bruteforce::permanent({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(k33_expected == 6);
    CHECK(static_cast<long long>(enumerate_perfect_matchings(make_k33()).size()) == k33_expected);
    CHECK(enumerate_perfect_matchings(make_petersen()).size() == 6);
    CHECK(enumerate_perfect_matchings(make_prism()).size() == 4);
}

TEST_CASE("enumeration agrees with the pairing-recursion oracle") {
    for (const auto& g : {make_petersen(), make_prism(), make_necklace(3), make_k4_chain(5),
                          make_double_triangle(), triangle_replace(make_k33(), 2)})
        CHECK(static_cast<long long>(enumerate_perfect_matchings(g).size()) ==
              bruteforce::count_perfect_matchings(g));
}

TEST_CASE("enumeration is duplicate-free, canonical and validated") {
    auto all = enumerate_perfect_matchings(make_necklace(3));
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(is_perfect_matching(make_necklace(3), all[i]));
        CHECK(seen.insert(all[i].ids()).second);
        if (i > 0) CHECK(all[i - 1].lex_less(all[i]));
    }
}

TEST_CASE("matching_counts and m*") {
    auto k4 = matching_counts(make_k4());
    CHECK(k4.total == 3);
    CHECK(k4.m_star == 1);
    for (long long c : k4.per_edge) CHECK(c == 1);

    auto pet = matching_counts(make_petersen());
    CHECK(pet.total == 6);
    CHECK(pet.m_star == 2);
    for (long long c : pet.per_edge) CHECK(c == 2);

    auto prism = matching_counts(make_prism());
    CHECK(prism.total == 4);
    CHECK(prism.m_star == 1);

    CHECK_THROWS_AS(matching_counts(make_k4(), EnumerationCaps{2, 1000}), Error);
}

TEST_CASE("boundary matchings") {
    auto prism = make_prism();
    auto tri = enumerate_boundary_matchings(prism, {0, 1, 2});
    // one triangle edge plus the opposite rung (3 ways), or all three rungs
    REQUIRE(tri.size() == 4);
    int with_one_boundary = 0, with_three_boundary = 0;
    for (const auto& bm : tri) {
        if (bm.boundary_trace.size() == 1) ++with_one_boundary;
        if (bm.boundary_trace.size() == 3) ++with_three_boundary;
    }
    CHECK(with_one_boundary == 3);
    CHECK(with_three_boundary == 1);

    auto b3 = make_b3();
    CHECK(enumerate_boundary_matchings(b3, {0}).size() == 3);

    // X = V(G) collapses to the perfect matchings
    auto k4 = make_k4();
    auto bound = enumerate_boundary_matchings(k4, all_vertices(k4));
    auto perfect = enumerate_perfect_matchings(k4);
    REQUIRE(bound.size() == perfect.size());
    for (std::size_t i = 0; i < bound.size(); ++i) {
        CHECK(bound[i].edge_set == perfect[i]);
        CHECK(bound[i].boundary_trace.empty());
    }

    CHECK_THROWS_AS(enumerate_boundary_matchings(prism, {0, 1, 2}, EnumerationCaps{40, 2}), Error);
}

TEST_CASE("boundary matchings may collide outside X") {
    // both boundary edges of a necklace block can land on the same outside
    // vertex only if they share it; here they do not, but traces still matter
    auto neck = make_necklace(2);
    auto fam = enumerate_boundary_matchings(neck, {0, 1, 2, 3});
    bool saw_two_boundary = false;
    for (const auto& bm : fam)
        if (bm.boundary_trace.size() == 2) saw_two_boundary = true;
    CHECK(saw_two_boundary);
}

TEST_CASE("symdiff components") {
    auto prism = make_prism();
    auto all = enumerate_perfect_matchings(prism);
    REQUIRE(all.size() == 4);
    for (const auto& m : all) CHECK(symdiff_components(prism, m, m) == 0);
    // all-rungs versus a matching using one rung: a single 4-cycle
    int rungs = -1;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool all_rung = true;
        for (int e : all[i].ids()) {
            auto [u, v] = prism.ends(e);
            if ((u < 3) == (v < 3)) all_rung = false;
        }
        if (all_rung) rungs = static_cast<int>(i);
    }
    REQUIRE(rungs >= 0);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (static_cast<int>(i) != rungs)
            CHECK(symdiff_components(prism, all[rungs], all[i]) == 1);

    CHECK_THROWS_AS(symdiff_components(prism, EdgeSet(prism.edge_count()), all[0]), Error);
}

TEST_CASE("necklace flips give independent components") {
    auto neck = make_necklace(3);
    auto rep = max_switch_components(neck);
    CHECK(rep.components == 3);  // one alternating 4-cycle per diamond
    CHECK(symdiff_components(neck, rep.first, rep.second) == rep.components);
}

TEST_CASE("alternating number") {
    auto prism = make_prism();
    auto fam = enumerate_boundary_matchings(prism, all_vertices(prism));
    // a(G,V,M) for the all-rungs matching is 1
    for (const auto& bm : fam) {
        int a = alternating_number(prism, all_vertices(prism), bm, fam);
        CHECK(a >= 1);
        CHECK(a <= 2);
    }
    // forest induced subgraph: a == 0
    auto pet = make_petersen();
    auto path_fam = enumerate_boundary_matchings(pet, {0, 1});
    for (const auto& bm : path_fam)
        CHECK(alternating_number(pet, {0, 1}, bm, path_fam) == 0);
}

TEST_CASE("alternating number agrees with the cycle-packing oracle") {
    auto check_graph = [](const CubicMultigraph& g, const std::vector<int>& xs) {
        auto fam = enumerate_boundary_matchings(g, xs);
        auto mask = subset_mask(g, xs);
        for (const auto& bm : fam) {
            int via_symdiff = alternating_number(g, xs, bm, fam);
            int via_packing = bruteforce::alternating_cycle_packing(g, mask, bm.edge_set.ids());
            CHECK(via_symdiff == via_packing);
        }
    };
    check_graph(make_prism(), {0, 1, 2});
    check_graph(make_prism(), {0, 1, 2, 3, 4, 5});
    check_graph(make_necklace(2), {0, 1, 2, 3});
    check_graph(make_k4(), {0, 1, 2, 3});
    check_graph(make_necklace(3), {0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("max switch components and flipping") {
    auto k4 = max_switch_components(make_k4());
    CHECK(k4.components == 1);
    auto b3 = max_switch_components(make_b3());
    CHECK(b3.components == 1);
    auto pet = max_switch_components(make_petersen());
    CHECK(pet.components >= 1);

    // flipping the witness components yields 2^k distinct perfect matchings
    auto neck = make_necklace(3);
    auto rep = max_switch_components(neck);
    auto flips = flip_component_subsets(neck, rep.first, rep.second);
    std::set<std::vector<int>> distinct;
    for (const auto& m : flips) {
        CHECK(is_perfect_matching(neck, m));
        distinct.insert(m.ids());
    }
    CHECK(static_cast<int>(distinct.size()) == (1 << rep.components));
}

TEST_CASE("alternating_number with X=V matches max_switch_components on the argmax") {
    for (const auto& g : {make_prism(), make_petersen(), make_necklace(3)}) {
        auto rep = max_switch_components(g);
        auto fam = enumerate_boundary_matchings(g, all_vertices(g));
        BoundaryMatching arg;
        bool found = false;
        for (const auto& bm : fam)
            if (bm.edge_set == rep.first) {
                arg = bm;
                found = true;
            }
        REQUIRE(found);
        CHECK(alternating_number(g, all_vertices(g), arg, fam) == rep.components);
    }
}
