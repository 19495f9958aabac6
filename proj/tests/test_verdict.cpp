#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/enumerate_graphs.hpp"
#include "cubicpm/generators.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/verdict.hpp"

using namespace cubicpm;

TEST_CASE("main2 verdict on the named graphs") {
    auto pet = main2_verdict(make_petersen());
    CHECK(pet.c == 3656);
    CHECK(pet.m_star == 2);
    CHECK(pet.s1);  // 2^3656 >= 2^10
    CHECK(pet.s2);  // components >= 1 >= 10/3656
    CHECK(pet.flipping_verified);

    auto k4 = main2_verdict(make_k4());
    CHECK_FALSE(k4.s1);  // 1^c < 2^4
    CHECK(k4.s2);
    CHECK(k4.max_components == 1);

    auto b3 = main2_verdict(make_b3());
    CHECK(b3.s2);
    CHECK(b3.max_components == 1);
}

TEST_CASE("class enumeration counts and contents") {
    auto n2 = connected_cubic_classes(2);
    REQUIRE(n2.size() == 1);
    CHECK(isomorphic(n2[0], make_b3()));

    auto n4 = connected_cubic_classes(4);
    CHECK(n4.size() == 2);  // K4 and the doubled 4-cycle
    bool saw_k4 = false;
    for (const auto& g : n4) saw_k4 = saw_k4 || isomorphic(g, make_k4());
    CHECK(saw_k4);

    auto n6 = connected_cubic_classes(6);
    bool saw_k33 = false, saw_prism = false;
    for (const auto& g : n6) {
        saw_k33 = saw_k33 || isomorphic(g, make_k33());
        saw_prism = saw_prism || isomorphic(g, make_prism());
    }
    CHECK(saw_k33);
    CHECK(saw_prism);
    // the known count of connected simple cubic graphs on 8 vertices is 5;
    // multigraph classes strictly contain them
    int simple8 = 0;
    for (const auto& g : connected_cubic_classes(8)) {
        bool simple = true;
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : g.edges())
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
        if (simple) ++simple8;
    }
    CHECK(simple8 == 5);
}

TEST_CASE("bridgeless filter") {
    for (const auto& g : bridgeless_cubic_classes(8)) CHECK(is_bridgeless(g));
    // bridged classes exist from n=8 on (two doubled triangles joined by an edge)
    CHECK(bridgeless_cubic_classes(8).size() < connected_cubic_classes(8).size());
}

TEST_CASE("search for m*=1 witnesses") {
    auto n4 = search_mstar1(4);
    REQUIRE(n4.size() == 2);  // K4 and the doubled C4 both have m* = 1
    for (const auto& w : n4) {
        auto counts = matching_counts(w.graph);
        CHECK(counts.per_edge[w.witness_edge] == 1);
    }
    auto n6 = search_mstar1(6);
    bool saw_prism = false;
    for (const auto& w : n6) {
        auto counts = matching_counts(w.graph);
        CHECK(counts.m_star == 1);
        CHECK(counts.per_edge[w.witness_edge] == 1);
        saw_prism = saw_prism || isomorphic(w.graph, make_prism());
    }
    CHECK(saw_prism);
    CHECK_THROWS_MATCHES(search_mstar1(16), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::SizeLimit; }));
}

TEST_CASE("k-regular construction on K44") {
    auto rep = kregular_construct(make_k44(), 4);
    CHECK(rep.pm_count == 24);  // 4!
    CHECK(Rational(rep.degree3_count) >= rep.degree3_bound);
    CHECK(rep.degree3_bound == Rational(3));
    CHECK(rep.reduced.vertex_count() >= 4);  // parity rounds 3 up to 4
    CHECK(rep.bound_chain_consistent);
}

TEST_CASE("k-regular construction on the circulant C8(1,2)") {
    auto rep = kregular_construct(make_circulant_c8_12(), 4);
    CHECK(Rational(rep.degree3_count) >= rep.degree3_bound);
    CHECK(is_bridgeless(rep.reduced));
    CHECK(rep.bound_chain_consistent);
}

TEST_CASE("k-regular preconditions") {
    // K5 is 4-regular with an odd vertex count: no perfect matching
    std::vector<std::pair<int, int>> k5;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    CHECK_THROWS_MATCHES(kregular_construct(Multigraph(5, k5), 4), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::PreconditionFailed;
                         }));
    // a cubic graph is rejected outright
    CHECK_THROWS_AS(kregular_construct(make_petersen(), 4), Error);
}
