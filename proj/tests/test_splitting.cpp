#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/generators.hpp"
#include "cubicpm/splitting.hpp"
#include "cubicpm/triangles.hpp"

using namespace cubicpm;

TEST_CASE("splitting petersen along any 4-path") {
    auto g = make_petersen();
    auto rec = split_path(g, 0, 1, 2, 3);
    CHECK(rec.result.vertex_count() == 8);
    CHECK(is_bridgeless(rec.result));
    int irrelevant = 0;
    for (const auto& t : classify_triangles(rec.result).triangles)
        if (!t.relevant) ++irrelevant;
    CHECK(irrelevant <= 2);
}

TEST_CASE("split hypotheses") {
    CHECK_THROWS_MATCHES(split_path(make_k4(), 0, 1, 2, 3), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
    // necklace is not cyclically 4-edge-connected
    CHECK_THROWS_MATCHES(split_path(make_necklace(3), 0, 1, 2, 3), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
    // not a path
    CHECK_THROWS_MATCHES(split_path(make_petersen(), 0, 1, 1, 2), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::NotAPath; }));
    CHECK_THROWS_MATCHES(split_path(make_petersen(), 0, 2, 4, 6), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::NotAPath; }));
}

TEST_CASE("canonical extension cases and round trip") {
    auto g = make_petersen();
    auto rec = split_path(g, 0, 1, 2, 3);
    auto split_matchings = enumerate_perfect_matchings(rec.result);
    int case_direct = 0, case_reroute = 0;
    for (const auto& ms : split_matchings) {
        if (ms.test(rec.edge_v1v4)) {
            CHECK_THROWS_MATCHES(canonical_extension(ms, rec, g), Error,
                                 Catch::Matchers::Predicate<Error>([](const Error& e) {
                                     return e.kind() == ErrorKind::UsesNewEdge;
                                 }));
            continue;
        }
        Matching lifted = canonical_extension(ms, rec, g);
        CHECK(is_perfect_matching(g, lifted));
        if (ms.test(rec.edge_v1pv4p)) {
            ++case_reroute;
            CHECK(lifted.test(rec.host_edge_v1pv2));
            CHECK(lifted.test(rec.host_edge_v3v4p));
        } else {
            ++case_direct;
            CHECK(lifted.test(rec.host_edge_v2v3));
        }
        // round trip: the lift agrees with ms on shared edges
        for (int e = 0; e < rec.result.edge_count(); ++e) {
            if (rec.edge_origin[e] < 0) continue;
            CHECK(lifted.test(rec.edge_origin[e]) == ms.test(e));
        }
    }
    CHECK(case_direct + case_reroute > 0);
}

TEST_CASE("four split identity on petersen and k33") {
    auto pet = make_petersen();
    for (int e : {0, 7, 14}) {
        auto rep = four_split_identity(pet, e);
        CHECK(rep.count_e == 2);
        CHECK(rep.sum == 6);
        CHECK(rep.identity);
        CHECK(rep.each_extends_from_three);
    }
    auto k33 = make_k33();
    for (int e = 0; e < k33.edge_count(); ++e) {
        auto rep = four_split_identity(k33, e);
        CHECK(rep.count_e == 2);
        CHECK(rep.sum == 6);
        CHECK(rep.identity);
        CHECK(rep.each_extends_from_three);
    }
}

TEST_CASE("four split hypotheses") {
    CHECK_THROWS_MATCHES(four_split_identity(make_necklace(3), 0), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
    CHECK_THROWS_MATCHES(four_split_identity(make_b3(), 0), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
}
