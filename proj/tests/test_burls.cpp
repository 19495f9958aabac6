#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/balanced.hpp"
#include "cubicpm/burls.hpp"
#include "cubicpm/foliage.hpp"
#include "cubicpm/generators.hpp"

using namespace cubicpm;

namespace {

SmallCutDecomposition chain_decomposition(const CubicMultigraph& g, int length) {
    // end triangles {s,x0,y0} and {t,x_{L-1},y_{L-1}} as leaves; maximization
    // splits the interior into the L-2 rung pairs, each with a K4 hub
    std::vector<std::vector<int>> ys = {{0, 1, 2},
                                        {2 * length - 1, 2 * length, 2 * length + 1}};
    return maximize_decomposition(g, refine_decomposition(g, ys), ys);
}

std::vector<int> middle_path(const SmallCutDecomposition& d) {
    std::vector<int> middle;
    for (int t = 0; t < d.tree_size; ++t)
        if (d.tree_degree(t) == 2 && d.preimage(t).size() == 2) middle.push_back(t);
    std::sort(middle.begin(), middle.end(),
              [&](int a, int b) { return d.preimage(a).front() < d.preimage(b).front(); });
    return middle;
}

SmallCutDecomposition necklace_path_decomposition(int blocks) {
    SmallCutDecomposition d;
    d.tree_size = blocks;
    d.phi.assign(4 * blocks, 0);
    for (int v = 0; v < 4 * blocks; ++v) d.phi[v] = v / 4;
    for (int t = 0; t + 1 < blocks; ++t) d.tree_edges.emplace_back(t, t + 1);
    return d;
}

}  // namespace

TEST_CASE("burl_by_4cut") {
    // necklace(4): two adjacent diamonds have a 4-cut when the junction between
    // them stays inside
    auto neck = make_necklace(4);
    std::vector<int> two_blocks{0, 1, 2, 3, 4, 5, 6, 7};
    EdgeCut cut = edge_cut(neck, two_blocks);
    REQUIRE(cut.size == 2);  // actually a 2-cut; find a genuine 4-cut instead
    // one diamond plus the far junction endpoint gives |delta| = 4
    std::vector<int> side{0, 1, 2, 3, 7};
    if (edge_cut(neck, side).size == 4) {
        auto burl = burl_by_4cut(neck, side);
        // m(G|X) may or may not reach 2; if certified, the LP agrees
        if (burl) {
            auto cert = burl_certificate(neck, side);
            CHECK(cert.min_expected >= Rational(1, 3));
        }
    }
    // odd induced side: no perfect matching, no certificate
    std::vector<int> odd_side;
    for (const auto& c : all_cuts_of_size(make_petersen(), 3)) (void)c;
    auto pet = make_petersen();
    // {0,1,2,3,5}: check the precondition error on a non-4-cut
    CHECK_THROWS_MATCHES(burl_by_4cut(pet, {0}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::NotFourCut; }));
}

TEST_CASE("4cut burls exist and cross-check in necklace(4)") {
    auto neck = make_necklace(4);
    int certified = 0;
    for (std::uint32_t mask = 1; mask + 1 < (1u << 16); ++mask) {
        if (__builtin_popcount(mask) != 8) continue;  // two blocks worth
        std::vector<int> side;
        for (int v = 0; v < 16; ++v)
            if ((mask >> v) & 1) side.push_back(v);
        if (edge_cut(neck, side).size != 4) continue;
        auto burl = burl_by_4cut(neck, side);
        if (!burl) continue;
        ++certified;
        auto cert = burl_certificate(neck, side);
        CHECK(cert.min_expected >= Rational(1, 3));
        if (certified >= 2) break;  // two instances are enough at unit scale
    }
    CHECK(certified >= 1);
}

TEST_CASE("burl_by_k4_chain on the chain decomposition") {
    auto g = make_k4_chain(12);
    auto d = chain_decomposition(g, 12);
    auto middle = middle_path(d);
    REQUIRE(middle.size() == 10);
    Burl b = burl_by_k4_chain(g, d, middle);
    CHECK(b.certificate == "k4chain");
    CHECK(b.vertices.size() == 20);

    // wrong length fails the hypothesis
    std::vector<int> nine(middle.begin(), middle.begin() + 9);
    CHECK_THROWS_MATCHES(burl_by_k4_chain(g, d, nine), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
}

TEST_CASE("a hub that is B3 fails the k4 chain hypothesis") {
    auto neck = make_necklace(12);
    auto d = necklace_path_decomposition(12);
    validate_decomposition(neck, d);
    std::vector<int> middle;
    for (int t = 1; t <= 10; ++t) middle.push_back(t);
    // hubs here are K4 (diamond + closing edge) but the incident cuts have
    // size 2, so the 3-cut clause fails
    CHECK_THROWS_MATCHES(burl_by_k4_chain(neck, d, middle), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
}

TEST_CASE("burl_by_2cuts on the necklace path decomposition") {
    auto neck = make_necklace(5);
    auto d = necklace_path_decomposition(5);
    validate_decomposition(neck, d);
    Burl b = burl_by_2cuts(neck, d, {1, 2});
    CHECK(b.vertices.size() == 8);
    CHECK(b.kind == TwigKind::Twig2);
    // LP cross-check: the two-block set is a burl
    auto cert = burl_certificate(neck, b.vertices);
    CHECK(cert.is_burl);

    // only two incident 2-cut edges: take a single end vertex of the path tree
    CHECK_THROWS_MATCHES(burl_by_2cuts(neck, d, {0}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
}

TEST_CASE("burl_by_tree_branch dispatches to the right branch") {
    // 3-cut branch: a long K4 chain
    auto g = make_k4_chain(36);
    auto d = chain_decomposition(g, 36);
    auto middle = middle_path(d);
    REQUIRE(static_cast<int>(middle.size()) == 34);
    std::vector<int> p32(middle.begin(), middle.begin() + 32);
    Burl b = burl_by_tree_branch(g, d, p32);
    CHECK(b.certificate == "treebranch/k4chain");

    // 2-cut branch: a long necklace
    auto neck = make_necklace(34);
    auto nd = necklace_path_decomposition(34);
    std::vector<int> np;
    for (int t = 1; t <= 32; ++t) np.push_back(t);
    Burl nb = burl_by_tree_branch(neck, nd, np);
    CHECK(nb.certificate == "treebranch/2cuts");

    // 31 vertices is not enough
    std::vector<int> p31(middle.begin(), middle.begin() + 31);
    CHECK_THROWS_MATCHES(burl_by_tree_branch(g, d, p31), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::HypothesisFailed;
                         }));
}

TEST_CASE("foliage weight arithmetic") {
    Foliage f;
    auto neck = make_necklace(3);
    for (int b = 0; b < 3; ++b) {
        auto burl = burl_by_twig(neck, {4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3});
        REQUIRE(burl);
        f.burls.push_back(*burl);
    }
    // 3 twigs: 3 beta1 = 462x/314
    CHECK(format_constant(foliage_weight(f)) == "462x/314");
    CHECK(foliage_weight(Foliage{}).identical(ConstantValue{}));
    // 1 twig + 2 non-twigs = beta1 + 2 beta2 = 302x/314
    Foliage mixed;
    mixed.burls.push_back(f.burls[0]);
    Burl plain;
    plain.vertices = {4, 5, 6, 7};
    plain.kind = TwigKind::None;
    Burl plain2;
    plain2.vertices = {8, 9, 10, 11};
    plain2.kind = TwigKind::None;
    mixed.burls.push_back(plain);
    mixed.burls.push_back(plain2);
    CHECK(format_constant(foliage_weight(mixed)) == "302x/314");
}

TEST_CASE("klee base case: a diamond block") {
    auto neck = make_necklace(3);
    Foliage f = klee_foliage(neck, {0, 1, 2, 3});
    REQUIRE(f.burls.size() == 1);
    CHECK(f.burls[0].kind == TwigKind::Twig2);
    // beta1 >= alpha * 4 + beta2 by inequality (3)
    ConstantValue target = cv_times_x(Rational(4, 314)) + cv_times_x(Rational(74, 314));
    CHECK(compare(foliage_weight(f), target) >= 0);
}

TEST_CASE("klee on a necklace tail builds disjoint twigs") {
    auto neck = make_necklace(6);
    std::vector<int> zs;
    for (int v = 4; v < 24; ++v) zs.push_back(v);
    Foliage f = klee_foliage(neck, zs);
    validate_foliage_disjoint(f);
    CHECK(f.burls.size() >= 2);
    for (const auto& b : f.burls) CHECK(b.kind != TwigKind::None);
}

TEST_CASE("klee preconditions") {
    auto pet = make_petersen();
    // petersen has a core: the contraction piece cannot avoid it
    std::vector<int> zs{0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_MATCHES(klee_foliage(pet, zs), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::PreconditionFailed;
                         }));
}
