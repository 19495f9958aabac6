#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/constants.hpp"

using namespace cubicpm;

TEST_CASE("x enclosure matches the published digits") {
    auto x = x_enclosure();
    CHECK(x.lo < x.hi);
    CHECK(x.lo >= Rational(41503749927884ll, 100000000000000ll));
    CHECK(x.hi <= Rational(41503749927885ll, 100000000000000ll));
}

TEST_CASE("comparisons with x resolve on both sides") {
    CHECK(compare_x_to_rational(Rational(0)) > 0);
    CHECK(compare_x_to_rational(Rational(1, 2)) < 0);
    CHECK(compare_x_to_rational(Rational(2, 5)) > 0);
    // 942/x sits strictly between 2269 and 2270
    CHECK(compare_x_to_rational(Rational(942, 2270)) > 0);
    CHECK(compare_x_to_rational(Rational(942, 2269)) < 0);
}

TEST_CASE("constant value comparisons") {
    ConstantValue alpha = cv_times_x(Rational(1, 314));
    ConstantValue beta1 = cv_times_x(Rational(154, 314));
    ConstantValue beta2 = cv_times_x(Rational(74, 314));
    ConstantValue gamma = cv_times_x(Rational(312, 314));
    CHECK(compare(alpha, beta2) < 0);
    CHECK(compare(beta2, beta1) < 0);
    CHECK(compare(alpha.scaled(74), beta2) == 0);  // coefficient identity
    CHECK(compare(beta2 + alpha.scaled(80), beta1) == 0);
    CHECK(compare(alpha.scaled(6) + beta1.scaled(2), cv_times_x(1)) == 0);
    CHECK(compare(beta1.scaled(2) + alpha.scaled(4), gamma) == 0);
    // mixed affine comparison: (553/314) x <= 1
    ConstantValue eight = gamma + beta1.scaled(2) + alpha.scaled(7) - beta2;
    CHECK(compare(eight, ConstantValue(0, 1)) < 0);
}

TEST_CASE("minimal c and the minimality witness") {
    long long c = minimal_ceps();
    CHECK(c == 3656);
    auto at_c = constant_system(c);
    for (const auto& i : at_c.inequality_report) CHECK(i.holds);
    CHECK(at_c.tight_set == std::vector<int>{4, 6, 9, 10});

    auto below = constant_system(c - 1);
    bool two_fails = false;
    for (const auto& i : below.inequality_report)
        if (i.index == 2) two_fails = !i.holds;
    CHECK(two_fails);

    auto at_one = constant_system(1);
    bool two_fails_at_one = false;
    for (const auto& i : at_one.inequality_report)
        if (i.index == 2) two_fails_at_one = !i.holds;
    CHECK(two_fails_at_one);
}

TEST_CASE("inequality (7) holds strictly with room") {
    // 318x/314 ~ 0.4204 against log2 6 ~ 2.5849
    auto sys = constant_system(3656);
    for (const auto& i : sys.inequality_report)
        if (i.index == 7) {
            CHECK(i.holds);
            CHECK_FALSE(i.tight);
        }
}

TEST_CASE("formatting keeps the paper denominator") {
    CHECK(format_constant(cv_times_x(Rational(154, 314))) == "154x/314");
    CHECK(format_constant(cv_times_x(Rational(1, 314))) == "x/314");
    CHECK(format_constant(ConstantValue(0, Rational(1, 2))) == "1/2");
    CHECK(format_constant(ConstantValue(Rational(462, 314), 0)) == "462x/314");
    CHECK(format_constant(ConstantValue()) == "0/1");
}

TEST_CASE("enclosures are usable for reports") {
    auto [lo, hi] = cv_enclosure(cv_times_x(Rational(154, 314)));
    CHECK(lo <= hi);
    CHECK(lo > Rational(1, 5));
    CHECK(hi < Rational(21, 100) + Rational(1, 100));
}
