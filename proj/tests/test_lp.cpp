#include <catch2/catch_amalgamated.hpp>

#include "cubicpm/lp.hpp"

using namespace cubicpm;

TEST_CASE("minimize a single bounded variable") {
    LpProblem p;
    p.num_vars = 1;
    p.sense = Sense::Minimize;
    p.objective = {{0, 1}};
    p.constraints.push_back({{{0, 1}}, Relation::GreaterEq, Rational(1, 3)});
    auto sol = lp_solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.values[0] == Rational(1, 3));
    CHECK(sol.objective == Rational(1, 3));
}

TEST_CASE("feasibility with an equality system") {
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Feasibility;
    p.constraints.push_back({{{0, 1}, {1, 1}}, Relation::Equal, 1});
    p.constraints.push_back({{{0, 1}, {1, -1}}, Relation::Equal, 0});
    auto sol = lp_solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.values[0] == Rational(1, 2));
    CHECK(sol.values[1] == Rational(1, 2));
}

TEST_CASE("infeasible system is reported") {
    LpProblem p;
    p.num_vars = 1;
    p.constraints.push_back({{{0, 1}}, Relation::GreaterEq, 1});
    p.constraints.push_back({{{0, 1}}, Relation::LessEq, 0});
    CHECK(lp_solve_exact(p).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded maximization is reported") {
    LpProblem p;
    p.num_vars = 1;
    p.sense = Sense::Maximize;
    p.objective = {{0, 1}};
    p.constraints.push_back({{{0, 1}}, Relation::GreaterEq, 0});
    CHECK(lp_solve_exact(p).status == LpStatus::Unbounded);
}

TEST_CASE("maximization with mixed constraints stays exact") {
    // max x + y st x + 2y <= 7/2, 3x + y <= 4, x,y >= 0
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Maximize;
    p.objective = {{0, 1}, {1, 1}};
    p.constraints.push_back({{{0, 1}, {1, 2}}, Relation::LessEq, Rational(7, 2)});
    p.constraints.push_back({{{0, 3}, {1, 1}}, Relation::LessEq, 4});
    auto sol = lp_solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    // intersection: x = 9/10, y = 13/10
    CHECK(sol.values[0] == Rational(9, 10));
    CHECK(sol.values[1] == Rational(13, 10));
    CHECK(sol.objective == Rational(11, 5));
}

TEST_CASE("negative right-hand sides are normalized") {
    // x - y >= -2, x <= 1, maximize y => y = 3 via the first constraint
    LpProblem p;
    p.num_vars = 2;
    p.sense = Sense::Maximize;
    p.objective = {{1, 1}};
    p.constraints.push_back({{{0, 1}, {1, -1}}, Relation::GreaterEq, -2});
    p.constraints.push_back({{{0, 1}}, Relation::LessEq, 1});
    auto sol = lp_solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 3);
}

TEST_CASE("solution is basic: support bounded by constraint count") {
    // many variables, two constraints: optimal support has at most 2 nonzeros
    LpProblem p;
    p.num_vars = 12;
    p.sense = Sense::Minimize;
    for (int i = 0; i < 12; ++i) p.objective.emplace_back(i, Rational(i + 1, 7));
    LpConstraint sum;
    sum.rel = Relation::Equal;
    sum.rhs = 1;
    for (int i = 0; i < 12; ++i) sum.coeffs.emplace_back(i, 1);
    p.constraints.push_back(sum);
    LpConstraint balance;
    balance.rel = Relation::Equal;
    balance.rhs = Rational(1, 3);
    for (int i = 0; i < 12; i += 2) balance.coeffs.emplace_back(i, 1);
    p.constraints.push_back(balance);
    auto sol = lp_solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    int support = 0;
    Rational total = 0, even = 0;
    for (int i = 0; i < 12; ++i) {
        if (sol.values[i] != 0) ++support;
        total += sol.values[i];
        if (i % 2 == 0) even += sol.values[i];
    }
    CHECK(support <= 2);
    CHECK(total == 1);
    CHECK(even == Rational(1, 3));
}

TEST_CASE("nonzero cap rejects oversized problems") {
    LpProblem p;
    p.num_vars = 10;
    p.max_nonzeros = 5;
    LpConstraint c;
    c.rel = Relation::Equal;
    c.rhs = 1;
    for (int i = 0; i < 10; ++i) c.coeffs.emplace_back(i, 1);
    p.constraints.push_back(c);
    CHECK_THROWS_AS(lp_solve_exact(p), Error);
}
