#pragma once

#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize, Feasibility };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
    std::vector<std::pair<int, Rational>> coeffs;  // sparse (var, coefficient)
    Relation rel = Relation::Equal;
    Rational rhs = 0;
};

// min/max c.x subject to the constraints and x >= 0, solved exactly.
struct LpProblem {
    int num_vars = 0;
    Sense sense = Sense::Feasibility;
    std::vector<std::pair<int, Rational>> objective;
    std::vector<LpConstraint> constraints;
    long long max_nonzeros = 1'000'000;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values;  // structural variables; basic solution
    Rational objective = 0;
};

namespace detail {

class SimplexTableau {
  public:
    SimplexTableau(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols + 1, 0)), basis_(rows, -1) {}

    Rational& at(int r, int c) { return a_[r][c]; }
    Rational& rhs(int r) { return a_[r][cols_]; }
    int& basis(int r) { return basis_[r]; }

    void pivot(int r, int c) {
        Rational inv = a_[r][c];
        for (int j = 0; j <= cols_; ++j) a_[r][j] /= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Rational factor = a_[i][c];
            if (factor == 0) continue;
            for (int j = 0; j <= cols_; ++j) a_[i][j] -= factor * a_[r][j];
        }
        basis_[r] = c;
    }

    // Bland's rule; cost[j] holds reduced costs, cost[cols] the negated
    // objective. Returns true when optimal, false when unbounded.
    bool run(std::vector<Rational>& cost, const std::vector<char>& banned) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (banned[j]) continue;
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < rows_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = a_[i][cols_] / a_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            // update cost row along with the pivot
            Rational factor = cost[enter];
            pivot(leave, enter);
            if (factor != 0)
                for (int j = 0; j <= cols_; ++j) cost[j] -= factor * a_[leave][j];
        }
    }

    int rows_, cols_;
    std::vector<std::vector<Rational>> a_;
    std::vector<int> basis_;
};

}  // namespace detail

// Exact two-phase simplex with Bland's pivoting; never cycles, never rounds.
inline LpSolution lp_solve_exact(const LpProblem& p) {
    long long nonzeros = 0;
    for (const auto& c : p.constraints) nonzeros += static_cast<long long>(c.coeffs.size());
    require(nonzeros <= p.max_nonzeros, ErrorKind::CapExceeded,
            "LP nonzeros " + std::to_string(nonzeros) + " exceed cap");

    const int m = static_cast<int>(p.constraints.size());
    const int n = p.num_vars;
    // column layout: structural | one helper column per row (slack/surplus) |
    // artificials
    int helper_cols = 0;
    for (const auto& c : p.constraints)
        if (c.rel != Relation::Equal) ++helper_cols;
    int art_cols = 0;
    std::vector<Rational> rhs(m);
    std::vector<Relation> rel(m);
    for (int i = 0; i < m; ++i) {
        rhs[i] = p.constraints[i].rhs;
        rel[i] = p.constraints[i].rel;
        if (rhs[i] < 0) {
            rhs[i] = -rhs[i];
            rel[i] = rel[i] == Relation::LessEq ? Relation::GreaterEq
                     : rel[i] == Relation::GreaterEq ? Relation::LessEq
                                                     : Relation::Equal;
        }
        if (rel[i] != Relation::LessEq) ++art_cols;
    }
    const int cols = n + helper_cols + art_cols;
    detail::SimplexTableau t(m, cols);
    std::vector<char> is_artificial(cols, 0);

    int next_helper = n;
    int next_art = n + helper_cols;
    for (int i = 0; i < m; ++i) {
        Rational sign = p.constraints[i].rhs < 0 ? Rational(-1) : Rational(1);
        for (const auto& [var, coef] : p.constraints[i].coeffs) {
            require(var >= 0 && var < n, ErrorKind::BadParams, "LP variable index out of range");
            t.at(i, var) += sign * coef;
        }
        t.rhs(i) = rhs[i];
        switch (rel[i]) {
            case Relation::LessEq:
                t.at(i, next_helper) = 1;
                t.basis(i) = next_helper++;
                break;
            case Relation::GreaterEq:
                t.at(i, next_helper) = -1;
                ++next_helper;
                t.at(i, next_art) = 1;
                is_artificial[next_art] = 1;
                t.basis(i) = next_art++;
                break;
            case Relation::Equal:
                t.at(i, next_art) = 1;
                is_artificial[next_art] = 1;
                t.basis(i) = next_art++;
                break;
        }
    }

    std::vector<char> no_ban(cols, 0);

    // Phase 1: minimize the sum of artificials.
    if (art_cols > 0) {
        std::vector<Rational> cost(cols + 1, 0);
        for (int j = 0; j < cols; ++j)
            if (is_artificial[j]) cost[j] = 1;
        for (int i = 0; i < m; ++i)
            if (is_artificial[t.basis(i)])
                for (int j = 0; j <= cols; ++j) cost[j] -= t.at(i, j);
        bool ok = t.run(cost, no_ban);
        (void)ok;  // phase 1 is bounded below by 0
        Rational infeas = -cost[cols];
        if (infeas != 0) return {LpStatus::Infeasible, {}, 0};
        // Drive artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (!is_artificial[t.basis(i)]) continue;
            int piv = -1;
            for (int j = 0; j < cols && piv < 0; ++j)
                if (!is_artificial[j] && t.at(i, j) != 0) piv = j;
            if (piv >= 0) t.pivot(i, piv);
        }
    }

    // Phase 2 objective (feasibility keeps 0).
    std::vector<Rational> orig_cost(cols, 0);
    Rational obj_sign = p.sense == Sense::Maximize ? Rational(-1) : Rational(1);
    if (p.sense != Sense::Feasibility)
        for (const auto& [var, coef] : p.objective) orig_cost[var] += obj_sign * coef;
    std::vector<Rational> cost(cols + 1, 0);
    for (int j = 0; j < cols; ++j) cost[j] = orig_cost[j];
    for (int i = 0; i < m; ++i) {
        Rational cb = orig_cost[t.basis(i)];
        if (cb != 0)
            for (int j = 0; j <= cols; ++j) cost[j] -= cb * t.at(i, j);
    }
    std::vector<char> ban = is_artificial;  // artificials may not re-enter
    if (!t.run(cost, ban)) return {LpStatus::Unbounded, {}, 0};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.values.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis(i) < n) sol.values[t.basis(i)] = t.rhs(i);
    Rational value = 0;
    if (p.sense != Sense::Feasibility)
        for (const auto& [var, coef] : p.objective) value += coef * sol.values[var];
    sol.objective = value;
    return sol;
}

}  // namespace cubicpm
