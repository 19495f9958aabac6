#pragma once

#include <vector>

#include "cubicpm/cuts.hpp"
#include "cubicpm/lp.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

// Finitely supported distribution on M(G,X) giving every edge of E_X the
// same probability (1/3 for cubic graphs, 1/k for the k-regular extension).
struct BalancedDistribution {
    std::vector<int> xs;  // the set X
    Rational target_prob = Rational(1, 3);
    std::vector<std::pair<BoundaryMatching, Rational>> support;  // positive weights only
};

namespace detail {

struct BalancedLpParts {
    std::vector<BoundaryMatching> family;
    std::vector<LpConstraint> constraints;  // sum-to-one first, then one per edge of E_X
    std::vector<int> touching;              // E_X edge ids
};

inline BalancedLpParts balanced_constraints(const Multigraph& g, const std::vector<int>& xs,
                                            const Rational& target, const EnumerationCaps& caps) {
    BalancedLpParts parts;
    parts.family = enumerate_boundary_matchings(g, xs, caps);
    auto mask = subset_mask(g, xs);
    parts.touching = edges_touching(g, mask);
    LpConstraint total;
    total.rel = Relation::Equal;
    total.rhs = 1;
    for (int i = 0; i < static_cast<int>(parts.family.size()); ++i) total.coeffs.emplace_back(i, 1);
    parts.constraints.push_back(std::move(total));
    for (int e : parts.touching) {
        LpConstraint c;
        c.rel = Relation::Equal;
        c.rhs = target;
        for (int i = 0; i < static_cast<int>(parts.family.size()); ++i)
            if (parts.family[i].edge_set.test(e)) c.coeffs.emplace_back(i, 1);
        parts.constraints.push_back(std::move(c));
    }
    return parts;
}

inline BalancedDistribution collect_support(const std::vector<int>& xs, const Rational& target,
                                            const std::vector<BoundaryMatching>& family,
                                            const std::vector<Rational>& weights) {
    BalancedDistribution d;
    d.xs = xs;
    d.target_prob = target;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (weights[i] > 0) d.support.emplace_back(family[i], weights[i]);
    return d;
}

}  // namespace detail

// Exact marginal recomputation; true iff weights are nonnegative, sum to one
// and every edge of E_X carries probability exactly target.
inline bool verify_balanced(const Multigraph& g, const BalancedDistribution& d) {
    Rational sum = 0;
    for (const auto& [m, w] : d.support) {
        if (w < 0) return false;
        sum += w;
    }
    if (sum != 1) return false;
    auto mask = subset_mask(g, d.xs);
    for (int e : edges_touching(g, mask)) {
        Rational p = 0;
        for (const auto& [m, w] : d.support)
            if (m.edge_set.test(e)) p += w;
        if (p != d.target_prob) return false;
    }
    return true;
}

// Feasibility LP over lambda_M, M in M(G,X). Infeasible signals a
// non-bridgeless or otherwise invalid input.
inline BalancedDistribution balanced_distribution(const Multigraph& g, const std::vector<int>& xs,
                                                  const Rational& target = Rational(1, 3),
                                                  const EnumerationCaps& caps = {}) {
    auto parts = detail::balanced_constraints(g, xs, target, caps);
    LpProblem p;
    p.num_vars = static_cast<int>(parts.family.size());
    p.sense = Sense::Feasibility;
    p.constraints = std::move(parts.constraints);
    LpSolution sol = lp_solve_exact(p);
    require(sol.status == LpStatus::Optimal, ErrorKind::Infeasible,
            "no balanced distribution on M(G,X) with the requested target");
    auto d = detail::collect_support(xs, target, parts.family, sol.values);
    require(verify_balanced(g, d), ErrorKind::Infeasible, "marginal recheck failed");
    return d;
}

struct BurlCertificate {
    Rational min_expected = 0;      // min of E[a(G,X,M)] over balanced distributions
    bool is_burl = false;           // min_expected >= 1/3 exactly
    BalancedDistribution witness;   // the minimizing distribution
    std::vector<int> alternating;   // a(G,X,M) per family element
};

// Minimize the expected alternating number over all balanced distributions.
// a(G,X,M) is a constant per support element, so this is a single LP.
inline BurlCertificate burl_certificate(const Multigraph& g, const std::vector<int>& xs,
                                        const Rational& target = Rational(1, 3),
                                        const EnumerationCaps& caps = {}) {
    auto parts = detail::balanced_constraints(g, xs, target, caps);
    BurlCertificate cert;
    cert.alternating.reserve(parts.family.size());
    for (const auto& m : parts.family)
        cert.alternating.push_back(alternating_number(g, xs, m, parts.family));
    LpProblem p;
    p.num_vars = static_cast<int>(parts.family.size());
    p.sense = Sense::Minimize;
    for (int i = 0; i < p.num_vars; ++i)
        if (cert.alternating[i] != 0) p.objective.emplace_back(i, cert.alternating[i]);
    p.constraints = std::move(parts.constraints);
    LpSolution sol = lp_solve_exact(p);
    require(sol.status == LpStatus::Optimal, ErrorKind::Infeasible,
            "no balanced distribution on M(G,X)");
    cert.min_expected = sol.objective;
    cert.is_burl = cert.min_expected >= Rational(1, 3);
    cert.witness = detail::collect_support(xs, target, parts.family, sol.values);
    return cert;
}

// Claim: for a 3-edge-cut C = delta(Y) with Y inside X, every positive-weight
// support element meets C in exactly one edge.
inline bool check_balanced_claim(const BalancedDistribution& d, const EdgeCut& cut) {
    require(cut.size == 3, ErrorKind::NotThreeCut,
            "claim applies to 3-edge-cuts, got size " + std::to_string(cut.size));
    for (const auto& [m, w] : d.support) {
        int hits = 0;
        for (int e : cut.cut_edges)
            if (m.edge_set.test(e)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace cubicpm
