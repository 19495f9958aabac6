#pragma once

#include <string>
#include <vector>

#include "cubicpm/errors.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

// Certified rational enclosure [lo, hi].
struct Interval {
    Rational lo, hi;

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    // division of positive intervals
    Interval operator/(const Interval& o) const { return {lo / o.hi, hi / o.lo}; }
};

namespace detail {

// Alternating series ln(1+t) = sum (-1)^{k+1} t^k / k for 0 < t <= 1/2 (and
// t = 1/3); consecutive partial sums bracket the limit.
inline Interval log1p_series(const Rational& t, int terms) {
    Rational even = 0, odd = 0, power = 1;
    for (int k = 1; k <= 2 * terms + 1; ++k) {
        power *= t;
        Rational term = power / k;
        if (k % 2 == 1) odd = even + term;
        else even = odd - term;
    }
    return {even, odd};
}

struct LogTable {
    Interval ln43, ln32, ln2, ln3, ln6, x, log2_6;
};

inline LogTable log_table(int terms) {
    LogTable t;
    t.ln43 = log1p_series(Rational(1, 3), terms);
    t.ln32 = log1p_series(Rational(1, 2), terms);
    t.ln2 = t.ln43 + t.ln32;  // ln 2 = ln(4/3) + ln(3/2)
    t.ln3 = t.ln2 + t.ln32;   // ln 3 = ln 2 + ln(3/2)
    t.ln6 = t.ln2 + t.ln3;
    t.x = t.ln43 / t.ln2;  // x = log(4/3)/log 2, all quantities positive
    t.log2_6 = t.ln6 / t.ln2;
    return t;
}

}  // namespace detail

// Enclosure of x = log(4/3)/log 2 tight enough that hi - lo <= width.
inline Interval x_enclosure(const Rational& width = Rational(1, 1000000000000ll)) {
    for (int terms = 8; terms <= 4096; terms *= 2) {
        auto t = detail::log_table(terms);
        if (t.x.hi - t.x.lo <= width) return t.x;
    }
    fail(ErrorKind::CapExceeded, "x enclosure did not converge");
}

// Sign of x - q for rational q; x is irrational so this always resolves.
inline int compare_x_to_rational(const Rational& q) {
    for (int terms = 8; terms <= 4096; terms *= 2) {
        auto t = detail::log_table(terms);
        if (t.x.lo > q) return 1;
        if (t.x.hi < q) return -1;
    }
    fail(ErrorKind::CapExceeded, "comparison with x did not resolve");
}

// Value a*x + b with x = log(4/3)/log 2. Equality is claimed only on
// coefficient identity; all other comparisons go through the enclosure.
struct ConstantValue {
    Rational x_coeff;    // a
    Rational const_term; // b

    ConstantValue(Rational a = 0, Rational b = 0) : x_coeff(std::move(a)), const_term(std::move(b)) {}

    ConstantValue operator+(const ConstantValue& o) const {
        return {x_coeff + o.x_coeff, const_term + o.const_term};
    }
    ConstantValue operator-(const ConstantValue& o) const {
        return {x_coeff - o.x_coeff, const_term - o.const_term};
    }
    ConstantValue scaled(const Rational& r) const { return {x_coeff * r, const_term * r}; }

    bool identical(const ConstantValue& o) const {
        return x_coeff == o.x_coeff && const_term == o.const_term;
    }
};

inline ConstantValue cv_times_x(const Rational& a) { return ConstantValue(a, 0); }

// -1, 0, +1 for a - b; zero only on coefficient identity.
inline int compare(const ConstantValue& a, const ConstantValue& b) {
    Rational da = a.x_coeff - b.x_coeff;
    Rational db = a.const_term - b.const_term;
    if (da == 0) return db == 0 ? 0 : (db > 0 ? 1 : -1);
    // sign of da*x + db  <=>  sign(da) * sign(x - (-db/da))
    int s = compare_x_to_rational(-db / da);
    return da > 0 ? s : -s;
}

inline bool cv_le(const ConstantValue& a, const ConstantValue& b) { return compare(a, b) <= 0; }

// Decimal enclosure of a*x + b for reports.
inline std::pair<Rational, Rational> cv_enclosure(const ConstantValue& v) {
    Interval x = x_enclosure();
    if (v.x_coeff >= 0)
        return {v.x_coeff * x.lo + v.const_term, v.x_coeff * x.hi + v.const_term};
    return {v.x_coeff * x.hi + v.const_term, v.x_coeff * x.lo + v.const_term};
}

// "154x/314", "x/314 + 1/2", ... keeping the paper's denominator where the
// coefficient is a multiple of 1/314.
inline std::string format_constant(const ConstantValue& v) {
    std::string out;
    if (v.x_coeff != 0) {
        Rational scaled = v.x_coeff * 314;
        if (den(scaled) == 1) {
            BigInt k = num(scaled);
            if (k == 1) out = "x/314";
            else out = k.str() + "x/314";
        } else {
            out = "(" + to_fraction_string(v.x_coeff) + ")x";
        }
    }
    if (v.const_term != 0 || v.x_coeff == 0) {
        if (!out.empty()) out += v.const_term >= 0 ? " + " : " - ";
        Rational abs_term = v.const_term >= 0 ? v.const_term : -v.const_term;
        out += to_fraction_string(abs_term);
    }
    return out;
}

struct InequalityStatus {
    int index = 0;
    bool holds = false;
    bool tight = false;  // coefficient-exact equality
    std::string text;
};

struct ConstantSystem {
    long long c = 0;
    ConstantValue alpha, beta1, beta2, gamma;
    std::vector<InequalityStatus> inequality_report;
    std::vector<int> tight_set;
};

// The least integer c for which inequality (2) holds with the fixed
// constants: c = ceil(1386 + 942/x).
inline long long minimal_ceps() {
    for (int terms = 8; terms <= 4096; terms *= 2) {
        auto t = detail::log_table(terms);
        Rational lo = 1386 + Rational(942) / t.x.hi;
        Rational hi = 1386 + Rational(942) / t.x.lo;
        BigInt clo = (num(lo) + den(lo) - 1) / den(lo);
        BigInt chi = (num(hi) + den(hi) - 1) / den(hi);
        if (clo == chi) return clo.convert_to<long long>();
    }
    fail(ErrorKind::CapExceeded, "minimal c did not resolve");
}

// Builds alpha, beta1, beta2, gamma and checks inequalities (1)-(10), with
// 1/c substituted in (2). Tightness is reported on coefficient identity.
inline ConstantSystem constant_system(long long c) {
    require(c >= 1, ErrorKind::BadParams, "c must be positive");
    ConstantSystem sys;
    sys.c = c;
    sys.alpha = cv_times_x(Rational(1, 314));
    sys.beta1 = cv_times_x(Rational(154, 314));
    sys.beta2 = cv_times_x(Rational(74, 314));
    sys.gamma = cv_times_x(Rational(312, 314));
    const ConstantValue zero;
    auto add = [&](int idx, bool holds, bool tight, const std::string& text) {
        sys.inequality_report.push_back({idx, holds, tight, text});
        if (holds && tight) sys.tight_set.push_back(idx);
    };
    // (1) 0 < alpha <= beta2 <= beta1
    add(1,
        compare(zero, sys.alpha) < 0 && cv_le(sys.alpha, sys.beta2) && cv_le(sys.beta2, sys.beta1),
        false, "0 < alpha <= beta2 <= beta1");
    // (2) 1/c <= alpha/(9*beta1 + 3)  <=>  (c - 1386) x >= 942
    {
        bool holds = false;
        if (c > 1386) holds = compare_x_to_rational(Rational(942, c - 1386)) >= 0;
        add(2, holds, false, "1/c <= alpha/(9 beta1 + 3)");
    }
    auto le_report = [&](int idx, const ConstantValue& lhs, const ConstantValue& rhs,
                         const std::string& text) {
        int cmpv = compare(lhs, rhs);
        add(idx, cmpv <= 0, lhs.identical(rhs), text);
    };
    le_report(3, sys.beta2 + sys.alpha.scaled(6), sys.beta1, "beta2 + 6 alpha <= beta1");
    le_report(4, sys.alpha.scaled(74), sys.beta2, "74 alpha <= beta2");
    le_report(5, sys.alpha.scaled(146), sys.beta1, "146 alpha <= beta1");
    le_report(6, sys.beta2 + sys.alpha.scaled(80), sys.beta1, "beta2 + 80 alpha <= beta1");
    // (7) 6 alpha + gamma <= log 6 / log 2, decided by enclosure refinement
    {
        ConstantValue lhs = sys.alpha.scaled(6) + sys.gamma;  // (318/314) x
        bool decided = false, holds = false;
        for (int terms = 8; terms <= 4096 && !decided; terms *= 2) {
            auto t = detail::log_table(terms);
            Rational lhs_hi = lhs.x_coeff * t.x.hi + lhs.const_term;
            Rational lhs_lo = lhs.x_coeff * t.x.lo + lhs.const_term;
            if (lhs_hi < t.log2_6.lo) {
                decided = true;
                holds = true;
            } else if (lhs_lo > t.log2_6.hi) {
                decided = true;
                holds = false;
            }
        }
        require(decided, ErrorKind::CapExceeded, "inequality (7) did not resolve");
        add(7, holds, false, "6 alpha + gamma <= log(6)/log(2)");
    }
    le_report(8, sys.gamma + sys.beta1.scaled(2) + sys.alpha.scaled(7) - sys.beta2,
              ConstantValue(0, 1), "gamma + 2 beta1 + 7 alpha - beta2 <= 1");
    le_report(9, sys.alpha.scaled(6) + sys.beta1.scaled(2), cv_times_x(1),
              "6 alpha + 2 beta1 <= log(4/3)/log(2)");
    le_report(10, sys.beta1.scaled(2) + sys.alpha.scaled(4), sys.gamma,
              "2 beta1 + 4 alpha <= gamma");
    return sys;
}

}  // namespace cubicpm
