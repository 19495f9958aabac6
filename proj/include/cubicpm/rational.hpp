#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cubicpm/errors.hpp"

namespace cubicpm {

// Exact arithmetic throughout: probabilities, LP tableaus and constant
// comparisons never touch floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical "p/q" form, q >= 1 even for integers.
inline std::string to_fraction_string(const Rational& r) {
    return num(r).str() + "/" + den(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        require(q != 0, ErrorKind::BadParams, "zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        fail(ErrorKind::BadParams, "cannot parse rational '" + s + "'");
    }
}

// Decimal string of r truncated toward zero, for report enclosures.
inline std::string to_decimal_string(const Rational& r, int digits = 12) {
    BigInt p = num(r), q = den(r);
    bool neg = p < 0;
    if (neg) p = -p;
    BigInt whole = p / q;
    BigInt rem = p % q;
    std::string out = (neg ? "-" : "") + whole.str();
    if (digits > 0) {
        out += ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            BigInt digit = rem / q;
            out += digit.str();
            rem %= q;
        }
    }
    return out;
}

}  // namespace cubicpm
