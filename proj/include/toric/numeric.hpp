#pragma once

/**
 * @file numeric.hpp
 * @brief Exact arbitrary-precision integers and rationals.
 *
 * Everything in this library computes over Z and Q exactly; no floating
 * point is used anywhere. Rationals are kept canonical (lowest terms,
 * positive denominator) by the underlying GMP representation.
 */

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Floor of p/q as an integer (round toward -infinity).
inline Int floor_div(const Int& p, const Int& q) {
    if (q <= 0) throw std::invalid_argument("floor_div: nonpositive divisor");
    Int t = p / q;  // truncates toward zero
    if (p % q != 0 && p < 0) --t;
    return t;
}

inline Int ceil_div(const Int& p, const Int& q) { return -floor_div(-p, q); }

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

/// Parse "p" or "p/q" (sign on the numerator only). Throws on bad syntax
/// or a zero denominator.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("bad rational syntax: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t, bool allow_sign) {
        if (t.empty()) throw bad();
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-')) i = 1;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw bad();
    };
    if (slash == std::string::npos) {
        check_int(s, true);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    Int d(den);
    if (d == 0) throw std::runtime_error("zero denominator in rational '" + s + "'");
    return Rat(Int(num), d);
}

/// Render as "p" or "p/q"; exact, never decimal.
inline std::string format_rat(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace toric
