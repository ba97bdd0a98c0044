#pragma once

/**
 * @file lattice.hpp
 * @brief Rank-2 lattice primitives: vectors, determinants, angular order,
 *        Hirzebruch-Jung continued fractions.
 */

#include "toric/numeric.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// A vector in the rank-2 lattice Z^2.
struct Vec {
    Int x;
    Int y;

    Vec() : x(0), y(0) {}
    Vec(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec(long xx, long yy) : x(xx), y(yy) {}

    bool operator==(const Vec& o) const = default;

    Vec operator+(const Vec& o) const { return Vec(x + o.x, y + o.y); }
    Vec operator-(const Vec& o) const { return Vec(x - o.x, y - o.y); }
    Vec operator-() const { return Vec(-x, -y); }

    bool is_zero() const { return x == 0 && y == 0; }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Vec operator*(const Int& c, const Vec& v) { return Vec(c * v.x, c * v.y); }

inline Int dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

/// Signed area a.x*b.y - a.y*b.x. Positive iff b lies counterclockwise of a
/// (by less than a half turn).
inline Int det2(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

/// Rotate a quarter turn counterclockwise.
inline Vec rot90(const Vec& v) { return Vec(-v.y, v.x); }

struct Primitivized {
    Vec primitive;
    Int multiplier;  // positive; multiplier * primitive == input
};

inline bool is_primitive(const Vec& v) {
    if (v.is_zero()) return false;
    return gcd(abs(v.x), abs(v.y)) == 1;
}

inline Primitivized primitivize(const Vec& v) {
    if (v.is_zero()) throw std::invalid_argument("primitivize: not a direction");
    Int g = gcd(abs(v.x), abs(v.y));
    return {Vec(v.x / g, v.y / g), g};
}

namespace detail {
/// Octant index 0..7 counting counterclockwise from the positive x-axis.
inline int angular_sector(const Vec& v) {
    if (v.y == 0) return v.x > 0 ? 0 : 4;
    if (v.x == 0) return v.y > 0 ? 2 : 6;
    if (v.x > 0) return v.y > 0 ? 1 : 7;
    return v.y > 0 ? 3 : 5;
}
}  // namespace detail

/// Total order by angle from the positive x-axis, in [0, 2pi). Parallel
/// same-direction vectors compare equal. Exact: sector classification plus
/// a determinant sign, no floating point.
inline std::strong_ordering ccw_compare(const Vec& a, const Vec& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("ccw_compare: zero vector");
    int sa = detail::angular_sector(a);
    int sb = detail::angular_sector(b);
    if (sa != sb) return sa <=> sb;
    Int d = det2(a, b);
    if (d > 0) return std::strong_ordering::less;
    if (d < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool same_direction(const Vec& a, const Vec& b) {
    return det2(a, b) == 0 && dot(a, b) > 0;
}

/// Hirzebruch-Jung (negative-regular) continued fraction of d/k:
///   d/k = b_1 - 1/(b_2 - 1/(... - 1/b_r)),  all b_i >= 2.
/// Requires 0 < k < d and gcd(d,k) = 1.
inline std::vector<Int> hj_continued_fraction(const Int& d, const Int& k) {
    if (!(d > 0 && k > 0 && k < d))
        throw std::invalid_argument("hj_continued_fraction: need 0 < k < d");
    if (gcd(d, k) != 1)
        throw std::invalid_argument("hj_continued_fraction: gcd(d,k) != 1");
    std::vector<Int> out;
    Int a = d, b = k;
    while (b > 0) {
        Int q = ceil_div(a, b);
        out.push_back(q);
        Int next = q * b - a;  // in [0, b)
        a = b;
        b = next;
    }
    return out;
}

/// Evaluate a HJ expansion back to a rational; the reconstruction oracle.
inline Rat hj_evaluate(const std::vector<Int>& bs) {
    if (bs.empty()) throw std::invalid_argument("hj_evaluate: empty expansion");
    Rat v(bs.back());
    for (auto it = bs.rbegin() + 1; it != bs.rend(); ++it) v = Rat(*it) - 1 / v;
    return v;
}

}  // namespace toric
