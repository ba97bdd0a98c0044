#pragma once

/**
 * @file fan.hpp
 * @brief Complete simplicial fans in the rank-2 lattice.
 *
 * A fan is stored as its counterclockwise-ordered list of primitive rays;
 * the maximal cones are the consecutive pairs (u_i, u_{i+1 mod N}). Every
 * rank-2 cone is simplicial, so the surface is automatically Q-factorial.
 */

#include "toric/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace toric {

struct FanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Extended gcd: returns (g, s, t) with s*p + t*q = g = gcd(p,q), g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int p, Int q) {
    Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (q != 0) {
        Int qu = p / q;
        Int r = p - qu * q;
        p = q; q = r;
        Int s2 = s0 - qu * s1, t2 = t0 - qu * t1;
        s0 = s1; t0 = t1; s1 = s2; t1 = t2;
    }
    if (p < 0) { p = -p; s0 = -s0; t0 = -t0; }
    return {p, s0, t0};
}

/// 2x2 integer matrix acting on column vectors.
struct Mat2 {
    Int a, b, c, d;  // [[a,b],[c,d]]
    Vec apply(const Vec& v) const { return Vec(a * v.x + b * v.y, c * v.x + d * v.y); }
    Int det() const { return a * d - b * c; }
    Mat2 inverse_unimodular() const {
        // valid only when det == 1
        return Mat2{d, -b, -c, a};
    }
};

}  // namespace detail

class Fan {
public:
    /// Build a fan from raw rays, checking every invariant. The ray order is
    /// taken as given; unordered input is rejected, never re-sorted.
    static Fan validate(std::vector<Vec> rays) {
        const std::size_t n = rays.size();
        if (n < 3) throw FanError("fan needs at least 3 rays");
        for (const auto& r : rays)
            if (!is_primitive(r))
                throw FanError("non-primitive ray " + r.str());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (same_direction(rays[i], rays[j]))
                    throw FanError("duplicate ray direction " + rays[i].str());
        for (std::size_t i = 0; i < n; ++i)
            if (det2(rays[i], rays[(i + 1) % n]) <= 0)
                throw FanError("consecutive det <= 0 at ray " + rays[i].str() +
                               " (not ccw / not complete)");
        // Each consecutive step turns by less than pi, so the winding number
        // equals the number of steps that pass the reference angle 0.
        int winding = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (ccw_compare(rays[(i + 1) % n], rays[i]) == std::strong_ordering::less)
                ++winding;
        if (winding != 1)
            throw FanError("rays wind around the origin more than once");
        return Fan(std::move(rays));
    }

    std::size_t size() const { return rays_.size(); }
    const Vec& ray(std::size_t i) const { return rays_.at(i); }
    const std::vector<Vec>& rays() const { return rays_; }

    std::size_t next(std::size_t i) const { return (i + 1) % rays_.size(); }
    std::size_t prev(std::size_t i) const { return (i + rays_.size() - 1) % rays_.size(); }

    /// Index of the sublattice spanned by the rays of cone i = (u_i, u_{i+1}).
    Int cone_multiplicity(std::size_t i) const {
        return det2(ray(i), ray(next(i)));
    }

    bool is_smooth() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (cone_multiplicity(i) != 1) return false;
        return true;
    }

    long picard_rank() const { return static_cast<long>(size()) - 2; }

    /// Divisorial contraction of the curve attached to ray i. Requires the
    /// merged cone (u_{i-1}, u_{i+1}) to be convex.
    Fan remove_ray(std::size_t i) const {
        if (i >= size()) throw FanError("remove_ray: bad index");
        if (det2(ray(prev(i)), ray(next(i))) <= 0)
            throw FanError("curve not contractible");
        std::vector<Vec> rest;
        rest.reserve(size() - 1);
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i) rest.push_back(ray(j));
        return validate(std::move(rest));
    }

    /// Smallest i such that v lies in the closed cone (u_i, u_{i+1}).
    std::size_t cone_containing(const Vec& v) const {
        if (v.is_zero()) throw FanError("cone_containing: zero vector");
        for (std::size_t i = 0; i < size(); ++i)
            if (det2(ray(i), v) >= 0 && det2(v, ray(next(i))) >= 0) return i;
        throw FanError("cone_containing: unreachable on a complete fan");
    }

    /// Star subdivision at a primitive v strictly inside some cone.
    Fan insert_ray(const Vec& v) const {
        if (!is_primitive(v)) throw FanError("insert_ray: ray not primitive");
        for (const auto& r : rays_)
            if (det2(r, v) == 0 && dot(r, v) > 0)
                throw FanError("insert_ray: parallel to existing ray " + r.str());
        std::size_t i = cone_containing(v);
        std::vector<Vec> out;
        out.reserve(size() + 1);
        for (std::size_t j = 0; j <= i; ++j) out.push_back(ray(j));
        out.push_back(v);
        for (std::size_t j = i + 1; j < size(); ++j) out.push_back(ray(j));
        return validate(std::move(out));
    }

    struct Insertion {
        Vec ray;
        std::size_t cone;  // index in the *original* fan
    };

    /// Minimal (Hirzebruch-Jung) resolution: subdivide every singular cone
    /// by its HJ ray chain. Returns the smooth fan and the inserted rays.
    std::pair<Fan, std::vector<Insertion>> minimal_resolution() const {
        std::vector<Vec> out;
        std::vector<Insertion> inserted;
        for (std::size_t i = 0; i < size(); ++i) {
            out.push_back(ray(i));
            for (const Vec& v : hj_chain(i)) {
                out.push_back(v);
                inserted.push_back({v, i});
            }
        }
        return {validate(std::move(out)), std::move(inserted)};
    }

    /// The HJ subdivision rays of cone i, in ccw order (u_i side first);
    /// empty when the cone is smooth.
    std::vector<Vec> hj_chain(std::size_t i) const {
        Int d = cone_multiplicity(i);
        if (d == 1) return {};
        // Normalize by a unimodular map U with U(u_{i+1}) = (0,1); then
        // U(u_i) = (d, y) and a shear fixing (0,1) moves it to (d,-k),
        // 0 < k < d, gcd(k,d) = 1.
        const Vec& b = ray(next(i));
        auto [g, s, t] = detail::ext_gcd(b.x, b.y);
        detail::Mat2 T{b.y, -b.x, s, t};  // T*b = (0,1), det 1
        Vec a1 = T.apply(ray(i));         // (d, y)
        Int y = a1.y;
        Int k = ((-y) % d + d) % d;
        Int shear = (-k - y) / d;
        detail::Mat2 S{1, 0, shear, 1};
        detail::Mat2 U{S.a * T.a + S.b * T.c, S.a * T.b + S.b * T.d,
                       S.c * T.a + S.d * T.c, S.c * T.b + S.d * T.d};
        // In U-coordinates the cone is ((d,-k),(0,1)). The resolution chain
        // is v_0 = (0,1), v_1 = (1,0), v_{j+1} = b_j v_j - v_{j-1}, ending
        // at v_{r+1} = (d,-k), with b_j the HJ expansion of d/k.
        std::vector<Int> bs = hj_continued_fraction(d, k);
        std::vector<Vec> chain;  // v_1 .. v_r
        Vec v0(0, 1), v1(1, 0);
        for (const Int& bj : bs) {
            chain.push_back(v1);
            Vec v2 = bj * v1 - v0;
            v0 = v1;
            v1 = v2;
        }
        if (!(v1 == Vec(d, -k)))
            throw FanError("hj_chain: reconstruction mismatch");  // unreachable
        detail::Mat2 Uinv = U.inverse_unimodular();
        // chain runs from the u_{i+1} side toward u_i; reverse for ccw order.
        std::vector<Vec> out;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            out.push_back(Uinv.apply(*it));
        return out;
    }

    bool operator==(const Fan& o) const { return rays_ == o.rays_; }

private:
    explicit Fan(std::vector<Vec> rays) : rays_(std::move(rays)) {}
    std::vector<Vec> rays_;
};

}  // namespace toric
