#pragma once

/**
 * @file cohomology.hpp
 * @brief Sheaf cohomology of torus-invariant Z-divisors by weight-space
 *        decomposition over the character lattice.
 *
 * For a weight m, the graded piece H^p(X, O(D))_m is the reduced (p-1)-st
 * cohomology of the negative-support subcomplex V_m of the ray cycle:
 * vertex i is present iff <m, u_i> + a_i < 0, edges between consecutive
 * present vertices. Empty V_m contributes to h0, the full cycle to h2, and
 * otherwise each extra connected component contributes to h1.
 */

#include "toric/divisor.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

struct CohomologyTable {
    Int h0{0};
    Int h1{0};
    Int h2{0};

    Int euler() const { return h0 - h1 + h2; }
    bool operator==(const CohomologyTable& o) const = default;
};

struct WeightContribution {
    enum class Target { H0, H1, H2 };
    Vec weight;
    Target target;
    Int h1_count{0};  // number of h1 units when target == H1 (may be 0)
};

namespace detail {

inline void require_integral(const TDivisor& d) {
    if (!is_integral(d))
        throw std::invalid_argument("cohomology is defined for integral divisors only; round first");
}

}  // namespace detail

inline WeightContribution weight_contribution(const Fan& fan, const TDivisor& d,
                                              const Vec& m) {
    detail::require_integral(d);
    const std::size_t n = fan.size();
    std::vector<bool> neg(n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        neg[i] = Rat(dot(m, fan.ray(i))) + d.coeffs[i] < 0;
        if (neg[i]) ++count;
    }
    if (count == 0) return {m, WeightContribution::Target::H0, 0};
    if (count == n) return {m, WeightContribution::Target::H2, 0};
    Int components = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (neg[i] && !neg[(i + n - 1) % n]) ++components;
    return {m, WeightContribution::Target::H1, components - 1};
}

/// Integer bounding box (padded) of all pairwise intersection points of the
/// constraint lines <x, u_i> = -a_i. Weights outside never contribute: their
/// negative support is the sign pattern of a direction at infinity, a single
/// nonempty proper arc of the cycle.
struct WeightBox {
    Int xlo, xhi, ylo, yhi;
};

inline WeightBox weight_box(const Fan& fan, const TDivisor& d, const Int& pad = 1) {
    bool any = false;
    Int xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    const std::size_t n = fan.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (det2(fan.ray(i), fan.ray(j)) == 0) continue;
            auto m = detail::solve_pairing(fan.ray(i), fan.ray(j), -d.coeffs[i],
                                           -d.coeffs[j]);
            Int fx = floor_rat(m.first), cx = ceil_rat(m.first);
            Int fy = floor_rat(m.second), cy = ceil_rat(m.second);
            if (!any) {
                xlo = fx; xhi = cx; ylo = fy; yhi = cy;
                any = true;
            } else {
                xlo = std::min(xlo, fx); xhi = std::max(xhi, cx);
                ylo = std::min(ylo, fy); yhi = std::max(yhi, cy);
            }
        }
    if (!any) throw std::logic_error("weight_box: no independent normal pair");
    return {xlo - pad, xhi + pad, ylo - pad, yhi + pad};
}

inline CohomologyTable cohomology(const Fan& fan, const TDivisor& d,
                                  const Int& pad = 1) {
    detail::require_integral(d);
    WeightBox box = weight_box(fan, d, pad);
    const std::size_t n = fan.size();
    std::vector<Int> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = numerator(d.coeffs[i]);
    CohomologyTable t;
    std::vector<Int> row(n);
    std::vector<bool> neg(n);
    for (Int y = box.ylo; y <= box.yhi; ++y) {
        // row[i] = <(xlo, y), u_i> + a_i, then advance by u_i.x per x-step
        for (std::size_t i = 0; i < n; ++i)
            row[i] = box.xlo * fan.ray(i).x + y * fan.ray(i).y + a[i];
        for (Int x = box.xlo; x <= box.xhi; ++x) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                neg[i] = row[i] < 0;
                if (neg[i]) ++count;
            }
            if (count == 0) {
                ++t.h0;
            } else if (count == n) {
                ++t.h2;
            } else {
                Int components = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (neg[i] && !neg[(i + n - 1) % n]) ++components;
                t.h1 += components - 1;
            }
            if (x < box.xhi)
                for (std::size_t i = 0; i < n; ++i) row[i] += fan.ray(i).x;
        }
    }
    return t;
}

/// Riemann-Roch: chi(O(D)) = 1 + D.(D - K)/2 on a smooth complete toric
/// surface; the independent Euler-characteristic oracle.
inline Int euler_characteristic(const Fan& fan, const TDivisor& d) {
    detail::require_integral(d);
    if (!fan.is_smooth())
        throw std::invalid_argument("euler_characteristic: fan must be smooth");
    Rat chi = 1 + intersect(d, d - canonical(fan)) / 2;
    if (!is_integer(chi))
        throw std::logic_error("euler_characteristic: non-integer result on smooth fan");
    return numerator(chi);
}

/// Independent h0 oracle: lattice points of the section polytope.
inline Int h0_lattice_count(const Fan& fan, const TDivisor& d) {
    detail::require_integral(d);
    (void)fan;
    return Int(lattice_points(polytope(d)).size());
}

}  // namespace toric
