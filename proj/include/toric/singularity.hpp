#pragma once

/**
 * @file singularity.hpp
 * @brief klt checking for torus-invariant pairs (X, Delta), by the
 *        coefficient criterion and independently by discrepancies on the
 *        minimal resolution.
 */

#include "toric/fan.hpp"

#include <stdexcept>
#include <vector>

namespace toric {

/// A pair boundary Delta = sum delta_i D_i. No constraint is imposed at
/// construction; klt-ness is what gets tested.
struct PairBoundary {
    Fan fan;
    std::vector<Rat> delta;

    PairBoundary(Fan f, std::vector<Rat> d) : fan(std::move(f)), delta(std::move(d)) {
        if (delta.size() != fan.size())
            throw std::invalid_argument("PairBoundary: coefficient count != ray count");
    }
};

/// Coefficient criterion: (X, Delta) is klt iff every delta_i lies in [0,1).
/// (K_X + Delta is automatically Q-Cartier on a simplicial fan.)
inline bool is_klt_combinatorial(const PairBoundary& pair) {
    for (const auto& q : pair.delta)
        if (q < 0 || q >= 1) return false;
    return true;
}

/// Log discrepancy of the divisorial valuation v: the piecewise-linear
/// function psi with psi(u_i) = 1 - delta_i, evaluated at v by solving
/// v = alpha u_i + beta u_{i+1} in the cone containing v.
inline Rat log_discrepancy(const PairBoundary& pair, const Vec& v) {
    if (!is_primitive(v))
        throw std::invalid_argument("log_discrepancy: v must be primitive");
    const Fan& fan = pair.fan;
    std::size_t i = fan.cone_containing(v);
    const Vec& u0 = fan.ray(i);
    const Vec& u1 = fan.ray(fan.next(i));
    Rat den{det2(u0, u1)};
    Rat alpha = Rat(det2(v, u1)) / den;
    Rat beta = Rat(det2(u0, v)) / den;
    return alpha * (1 - pair.delta[i]) + beta * (1 - pair.delta[fan.next(i)]);
}

/// Independent klt check: pull K + Delta back to the minimal resolution and
/// require positive log discrepancy at every exceptional ray, on top of
/// delta_i < 1 on the original rays. Agrees with the coefficient criterion
/// whenever all delta_i >= 0.
inline bool is_klt_via_resolution(const PairBoundary& pair) {
    for (const auto& q : pair.delta)
        if (q >= 1) return false;
    auto [resolved, inserted] = pair.fan.minimal_resolution();
    (void)resolved;
    for (const auto& ins : inserted)
        if (log_discrepancy(pair, ins.ray) <= 0) return false;
    return true;
}

}  // namespace toric
