#pragma once

/**
 * @file mmp.hpp
 * @brief The D-minimal-model program on complete toric surfaces:
 *        extremal-ray selection, divisorial contraction, Mori fiber space
 *        detection, rank-one termination. On a surface every step is a
 *        divisorial contraction; flips cannot occur.
 */

#include "toric/cohomology.hpp"
#include "toric/divisor.hpp"
#include "toric/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace toric {

/// Numerical classes of the torus-invariant curves: entry (i,j) = D_i . D_j.
/// The matrix has rank N - 2.
inline std::vector<std::vector<Rat>> curve_classes(const Fan& fan) {
    const std::size_t n = fan.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = ray_pair_intersection(fan, i, j);
    return m;
}

/// Rank of a rational matrix by Gaussian elimination, exact.
inline std::size_t matrix_rank(std::vector<std::vector<Rat>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

struct ExtremalSelection {
    enum class Kind { Contract, Fiber, RankOneStop };
    Kind kind;
    std::size_t index = 0;     // contracted ray, or the fiber curve's ray
    bool via_fallback = false;
};

namespace detail {

/// Is row i of the curve-class matrix a nonnegative combination of the other
/// rows? Exact LP feasibility; rows equal up to positive scale must be
/// deduplicated by the caller.
inline bool representable_by_others(const std::vector<std::vector<Rat>>& classes,
                                    const std::vector<std::size_t>& pool,
                                    std::size_t i) {
    const std::size_t n = classes.size();
    std::vector<std::vector<Rat>> A(n);
    std::vector<Rat> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j : pool)
            if (j != i) A[r].push_back(classes[j][r]);
        b[r] = classes[i][r];
    }
    return lp_feasible(A, b);
}

inline bool same_positive_ray(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // a == t*b for some t > 0?
    Rat t(0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if ((a[j] == 0) != (b[j] == 0)) return false;
        if (b[j] == 0) continue;
        Rat r = a[j] / b[j];
        if (r <= 0) return false;
        if (t == 0) t = r;
        else if (r != t) return false;
    }
    return true;
}

}  // namespace detail

/// Deterministic extremal-ray selection for a non-nef D:
/// (a) smallest i with D.D_i < 0 and D_i^2 < 0 (negative curves are extremal);
/// (b) smallest i with D.D_i < 0, D_i^2 = 0 and rho = 2: fiber declaration;
/// (c) N = 3: rank-one termination;
/// (d) fallback: extremal generators of the Mori cone by exact LP elimination,
///     then the smallest-index D-negative extremal curve.
inline ExtremalSelection select_extremal(const Fan& fan, const TDivisor& d) {
    if (is_nef(d)) throw std::logic_error("select_extremal: no extremal ray, D is nef");
    const std::size_t n = fan.size();
    std::vector<Rat> dE(n), EE(n);
    for (std::size_t i = 0; i < n; ++i) {
        dE[i] = intersect_ray(d, i);
        EE[i] = ray_pair_intersection(fan, i, i);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (dE[i] < 0 && EE[i] < 0) return {ExtremalSelection::Kind::Contract, i, false};
    if (fan.picard_rank() == 2)
        for (std::size_t i = 0; i < n; ++i)
            if (dE[i] < 0 && EE[i] == 0) return {ExtremalSelection::Kind::Fiber, i, false};
    if (n == 3) return {ExtremalSelection::Kind::RankOneStop, 0, false};

    // Fallback: decide extremality inside the Mori cone exactly.
    auto classes = curve_classes(fan);
    std::vector<std::size_t> pool;  // one representative per positive ray of classes
    for (std::size_t i = 0; i < n; ++i) {
        bool dup = false;
        for (std::size_t j : pool)
            if (detail::same_positive_ray(classes[i], classes[j])) { dup = true; break; }
        if (!dup) pool.push_back(i);
    }
    for (std::size_t i : pool) {
        if (dE[i] >= 0) continue;
        if (detail::representable_by_others(classes, pool, i)) continue;
        // D-negative extremal curve found.
        if (EE[i] < 0) return {ExtremalSelection::Kind::Contract, i, true};
        if (EE[i] == 0 && fan.picard_rank() == 2)
            return {ExtremalSelection::Kind::Fiber, i, true};
    }
    throw std::logic_error("select_extremal: no usable D-negative extremal curve (rho > 2)");
}

/// Strict transform of D under the contraction of ray i: drop coefficient i.
inline TDivisor pushforward(const TDivisor& d, std::size_t i) {
    Fan after = d.fan.remove_ray(i);
    std::vector<Rat> c;
    c.reserve(d.size() - 1);
    for (std::size_t j = 0; j < d.size(); ++j)
        if (j != i) c.push_back(d.coeffs[j]);
    return TDivisor(std::move(after), std::move(c));
}

struct MMPStep {
    std::size_t ray_index;
    Vec ray;
    Fan before;
    Fan after;
    TDivisor divisor_before;
    TDivisor divisor_after;
    Rat d_dot_e;
    Rat e_squared;
    std::optional<std::pair<CohomologyTable, CohomologyTable>> tables;
};

struct MMPOutcome {
    enum class Kind { MinimalModel, MoriFiberSpace, RankOne };
    Kind kind;
    // MoriFiberSpace: the fiber curve's ray index and the anti-parallel wall
    // pair +-w it fibers along.
    std::size_t fiber_curve_index = 0;
    Vec fiber_wall;
    // RankOne: whether -D is ample on the final surface.
    bool minus_d_ample = false;
};

struct MMPTrace {
    std::vector<MMPStep> steps;
    MMPOutcome outcome;
    Fan final_fan;
    TDivisor final_divisor;
    bool fallback_used = false;
};

/// Run the D-MMP: contract D-negative extremal curves until D is nef or a
/// Mori fiber space / Picard-rank-one end state appears. When
/// check_cohomology is set and D is integral, the full cohomology table is
/// asserted unchanged across every contraction.
inline MMPTrace run_mmp(const Fan& fan0, const TDivisor& d0, bool check_cohomology = false) {
    Fan fan = fan0;
    TDivisor d = d0;
    const std::size_t n0 = fan0.size();
    std::vector<MMPStep> steps;
    bool fallback_used = false;
    const bool track_tables = check_cohomology && is_integral(d0);
    for (;;) {
        if (is_nef(d)) {
            MMPOutcome out{MMPOutcome::Kind::MinimalModel};
            return {std::move(steps), out, fan, d, fallback_used};
        }
        ExtremalSelection sel = select_extremal(fan, d);
        fallback_used = fallback_used || sel.via_fallback;
        if (sel.kind == ExtremalSelection::Kind::Fiber) {
            MMPOutcome out{MMPOutcome::Kind::MoriFiberSpace};
            out.fiber_curve_index = sel.index;
            out.fiber_wall = fan.ray(fan.next(sel.index));
            if (fan.picard_rank() != 2)
                throw std::logic_error("run_mmp: fiber outcome with rho != 2");
            return {std::move(steps), out, fan, d, fallback_used};
        }
        if (sel.kind == ExtremalSelection::Kind::RankOneStop) {
            if (fan.size() != 3) throw std::logic_error("run_mmp: rank-one outcome with N != 3");
            MMPOutcome out{MMPOutcome::Kind::RankOne};
            out.minus_d_ample = is_ample(-d);
            return {std::move(steps), out, fan, d, fallback_used};
        }
        // Divisorial contraction. E^2 < 0 must match contractibility of the
        // merged cone exactly.
        std::size_t i = sel.index;
        Rat e2 = ray_pair_intersection(fan, i, i);
        bool convex = det2(fan.ray(fan.prev(i)), fan.ray(fan.next(i))) > 0;
        if ((e2 < 0) != convex)
            throw std::logic_error("run_mmp: E^2 < 0 disagrees with cone convexity");
        MMPStep step{i,
                     fan.ray(i),
                     fan,
                     fan.remove_ray(i),
                     d,
                     pushforward(d, i),
                     intersect_ray(d, i),
                     e2,
                     std::nullopt};
        if (track_tables) {
            CohomologyTable before = cohomology(fan, d);
            CohomologyTable after = cohomology(step.after, step.divisor_after);
            if (!(before == after))
                throw std::logic_error("run_mmp: cohomology changed across a contraction");
            step.tables = {before, after};
        }
        fan = step.after;
        d = step.divisor_after;
        steps.push_back(std::move(step));
        if (steps.size() > n0 - 3)
            throw std::logic_error("run_mmp: step bound N0 - 3 exceeded");
    }
}

}  // namespace toric
