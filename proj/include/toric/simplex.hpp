#pragma once

/**
 * @file simplex.hpp
 * @brief Exact rational linear programming: dense two-phase simplex with
 *        Bland's rule over arbitrary-precision rationals.
 *
 * Solves  min c.x  subject to  A x = b,  x >= 0.  Problem sizes here are
 * tiny (tens of rows/columns), so a dense tableau is the right tool.
 */

#include "toric/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat objective{0};
    std::vector<Rat> x;
};

struct LinearProgram {
    std::vector<std::vector<Rat>> A;  // m x n
    std::vector<Rat> b;               // m
    std::vector<Rat> c;               // n
};

namespace detail {

class SimplexTableau {
public:
    // rows: m x (ncols+1), last column is the rhs; basis[i] is the column
    // whose tableau column is e_i.
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> basis;
    std::size_t ncols;

    void pivot(std::size_t pr, std::size_t pc, std::vector<Rat>& cost) {
        Rat piv = rows[pr][pc];
        for (auto& v : rows[pr]) v /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][pc] == 0) continue;
            Rat f = rows[i][pc];
            for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[pr][j];
        }
        if (cost[pc] != 0) {
            Rat f = cost[pc];
            for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * rows[pr][j];
        }
        basis[pr] = pc;
    }

    /// Minimize the given cost over the current feasible tableau. The cost
    /// vector has ncols entries plus the negated objective in the last slot.
    /// Returns false when unbounded. Bland's rule, so it always terminates.
    bool minimize(std::vector<Rat>& cost, std::size_t usable_cols) {
        for (;;) {
            std::size_t enter = usable_cols;
            for (std::size_t j = 0; j < usable_cols; ++j)
                if (cost[j] < 0) { enter = j; break; }
            if (enter == usable_cols) return true;
            std::size_t leave = rows.size();
            Rat best_ratio{0};
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter, cost);
        }
    }
};

}  // namespace detail

inline LpSolution simplex_solve(const LinearProgram& lp) {
    const std::size_t m = lp.A.size();
    const std::size_t n = lp.c.size();
    for (const auto& row : lp.A)
        if (row.size() != n) throw std::invalid_argument("simplex_solve: ragged A");
    if (lp.b.size() != m) throw std::invalid_argument("simplex_solve: bad b size");

    detail::SimplexTableau t;
    t.ncols = n + m;  // artificial variable per row
    t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = lp.b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.rows[i][j] = flip ? -lp.A[i][j] : lp.A[i][j];
        t.rows[i][t.ncols] = flip ? -lp.b[i] : lp.b[i];
        t.rows[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> cost1(t.ncols + 1, Rat(0));
    for (std::size_t j = n; j < t.ncols; ++j) cost1[j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= t.ncols; ++j) cost1[j] -= t.rows[i][j];
    if (!t.minimize(cost1, t.ncols))
        throw std::logic_error("simplex_solve: phase 1 unbounded");
    if (-cost1[t.ncols] != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive leftover artificials out of the basis; a row with no real-column
    // entry is redundant and gets dropped.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n) { ++i; continue; }
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) { pc = j; break; }
        if (pc < n) {
            t.pivot(i, pc, cost1);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2: minimize the real objective over the real columns only.
    std::vector<Rat> cost2(t.ncols + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j) cost2[j] = lp.c[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (cost2[t.basis[i]] == 0) continue;
        Rat f = cost2[t.basis[i]];
        for (std::size_t j = 0; j <= t.ncols; ++j) cost2[j] -= f * t.rows[i][j];
    }
    if (!t.minimize(cost2, n)) return {LpStatus::Unbounded, Rat(0), {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.objective = -cost2[t.ncols];
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.ncols];
    return sol;
}

/// Feasibility of  A x = b,  x >= 0.
inline bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    LinearProgram lp;
    lp.A = A;
    lp.b = b;
    lp.c.assign(A.empty() ? 0 : A[0].size(), Rat(0));
    return simplex_solve(lp).status == LpStatus::Optimal;
}

}  // namespace toric
