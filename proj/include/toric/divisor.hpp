#pragma once

/**
 * @file divisor.hpp
 * @brief Torus-invariant Q-divisors on a complete toric surface: canonical
 *        divisor, rounding, linear-equivalence shifts, intersection theory,
 *        nef/ample/big tests, section polytopes and Iitaka dimension.
 */

#include "toric/fan.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

/// A torus-invariant Q-divisor: one exact rational coefficient per ray.
struct TDivisor {
    Fan fan;
    std::vector<Rat> coeffs;

    TDivisor(Fan f, std::vector<Rat> c) : fan(std::move(f)), coeffs(std::move(c)) {
        if (coeffs.size() != fan.size())
            throw std::invalid_argument("TDivisor: coefficient count != ray count");
    }

    std::size_t size() const { return coeffs.size(); }
    bool operator==(const TDivisor& o) const = default;

    TDivisor operator+(const TDivisor& o) const {
        require_same_fan(o);
        std::vector<Rat> c(coeffs);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
        return TDivisor(fan, std::move(c));
    }
    TDivisor operator-(const TDivisor& o) const {
        require_same_fan(o);
        std::vector<Rat> c(coeffs);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
        return TDivisor(fan, std::move(c));
    }
    TDivisor operator-() const {
        std::vector<Rat> c(coeffs);
        for (auto& q : c) q = -q;
        return TDivisor(fan, std::move(c));
    }
    friend TDivisor operator*(const Rat& t, const TDivisor& d) {
        std::vector<Rat> c(d.coeffs);
        for (auto& q : c) q *= t;
        return TDivisor(d.fan, std::move(c));
    }

    void require_same_fan(const TDivisor& o) const {
        if (!(fan == o.fan))
            throw std::invalid_argument("divisors live on different fans");
    }
};

inline bool is_integral(const TDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(),
                       [](const Rat& q) { return is_integer(q); });
}

/// K_X = -sum of all torus-invariant prime divisors.
inline TDivisor canonical(const Fan& fan) {
    return TDivisor(fan, std::vector<Rat>(fan.size(), Rat(-1)));
}

inline TDivisor zero_divisor(const Fan& fan) {
    return TDivisor(fan, std::vector<Rat>(fan.size(), Rat(0)));
}

/// The prime divisor D_i: coefficient 1 on ray i.
inline TDivisor ray_divisor(const Fan& fan, std::size_t i) {
    std::vector<Rat> c(fan.size(), Rat(0));
    c.at(i) = 1;
    return TDivisor(fan, std::move(c));
}

inline TDivisor round_up(const TDivisor& d) {
    std::vector<Rat> c;
    c.reserve(d.size());
    for (const auto& q : d.coeffs) c.emplace_back(ceil_rat(q));
    return TDivisor(d.fan, std::move(c));
}

inline TDivisor round_down(const TDivisor& d) {
    std::vector<Rat> c;
    c.reserve(d.size());
    for (const auto& q : d.coeffs) c.emplace_back(floor_rat(q));
    return TDivisor(d.fan, std::move(c));
}

/// Replace D by the linearly equivalent divisor D + div(chi^m):
/// coefficient i gains <m, u_i>.
inline TDivisor linear_shift(const TDivisor& d, const Vec& m) {
    std::vector<Rat> c(d.coeffs);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += Rat(dot(m, d.fan.ray(i)));
    return TDivisor(d.fan, std::move(c));
}

/// Intersection number D_i . D_j of the prime torus-invariant curves.
/// Adjacent rays meet transversally in the orbifold point of their cone;
/// the self-intersection comes from the wall relation
///   det(u_{i-1},u_{i+1}) u_i = det(u_{i-1},u_i) u_{i+1} + det(u_i,u_{i+1}) u_{i-1}.
inline Rat ray_pair_intersection(const Fan& fan, std::size_t i, std::size_t j) {
    if (i == j) {
        Int d_prev = det2(fan.ray(fan.prev(i)), fan.ray(i));
        Int d_next = det2(fan.ray(i), fan.ray(fan.next(i)));
        Int d_skip = det2(fan.ray(fan.prev(i)), fan.ray(fan.next(i)));
        return Rat(-d_skip) / Rat(d_prev * d_next);
    }
    if (j == fan.next(i)) return Rat(1) / Rat(det2(fan.ray(i), fan.ray(j)));
    if (i == fan.next(j)) return Rat(1) / Rat(det2(fan.ray(j), fan.ray(i)));
    return Rat(0);
}

/// D . D_i for the prime curve of ray i.
inline Rat intersect_ray(const TDivisor& d, std::size_t i) {
    const Fan& fan = d.fan;
    Rat total = d.coeffs[i] * ray_pair_intersection(fan, i, i);
    total += d.coeffs[fan.prev(i)] * ray_pair_intersection(fan, fan.prev(i), i);
    total += d.coeffs[fan.next(i)] * ray_pair_intersection(fan, fan.next(i), i);
    return total;
}

/// Bilinear intersection pairing of two Q-divisors on the same fan.
inline Rat intersect(const TDivisor& a, const TDivisor& b) {
    a.require_same_fan(b);
    Rat total(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b.coeffs[i] == 0) continue;
        total += b.coeffs[i] * intersect_ray(a, i);
    }
    return total;
}

inline Rat self_intersect(const TDivisor& d) { return intersect(d, d); }

namespace detail {

/// Solve <m,u> = r, <m,v> = s for rational m; u,v independent.
inline std::pair<Rat, Rat> solve_pairing(const Vec& u, const Vec& v, const Rat& r,
                                         const Rat& s) {
    Rat den{det2(u, v)};
    Rat mx = (r * Rat(v.y) - s * Rat(u.y)) / den;
    Rat my = (s * Rat(u.x) - r * Rat(v.x)) / den;
    return {mx, my};
}

inline Rat pair_point(const std::pair<Rat, Rat>& m, const Vec& u) {
    return m.first * Rat(u.x) + m.second * Rat(u.y);
}

}  // namespace detail

/// Nef test via intersection numbers: D . D_i >= 0 for every torus-invariant
/// curve (these generate the curve classes on a complete toric surface).
inline bool is_nef_by_intersections(const TDivisor& d, bool strict = false) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rat v = intersect_ray(d, i);
        if (strict ? (v <= 0) : (v < 0)) return false;
    }
    return true;
}

/// Independent nef test via Cartier data: on each cone solve the linear
/// functional m_sigma with <m_sigma, u_i> = -a_i on the cone's rays; D is nef
/// iff every m_sigma satisfies every ray inequality of the polytope.
inline bool is_nef_by_cartier_data(const TDivisor& d, bool strict = false) {
    const Fan& fan = d.fan;
    for (std::size_t c = 0; c < fan.size(); ++c) {
        std::size_t c1 = fan.next(c);
        auto m = detail::solve_pairing(fan.ray(c), fan.ray(c1), -d.coeffs[c],
                                       -d.coeffs[c1]);
        for (std::size_t r = 0; r < fan.size(); ++r) {
            if (r == c || r == c1) continue;
            Rat lhs = detail::pair_point(m, fan.ray(r));
            Rat rhs = -d.coeffs[r];
            if (strict ? (lhs <= rhs) : (lhs < rhs)) return false;
        }
    }
    return true;
}

/// Nef test; both routes are computed and must agree.
inline bool is_nef(const TDivisor& d) {
    bool a = is_nef_by_intersections(d);
    bool b = is_nef_by_cartier_data(d);
    if (a != b) throw std::logic_error("is_nef: intersection and Cartier routes disagree");
    return a;
}

inline bool is_ample(const TDivisor& d) {
    bool a = is_nef_by_intersections(d, /*strict=*/true);
    bool b = is_nef_by_cartier_data(d, /*strict=*/true);
    if (a != b) throw std::logic_error("is_ample: intersection and Cartier routes disagree");
    return a;
}

inline bool is_effective(const TDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(),
                       [](const Rat& q) { return q >= 0; });
}

struct QPoint {
    Rat x;
    Rat y;
    bool operator==(const QPoint& o) const = default;
};

/// Dimension constant for the empty polytope (stands in for -infinity).
inline constexpr int kDimEmpty = -1;

/// The section polytope P_D = { m : <m, u_i> >= -a_i }, bounded because the
/// rays of a complete fan positively span the plane.
struct Polytope2 {
    std::vector<Vec> normals;
    std::vector<Rat> bounds;             // constraint i: <x, normals[i]> >= -bounds[i]
    std::vector<QPoint> vertices;        // exact; empty iff the polytope is empty
    int dim = kDimEmpty;                 // kDimEmpty, 0, 1 or 2

    bool contains(const QPoint& p) const {
        for (std::size_t i = 0; i < normals.size(); ++i)
            if (p.x * Rat(normals[i].x) + p.y * Rat(normals[i].y) < -bounds[i])
                return false;
        return true;
    }
};

inline Polytope2 polytope(const TDivisor& d) {
    Polytope2 p;
    p.normals = d.fan.rays();
    p.bounds = d.coeffs;
    const std::size_t n = p.normals.size();
    // Vertices are feasible intersection points of non-parallel constraint
    // lines: a feasible point on two independent active constraints is a
    // 0-dimensional face.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (det2(p.normals[i], p.normals[j]) == 0) continue;
            auto m = detail::solve_pairing(p.normals[i], p.normals[j], -p.bounds[i],
                                           -p.bounds[j]);
            QPoint q{m.first, m.second};
            if (!p.contains(q)) continue;
            if (std::find(p.vertices.begin(), p.vertices.end(), q) == p.vertices.end())
                p.vertices.push_back(q);
        }
    }
    // Dimension = affine rank of the collected points. (For a segment the
    // list may pick up points interior to it, where a third constraint line
    // crosses; the affine rank is unaffected.)
    if (p.vertices.empty()) {
        p.dim = kDimEmpty;
    } else {
        p.dim = 0;
        const QPoint& o = p.vertices[0];
        std::size_t first = 0;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            if (p.vertices[i] == o) continue;
            if (p.dim == 0) {
                p.dim = 1;
                first = i;
            } else {
                Rat ax = p.vertices[first].x - o.x, ay = p.vertices[first].y - o.y;
                Rat bx = p.vertices[i].x - o.x, by = p.vertices[i].y - o.y;
                if (ax * by - ay * bx != 0) {
                    p.dim = 2;
                    break;
                }
            }
        }
    }
    return p;
}

/// All lattice points of a bounded polytope, by scanning the vertex box.
inline std::vector<Vec> lattice_points(const Polytope2& p) {
    std::vector<Vec> pts;
    if (p.vertices.empty()) return pts;
    Int xlo = floor_rat(p.vertices[0].x), xhi = ceil_rat(p.vertices[0].x);
    Int ylo = floor_rat(p.vertices[0].y), yhi = ceil_rat(p.vertices[0].y);
    for (const auto& v : p.vertices) {
        xlo = std::min(xlo, floor_rat(v.x));
        xhi = std::max(xhi, ceil_rat(v.x));
        ylo = std::min(ylo, floor_rat(v.y));
        yhi = std::max(yhi, ceil_rat(v.y));
    }
    for (Int x = xlo; x <= xhi; ++x)
        for (Int y = ylo; y <= yhi; ++y) {
            QPoint q{Rat(x), Rat(y)};
            if (p.contains(q)) pts.emplace_back(x, y);
        }
    return pts;
}

/// Iitaka (Kodaira) dimension of D as the dimension of P_D; exact because
/// P_{mD} = m P_D for torus-invariant D. Returns kDimEmpty for empty P_D.
inline int iitaka_dimension(const TDivisor& d) { return polytope(d).dim; }

/// Bigness = maximal section growth = 2-dimensional section polytope.
/// For nef D this must coincide with D^2 > 0; that equivalence is checked,
/// not assumed.
inline bool is_big(const TDivisor& d) {
    bool big = iitaka_dimension(d) == 2;
    if (is_nef(d)) {
        bool positive_square = self_intersect(d) > 0;
        if (big != positive_square)
            throw std::logic_error("is_big: polytope dimension and D^2 disagree on nef D");
    }
    return big;
}

}  // namespace toric
