#include "toric/cohomology.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace toric;

namespace {

Fan p2() { return Fan::validate({Vec(1, 0), Vec(0, 1), Vec(-1, -1)}); }
Fan p1p1() { return Fan::validate({Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1)}); }
Fan f1() { return Fan::validate({Vec(1, 0), Vec(0, 1), Vec(-1, 1), Vec(0, -1)}); }

TDivisor make(const Fan& fan, std::vector<Rat> c) { return TDivisor(fan, std::move(c)); }

// Line cohomology of O(a) on P1: (h0, h1).
std::pair<Int, Int> line(long a) {
    if (a >= 0) return {Int(a + 1), Int(0)};
    if (a == -1) return {Int(0), Int(0)};
    return {Int(0), Int(-a - 1)};
}

// Product-surface oracle for the type (a,b) divisor on P1 x P1.
CohomologyTable product_table(long a, long b) {
    auto [a0, a1] = line(a);
    auto [b0, b1] = line(b);
    return {a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
}

}  // namespace

TEST_CASE("weight contributions classify the negative support") {
    SECTION("origin weight of the canonical divisor fills the cycle") {
        auto w = weight_contribution(p2(), canonical(p2()), Vec(0, 0));
        REQUIRE(w.target == WeightContribution::Target::H2);
    }
    SECTION("polytope points contribute to h0") {
        TDivisor d = make(p2(), {Rat(1), Rat(0), Rat(0)});
        auto w = weight_contribution(p2(), d, Vec(0, 0));
        REQUIRE(w.target == WeightContribution::Target::H0);
    }
    SECTION("two opposite isolated vertices give one h1 unit") {
        TDivisor d = make(p1p1(), {Rat(-2), Rat(1), Rat(0), Rat(0)});
        auto w = weight_contribution(p1p1(), d, Vec(1, 0));
        REQUIRE(w.target == WeightContribution::Target::H1);
        REQUIRE(w.h1_count == 1);
    }
}

TEST_CASE("cohomology tables of fixed divisors") {
    REQUIRE(cohomology(p1p1(), make(p1p1(), {Rat(1), Rat(1), Rat(0), Rat(0)})) ==
            CohomologyTable{4, 0, 0});
    for (const Fan& fan : {p2(), p1p1(), f1()})
        REQUIRE(cohomology(fan, zero_divisor(fan)) == CohomologyTable{1, 0, 0});
    REQUIRE(cohomology(p1p1(), make(p1p1(), {Rat(-2), Rat(1), Rat(0), Rat(0)})) ==
            CohomologyTable{0, 2, 0});
    REQUIRE(cohomology(p2(), canonical(p2())) == CohomologyTable{0, 0, 1});
}

TEST_CASE("cohomology requires an integral divisor") {
    REQUIRE_THROWS_AS(cohomology(p2(), make(p2(), {Rat(1, 2), Rat(0), Rat(0)})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        weight_contribution(p2(), make(p2(), {Rat(1, 2), Rat(0), Rat(0)}), Vec(0, 0)),
        std::invalid_argument);
}

TEST_CASE("product-surface oracle over a coefficient grid") {
    Fan q = p1p1();
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            TDivisor d = make(q, {Rat(a), Rat(b), Rat(0), Rat(0)});
            REQUIRE(cohomology(q, d) == product_table(a, b));
        }
}

TEST_CASE("euler characteristic oracle") {
    REQUIRE(euler_characteristic(p2(), make(p2(), {Rat(1), Rat(0), Rat(0)})) == 3);
    REQUIRE(euler_characteristic(p2(), zero_divisor(p2())) == 1);
    REQUIRE(euler_characteristic(p2(), canonical(p2())) == 1);
    REQUIRE(cohomology(p2(), make(p2(), {Rat(1), Rat(0), Rat(0)})) ==
            CohomologyTable{3, 0, 0});
    Fan singular = Fan::validate({Vec(1, 0), Vec(0, 1), Vec(-1, -2)});
    REQUIRE_THROWS_AS(euler_characteristic(singular, zero_divisor(singular)),
                      std::invalid_argument);
}

TEST_CASE("h0 equals the lattice point count of the section polytope") {
    REQUIRE(h0_lattice_count(p1p1(), make(p1p1(), {Rat(1), Rat(1), Rat(0), Rat(0)})) == 4);
    REQUIRE(h0_lattice_count(p2(), make(p2(), {Rat(1), Rat(0), Rat(0)})) == 3);
    REQUIRE(h0_lattice_count(p2(), make(p2(), {Rat(-1), Rat(0), Rat(0)})) == 0);
}

TEST_CASE("randomized oracle agreement on smooth fans") {
    std::mt19937_64 rng(23);
    for (const Fan& fan : {p2(), p1p1(), f1()}) {
        for (int k = 0; k < 40; ++k) {
            std::vector<Rat> c(fan.size());
            for (auto& q : c) q = Rat(static_cast<long>(rng() % 9) - 4);
            TDivisor d = make(fan, c);
            CohomologyTable t = cohomology(fan, d);
            REQUIRE(t.euler() == euler_characteristic(fan, d));
            REQUIRE(t.h0 == h0_lattice_count(fan, d));
            // Serre duality.
            CohomologyTable tk = cohomology(fan, canonical(fan) - d);
            REQUIRE(t.h0 == tk.h2);
            REQUIRE(t.h1 == tk.h1);
            REQUIRE(t.h2 == tk.h0);
            // Box robustness: any padding >= 1 gives the same table.
            REQUIRE(cohomology(fan, d, 2) == t);
            REQUIRE(cohomology(fan, d, 5) == t);
            // Linear-equivalence invariance.
            Vec m(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
            REQUIRE(cohomology(fan, linear_shift(d, m)) == t);
        }
    }
}

TEST_CASE("nef integral divisors have no higher cohomology") {
    std::mt19937_64 rng(29);
    int seen = 0;
    Fan fan = f1();
    for (int k = 0; k < 400 && seen < 30; ++k) {
        std::vector<Rat> c(fan.size());
        for (auto& q : c) q = Rat(static_cast<long>(rng() % 4));
        TDivisor d = make(fan, c);
        if (!is_nef(d)) continue;
        ++seen;
        CohomologyTable t = cohomology(fan, d);
        REQUIRE(t.h1 == 0);
        REQUIRE(t.h2 == 0);
    }
    REQUIRE(seen >= 30);
}
