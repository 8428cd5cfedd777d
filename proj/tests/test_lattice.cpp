#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "toroidal/lattice.hpp"

using namespace toroidal;

namespace {

QuadInt eis(Int a, Int b) { return {a, b, OrderKind::Eisenstein6}; }

void check_snf(const IntMat2& m) {
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.U.is_unimodular());
    CHECK(snf.V.is_unimodular());
    CHECK(snf.U * m * snf.V == snf.D);
    CHECK(snf.D.m12 == 0);
    CHECK(snf.D.m21 == 0);
    CHECK(snf.D.m11 >= 0);
    CHECK(snf.D.m22 >= 0);
    if (snf.D.m11 != 0) CHECK(snf.D.m22 % snf.D.m11 == 0);
    else CHECK(snf.D.m22 == 0);
    const Int det = m.det();
    CHECK(snf.D.m11 * snf.D.m22 == (det < 0 ? -det : det));
}

std::set<std::pair<std::pair<Int, Int>, std::pair<Int, Int>>> rep_set(
    const std::vector<TorsionPoint>& reps) {
    std::set<std::pair<std::pair<Int, Int>, std::pair<Int, Int>>> out;
    for (const TorsionPoint& p : reps)
        out.insert({{p[0].num(), p[0].den()}, {p[1].num(), p[1].den()}});
    return out;
}

} // namespace

TEST_CASE("multiplication matrices") {
    CHECK(mult_matrix(eis(2, 0)) == IntMat2{2, 0, 0, 2});
    CHECK(mult_matrix(eis(2, 0)).det() == 4);
    CHECK(mult_matrix(eis(2, -1)) == IntMat2{2, 1, -1, 1});
    CHECK(mult_matrix(eis(2, -1)).det() == 3);
    CHECK(mult_matrix(QuadInt::one(OrderKind::Gaussian)) == IntMat2::identity());

    oracles::Rng rng;
    for (int trial = 0; trial < 1000; ++trial) {
        const QuadInt gamma = rng.quadint(rng.order());
        CHECK(mult_matrix(gamma).det() == norm(gamma));
    }
}

TEST_CASE("smith normal form on fixed matrices") {
    {
        const SnfResult snf = smith_normal_form(IntMat2::identity());
        CHECK(snf.D == IntMat2::identity());
    }
    {
        const SnfResult snf = smith_normal_form({2, 0, 0, 2});
        CHECK(snf.D == IntMat2{2, 0, 0, 2});
    }
    {
        const SnfResult snf = smith_normal_form(mult_matrix(eis(2, -1)));
        CHECK(snf.D == IntMat2{1, 0, 0, 3});
    }
    {
        const SnfResult snf = smith_normal_form({0, 0, 0, 0});
        CHECK(snf.D == IntMat2{0, 0, 0, 0});
        CHECK(snf.U.is_unimodular());
        CHECK(snf.V.is_unimodular());
    }
    check_snf({4, 6, 2, 8});       // det 20, divisors (2, 10)
    check_snf({0, 5, 7, 0});       // anti-diagonal
    check_snf({3, 6, 1, 2});       // rank one
    check_snf({-3, 1, 0, -2});     // negative determinant
    check_snf({19, -11, 7, -4});   // unimodular; once cycled the clearing loop
    check_snf({1, -1, 0, 1});
    check_snf({-1, 0, 0, -1});
}

TEST_CASE("smith normal form randomized suite") {
    oracles::Rng rng;
    for (int trial = 0; trial < 1000; ++trial) {
        check_snf(rng.mat2());
    }
    // Rank-one and scaled matrices stress the divisibility chain.
    for (int trial = 0; trial < 200; ++trial) {
        const Int a = rng.pick(-8, 8), b = rng.pick(-8, 8), k = rng.pick(-5, 5);
        check_snf({a, b, k * a, k * b});
        check_snf({2 * a, 2 * b, 4 * a, 6 * b});
    }
}

TEST_CASE("torsion groups of the quoted elements") {
    // gamma = 2: the four two-torsion points.
    for (const OrderKind order :
         {OrderKind::Rational, OrderKind::Gaussian, OrderKind::Eisenstein6}) {
        const TorsionGroup group = quotient_reps(QuadInt(2, 0, order));
        REQUIRE(group.reps.size() == 4);
        const auto reps = rep_set(group.reps);
        CHECK(reps.count({{0, 1}, {0, 1}}) == 1);
        CHECK(reps.count({{1, 2}, {0, 1}}) == 1);
        CHECK(reps.count({{0, 1}, {1, 2}}) == 1);
        CHECK(reps.count({{1, 2}, {1, 2}}) == 1);
    }
    // gamma = t - 1 is a unit: only the origin.
    {
        const TorsionGroup group = quotient_reps(eis(-1, 1));
        REQUIRE(group.reps.size() == 1);
        CHECK(group.reps[0] == TorsionPoint{Frac{}, Frac{}});
    }
    // gamma = 2 - t: three classes containing (2/3, 2/3).
    {
        const TorsionGroup group = quotient_reps(eis(2, -1));
        REQUIRE(group.reps.size() == 3);
        CHECK(rep_set(group.reps).count({{2, 3}, {2, 3}}) == 1);
    }
    // gamma = 1 - i: two classes containing (1/2, 1/2).
    {
        const TorsionGroup group = quotient_reps(QuadInt(1, -1, OrderKind::Gaussian));
        REQUIRE(group.reps.size() == 2);
        CHECK(rep_set(group.reps).count({{1, 2}, {1, 2}}) == 1);
    }

    CHECK_THROWS_AS(quotient_reps(QuadInt::zero(OrderKind::Eisenstein6)), std::domain_error);
}

TEST_CASE("torsion groups: count, exactness, closure and the scan oracle") {
    for (const OrderKind order :
         {OrderKind::Rational, OrderKind::Gaussian, OrderKind::Eisenstein6}) {
        for (const QuadInt& gamma : oracles::elements_with_norm_up_to(order, 12)) {
            if (gamma.is_zero()) continue;
            const TorsionGroup group = quotient_reps(gamma);
            const IntMat2 m = mult_matrix(gamma);

            CHECK(static_cast<Int>(group.reps.size()) == norm(gamma));
            for (const TorsionPoint& z : group.reps) {
                CHECK(kills(m, z));
                CHECK(z[0].den() >= 1);
                CHECK(z[0].num() >= 0);
                CHECK(z[0].num() < z[0].den());
                CHECK(z[1].num() >= 0);
                CHECK(z[1].num() < z[1].den());
            }
            // Pairwise distinct and sorted.
            for (std::size_t i = 1; i < group.reps.size(); ++i)
                CHECK(group.reps[i - 1] != group.reps[i]);

            // Group closure: the sum of two representatives, reduced mod
            // Z^2, is again a representative.
            const auto reps = rep_set(group.reps);
            for (const TorsionPoint& p : group.reps) {
                for (const TorsionPoint& q : group.reps) {
                    const TorsionPoint s = {(p[0] + q[0]).mod1(), (p[1] + q[1]).mod1()};
                    CHECK(reps.count({{s[0].num(), s[0].den()}, {s[1].num(), s[1].den()}}) == 1);
                }
            }

            // Independent congruence scan agrees as a set.
            CHECK(rep_set(oracles::torsion_by_scan(gamma)) == reps);
        }
    }
}

TEST_CASE("fractions reduce and compare exactly") {
    CHECK(Frac{2, 4} == Frac{1, 2});
    CHECK(Frac{-1, 3}.mod1() == Frac{2, 3});
    CHECK(Frac{7, 3}.mod1() == Frac{1, 3});
    CHECK(Frac{3, -6} == Frac{-1, 2});
    CHECK(Frac{1, 3} < Frac{1, 2});
    CHECK((Frac{1, 6} + Frac{1, 3}) == Frac{1, 2});
    CHECK((3 * Frac{1, 6}) == Frac{1, 2});
    CHECK(render(Frac{}) == "0/1");
    CHECK(render(Frac{2, 3}) == "2/3");
    CHECK_THROWS_AS(Frac(1, 0), std::domain_error);
}
