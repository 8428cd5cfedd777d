#include <doctest.h>

#include "toroidal/chern.hpp"

using namespace toroidal;

TEST_CASE("second Chern number of a blow-up") {
    CHECK(blowup_c2(0, 1) == 1);
    CHECK(blowup_c2(24, 0) == 24);
    CHECK(blowup_c2(3, 5) == 8);
    CHECK_THROWS_AS(blowup_c2(0, -1), std::invalid_argument);
}

TEST_CASE("intrinsic invariants of the minimal-model classes") {
    CHECK(SurfaceClass::abelian().c2() == 0);
    CHECK(SurfaceClass::bielliptic().c2() == 0);
    CHECK(SurfaceClass::k3().c2() == 24);
    CHECK(SurfaceClass::enriques().c2() == 12);
    CHECK(SurfaceClass::projective_plane().c2() == 3);
    CHECK(SurfaceClass::hirzebruch().c2() == 4);
    for (Int g = 0; g <= 6; ++g)
        CHECK(SurfaceClass::ruled_over_genus(g).c2() == 4 - 4 * g);
    for (Int d = 0; d <= 6; ++d)
        CHECK(SurfaceClass::minimal_kodaira_one(d).c2() == 12 * d);

    CHECK(SurfaceClass::abelian().k_squared() == 0);
    CHECK(SurfaceClass::bielliptic().k_squared() == 0);
    CHECK(SurfaceClass::k3().k_squared() == 0);
    CHECK(SurfaceClass::enriques().k_squared() == 0);
    CHECK(SurfaceClass::minimal_kodaira_one(3).k_squared() == 0);
    CHECK(SurfaceClass::projective_plane().k_squared() == 9);
    CHECK(SurfaceClass::hirzebruch().k_squared() == 8);
    CHECK(SurfaceClass::ruled_over_genus(1).k_squared() == 0);
    CHECK(SurfaceClass::ruled_over_genus(3).k_squared() == -16);
}

TEST_CASE("logarithmic Chern numbers") {
    {
        const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 1, {-1, -1, -1, -1}});
        CHECK(lc.c1bar_sq == 3);
        CHECK(lc.c2bar == 1);
    }
    {
        const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 1, {-4}});
        CHECK(lc.c1bar_sq == 3);
        CHECK(lc.c2bar == 1);
    }
    {
        const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 0, {}});
        CHECK(lc.c1bar_sq == 0);
        CHECK(lc.c2bar == 0);
    }

    CHECK_THROWS_AS(LogPair(SurfaceClass::abelian(), 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(LogPair(SurfaceClass::abelian(), 1, {-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LogPair(SurfaceClass::abelian(), -1, {}), std::invalid_argument);

    // One blow-up of an abelian base: c1bar^2 = -1 + sum(-D_i^2), c2bar = 1.
    for (Int a = -6; a <= -1; ++a) {
        for (Int b = -6; b <= -1; ++b) {
            const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 1, {a, b}});
            CHECK(lc.c2bar == 1);
            CHECK(lc.c1bar_sq == -1 - a - b);
        }
    }
}

TEST_CASE("Noether filter") {
    CHECK_FALSE(noether_filter(1, 1));
    CHECK_FALSE(noether_filter(2, 1));
    CHECK(noether_filter(0, 12));
    CHECK(noether_filter(9, 3));     // the control values 3*c2 = c1^2, c2 = 3
    CHECK(noether_filter(-1, 1));    // blown-up abelian survivor
    CHECK(noether_filter(0, 0));

    for (Int c1 = -30; c1 <= 30; ++c1)
        for (Int c2 = -30; c2 <= 30; ++c2)
            CHECK(noether_filter(c1, c2) == noether_filter(c1 + 12, c2));
}

TEST_CASE("proportionality equality") {
    CHECK(bmy_equality(3, 1));
    CHECK_FALSE(bmy_equality(2, 1));
    CHECK(bmy_equality(0, 0));
    CHECK(bmy_equality(9, 3));
}

TEST_CASE("one-blow-up abelian pairs saturate the equality iff the boundary sums to -4") {
    // Exhaust boundary lists with entries in [-6, -1] and length <= 6, up
    // to ordering; multiplicity vectors are enough since only sums matter.
    std::vector<std::vector<Int>> stack = {{}};
    while (!stack.empty()) {
        const std::vector<Int> boundary = stack.back();
        stack.pop_back();
        if (!boundary.empty()) {
            const LogChern lc = log_chern_numbers({SurfaceClass::abelian(), 1, boundary});
            Int sum = 0;
            for (Int d : boundary) sum -= d;
            CHECK(bmy_equality(lc.c1bar_sq, lc.c2bar) == (sum == 4));
        }
        if (boundary.size() < 6) {
            const Int start = boundary.empty() ? -6 : boundary.back();
            for (Int next = start; next <= -1; ++next) {
                std::vector<Int> extended = boundary;
                extended.push_back(next);
                stack.push_back(std::move(extended));
            }
        }
    }
}
