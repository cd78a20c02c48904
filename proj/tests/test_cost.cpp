#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skb/cost.hpp"
#include "skb/cost_oracle.hpp"
#include "test_support.hpp"

using namespace skb;
using skb::testing::R;

TEST_CASE("deck action on the bundle") {
    CHECK(deck_action_bundle(1, {Rat(0), Rat(0)}) == std::pair<Rat, Rat>{Rat(-3), Rat(9)});
    CHECK(deck_action_bundle(0, {Rat(5), Rat(7)}) == std::pair<Rat, Rat>{Rat(5), Rat(7)});
    auto once = deck_action_bundle(1, {R("1/2"), R("1/3")});
    CHECK(deck_action_bundle(-1, once) == std::pair<Rat, Rat>{R("1/2"), R("1/3")});
}

TEST_CASE("deck action on germs") {
    CHECK(deck_action_germ(1, {Rat(0), Rat(0)}) == AffineGerm{Rat(-9), Rat(-18)});
    CHECK(deck_action_germ(0, {R("4/3"), Rat(11)}) == AffineGerm{R("4/3"), Rat(11)});
    // composing the generator twice by hand: (9,0) -> (0,9) -> (-9,-9)
    CHECK(deck_action_germ(2, {Rat(9), Rat(0)}) == AffineGerm{Rat(-9), Rat(-9)});
    CHECK(deck_action_germ(-3, deck_action_germ(3, {R("-2/5"), R("7/9")})) ==
          AffineGerm{R("-2/5"), R("7/9")});
}

TEST_CASE("phi0 closed form against the orbit supremum") {
    CHECK(phi0(Rat(0)) == -1);
    CHECK(phi0(R("1/2")) == R("1/2"));
    CHECK(phi0(Rat(1)) == 2);  // continuity across the floor jump
    for (int num = -42; num <= 42; ++num) {
        Rat t(num, 7);
        CHECK(phi0(t) == phi0_bruteforce(t));
    }
}

TEST_CASE("pairing bracket closed form against the orbit supremum") {
    CHECK(bracket(Rat(0), Rat(0)) == 0);
    CHECK(bracket(Rat(1), Rat(9)) == 9);
    for (int tn = -12; tn <= 12; tn += 5) {
        for (int vn = -36; vn <= 36; vn += 7) {
            Rat t(tn, 3), tv(vn, 4);
            CHECK(bracket(t, tv) == bracket_bruteforce(t, tv));
        }
    }
}

TEST_CASE("bracket tie: half-integral orbit parameter hits two maximisers") {
    // (t, tv) = (0, 6) puts (tv-3t)/9 - 1/6 at 1/2: orbit terms at k=0 and
    // k=1 coincide and both equal the closed form.
    Rat t(0), tv(6);
    CHECK(bracket_orbit_term(t, tv, 0) == bracket_orbit_term(t, tv, 1));
    CHECK(bracket(t, tv) == bracket_orbit_term(t, tv, 0));
}

TEST_CASE("legendre transform closed form against the certified brute force") {
    CHECK(legendre_star(Rat(0)) == 1);
    CHECK(legendre_star(Rat(3)) == 1);
    CHECK(legendre_star(R("3/2")) == legendre_star_bruteforce(R("3/2")));
    for (int num = -18; num <= 18; ++num) {
        Rat tv(num, 2);
        CHECK(legendre_star(tv) == legendre_star_bruteforce(tv));
    }
}

TEST_CASE("cost closed form: pinned values") {
    CHECK(cost(Rat(0), R("3/2")).value == 0);
    CHECK(cost(Rat(0), Rat(0)).value == 0);
    CHECK(cost(R("1/2"), Rat(3)).value == 0);
    auto c = cost(Rat(0), R("3/2"));
    CHECK(c.k == 0);
    CHECK(c.l == 0);
    CHECK(c.m == 0);
}

TEST_CASE("cost equals the definitional composition on a grid") {
    for (int tn = -18; tn <= 18; tn += 4) {
        for (int vn = -54; vn <= 54; vn += 9) {
            Rat t(tn, 3), tv(vn, 3);
            CHECK(cost(t, tv).value == -bracket(t, tv) + phi0(t) + legendre_star(tv));
        }
    }
    // vertex calibration: both triangles' vertices, composition exact
    for (int t0 : {0, 1, 2})
        for (int v0 : {0, 3, 6})
            CHECK(cost(Rat(t0), Rat(v0)).value ==
                  -bracket(Rat(t0), Rat(v0)) + phi0(Rat(t0)) + legendre_star(Rat(v0)));
}

TEST_CASE("cost is invariant under both deck translations") {
    for (int tn = -14; tn <= 14; ++tn) {
        for (int vn = -21; vn <= 21; vn += 2) {
            Rat t(tn, 7), tv(vn, 7);
            CHECK(cost(t - 3, tv).value == cost(t, tv).value);
            CHECK(cost(t, tv - 9).value == cost(t, tv).value);
        }
    }
}

TEST_CASE("cost is continuous across every floor breakpoint") {
    // Evaluate both one-sided branch formulas exactly at the breakpoint.
    auto branch = [](const Rat& t, const Rat& tv, Int k, Int l, Int m) {
        Rat kk(k), ll(l), mm(m);
        return 3 * (kk + 1) * t + ll * tv - (tv - 9 * mm) * (t + 3 * mm) -
               (3 * kk * (kk + 1) + 3 * ll * (ll + 1) + 9 * mm * (3 * mm - 1)) / 2;
    };
    // k jumps at integer t
    for (int t0 = -3; t0 <= 3; ++t0) {
        Rat t(t0), tv(5, 4);
        auto c = cost(t, tv);
        CHECK(branch(t, tv, c.k, c.l, c.m) == branch(t, tv, c.k - 1, c.l, c.m));
    }
    // l jumps at tv in 3Z
    for (int v0 = -9; v0 <= 9; v0 += 3) {
        Rat t(1, 5), tv(v0);
        auto c = cost(t, tv);
        CHECK(branch(t, tv, c.k, c.l, c.m) == branch(t, tv, c.k, c.l - 1, c.m));
    }
    // m jumps where (tv - 3t)/9 + 1/3 is an integer: fix t, solve tv
    for (int j = -2; j <= 2; ++j) {
        Rat t(1, 2);
        Rat tv = 9 * Rat(j) - 3 + 3 * t;
        auto c = cost(t, tv);
        CHECK((tv - 3 * t) / 9 + Rat(1, 3) == j);
        CHECK(branch(t, tv, c.k, c.l, c.m) == branch(t, tv, c.k, c.l, c.m - 1));
    }
}

TEST_CASE("four-interval slope law at fixed tv") {
    auto check_slopes = [](const Rat& tv, std::array<Rat, 4> expect) {
        auto law = cost_slopes_fixed_tv(tv);
        for (int i = 0; i < 4; ++i) {
            CHECK(law[i].slope == expect[i]);
            // finite differences of the closed form across each interval
            if (law[i].lo < law[i].hi) {
                Rat width = law[i].hi - law[i].lo;
                Rat lo = cost(law[i].lo, tv).value;
                Rat hi = cost(law[i].hi, tv).value;
                CHECK((hi - lo) / width == law[i].slope);
                // and at an interior sample, against the left endpoint
                Rat mid = law[i].lo + width / 3;
                CHECK((cost(mid, tv).value - lo) / (width / 3) == law[i].slope);
            }
        }
    };
    check_slopes(R("3/2"), {R("3/2"), R("9/2"), R("-9/2"), R("-3/2")});
    check_slopes(Rat(0), {Rat(3), Rat(6), Rat(-3), Rat(0)});
    check_slopes(Rat(3), {Rat(0), Rat(3), Rat(-6), Rat(-3)});
    CHECK(cost_slopes_fixed_tv(Rat(0))[2].lo == 1);  // third interval is [1,2]
    CHECK(cost_slopes_fixed_tv(Rat(3))[1].hi == 2);  // second interval is [1,2]
    CHECK_THROWS_AS(cost_slopes_fixed_tv(Rat(4)), std::domain_error);
}
