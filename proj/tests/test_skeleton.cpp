#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skb/skeleton.hpp"
#include "test_support.hpp"

using namespace skb;
using skb::testing::R;

TEST_CASE("pairing table: all nine vertex products") {
    for (long k = 0; k < 3; ++k) {
        CHECK(pairing(triangle_vertex(k), dual_vertex(k)) == 1);
        CHECK(pairing(triangle_vertex(k + 1), dual_vertex(k)) == 1);
        CHECK(pairing(triangle_vertex(k), dual_vertex(k - 1)) == 1);
        CHECK(pairing(triangle_vertex(k), dual_vertex(k + 1)) == -2);
    }
    CHECK(pairing(LatticeVec{0, 0}, dual_vertex(1)) == 0);
}

TEST_CASE("vertex canonicalisation") {
    SkeletonPoint end_of_edge(2, 1);
    SkeletonPoint start_of_next(0, 0);
    CHECK(end_of_edge == start_of_next);
    CHECK(end_of_edge.edge() == 0);
    CHECK(end_of_edge.cover() == 0);
}

TEST_CASE("cover maps are mutually inverse") {
    CHECK(cover_to_edge(Rat(4)) == SkeletonPoint(1, 0));
    CHECK(cover_to_edge(R("3/2")) == SkeletonPoint(1, R("1/2")));
    CHECK(edge_to_cover(SkeletonPoint(2, 1)) == 0);
    for (int num = -20; num <= 20; ++num) {
        Rat t(num, 7);
        SkeletonPoint n = cover_to_edge(t);
        CHECK(rat_mod(t - edge_to_cover(n), 3) == 0);
        CHECK(cover_to_edge(edge_to_cover(n)) == n);
    }
}

TEST_CASE("chart values at vertices and midpoints") {
    CHECK(chart_phi(0, SkeletonPoint(0, 0)) == 0);
    CHECK(chart_phi(0, SkeletonPoint(0, R("1/2"))) == R("1/2"));
    CHECK(chart_phi(1, SkeletonPoint(1, 1)) == 2);  // closure value at n_2
    CHECK_THROWS_AS(chart_phi(0, SkeletonPoint(1, R("1/2"))), std::domain_error);
    CHECK_THROWS_AS(chart_phi(0, SkeletonPoint(2, 0)), std::domain_error);  // n_2 itself
}

TEST_CASE("charts agree on overlaps, with the period-3 shift between 2 and 0") {
    for (int num = 1; num < 7; ++num) {
        Rat r(num, 7);
        // edge 0 lies in the charts around n_0 and n_1
        CHECK(chart_phi(0, SkeletonPoint(0, r)) == chart_phi(1, SkeletonPoint(0, r)));
        CHECK(chart_phi(1, SkeletonPoint(1, r)) == chart_phi(2, SkeletonPoint(1, r)));
        CHECK(chart_phi(2, SkeletonPoint(2, r)) == chart_phi(0, SkeletonPoint(2, r)) + 3);
        // each chart agrees with the cover coordinate up to the deck shift
        CHECK(rat_mod(chart_phi(0, SkeletonPoint(0, r)) - Rat(num, 7), 3) == 0);
    }
}

TEST_CASE("polytope points: vertex identification and cover coordinate") {
    PolytopePoint m0_on_edge0(0, 5, 0);
    PolytopePoint m0_on_edge2(2, 0, 5);
    CHECK(m0_on_edge0 == m0_on_edge2);
    CHECK(m0_on_edge2.edge() == 0);

    PolytopePoint mid(0, 1, 1);
    CHECK(mid.cover() == R("3/2"));
    PolytopePoint same_mid(0, 2, 2);
    CHECK(mid == same_mid);

    CHECK(PolytopePoint(1, 2, 1).cover() == 4);
    CHECK_THROWS_AS(PolytopePoint(0, 0, 0), std::invalid_argument);
}
