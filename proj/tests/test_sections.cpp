#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skb/basis.hpp"
#include "skb/section.hpp"
#include "test_support.hpp"

using namespace skb;
using skb::testing::R;
using skb::testing::make_series;

namespace {

Section s11() {
    return Section(2, {Monomial{{0, 1, 1}, 0, 1}, Monomial{{2, 0, 0}, 1, -1}});
}

Rat rat_pow(Rat base, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

}  // namespace

TEST_CASE("chart expansion: S(1,1) on its own edge") {
    auto series = chart_expand(s11(), 1, 8);
    CHECK(series == make_series(8, {{{1, 4}, 1},
                                    {{4, 1}, 1},
                                    {{7, 1}, -1},
                                    {{4, 4}, -2},
                                    {{1, 7}, -1}}));
}

TEST_CASE("chart expansion: bare monomial and the far chart") {
    auto x1 = Section::monomial(1, {0, 1, 0}, 0, 1);
    CHECK(chart_expand(x1, 1, 4) == make_series(4, {{{1, 0}, 1}}));

    // S(1,1)/x2^2 = eta (1+eta^3)/(1+xi^3+eta^3), truncated at 6
    CHECK(chart_expand(s11(), 0, 6) == make_series(6, {{{0, 1}, 1}, {{3, 1}, -1}}));
}

TEST_CASE("support floor") {
    CHECK(support_floor(s11(), 1) == Exp{1, 1});
    CHECK(support_floor(Section::monomial(5, {0, 2, 3}, 0, 1), 1) == Exp{2, 3});
    // t^5 x0^4 x1, the correction monomial shape for (3,2)
    CHECK(support_floor(Section::monomial(5, {4, 1, 0}, 5, 1), 1) == Exp{6, 5});
}

TEST_CASE("coefficient extraction") {
    CHECK(coefficient_at(s11(), 1, 4, 1) == 1);
    CHECK(coefficient_at(s11(), 1, 1, 1) == 0);
    CHECK(coefficient_at(s11(), 1, 4, 4) == -2);
}

TEST_CASE("certified profile on the peak edge") {
    auto profile = certified_valuation_profile(s11(), 1, default_trunc_degree(2));
    CHECK(profile.route == CertificateRoute::componentwise_domination);
    CHECK(profile.pl.breakpoints() == std::vector<Rat>{0, R("1/2"), 1});
    CHECK(profile.pl.values() == std::vector<Rat>{1, R("5/2"), 1});
}

TEST_CASE("certified profile off the peak is a single certified line") {
    for (int d : {1, 2, 5}) {
        auto xd = Section::monomial(d, {0, d, 0}, 0, 1);
        auto profile = certified_valuation_profile(xd, 1, default_trunc_degree(d));
        CHECK(profile.route == CertificateRoute::single_vertex);
        CHECK(profile.pl == PLFunction::line(d, 0));
    }
    SectionBuilder builder;
    auto profile = certified_valuation_profile(builder.section(2, 1), 0, default_trunc_degree(3));
    CHECK(profile.route == CertificateRoute::single_vertex);
    CHECK(profile.pl == PLFunction::line(0, 2));
}

TEST_CASE("too small a truncation trips the certificate, never a wrong answer") {
    for (int trunc : {5, 6, 7}) {
        CHECK_THROWS_AS(certified_valuation_profile(s11(), 1, trunc), CertificationError);
    }
    try {
        certified_valuation_profile(s11(), 1, 6);
    } catch (const CertificationError& e) {
        CHECK(e.suggested_margin() == 2);  // hull corners need 4+4
    }
    CHECK_NOTHROW(certified_valuation_profile(s11(), 1, 8));
}

TEST_CASE("profiles of one section agree at shared vertices") {
    SectionBuilder builder;
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}, {4, 1}}) {
        const Section& s = builder.section(a, b);
        int trunc = default_trunc_degree(a + b);
        auto p0 = certified_valuation_profile(s, 0, trunc);
        auto p1 = certified_valuation_profile(s, 1, trunc);
        auto p2 = certified_valuation_profile(s, 2, trunc);
        CHECK(p0.pl(Rat(1)) == p1.pl(Rat(0)));
        CHECK(p1.pl(Rat(1)) == p2.pl(Rat(0)));
        CHECK(p2.pl(Rat(1)) == p0.pl(Rat(0)));
    }
}

TEST_CASE("divisibility and cube-grid support of the own-edge expansion") {
    SectionBuilder builder;
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 2}, {3, 1}}) {
        auto series = chart_expand(builder.section(a, b), 1, default_trunc_degree(a + b));
        for (const auto& [e, c] : series.terms()) {
            CHECK(e.p >= a);
            CHECK(e.q >= b);
            CHECK((e.p - a) % 3 == 0);
            CHECK((e.q - b) % 3 == 0);
        }
        // pure-term normalisation at both corners
        CHECK(series.coeff({a, b + 3 * a}) == 1);
        CHECK(series.coeff({a + 3 * b, b}) == 1);
    }
}

TEST_CASE("expansion matches direct evaluation within the certified tail bound") {
    // On the curve, t0 = u0 v0/(1 + u0^3 + v0^3); plugging the chart point
    // into the polynomial must match the truncated series up to the tail.
    // Tail bound per monomial (coeff c, t-power j, shift p0+q0), with
    // rho = max(|u0|, |v0|) <= 1/4: the omitted mass is at most
    // |c| rho^(p0+q0) 2^(j-1) (4 rho^3)^k0 / (1 - 4 rho^3),
    // k0 = max(0, ceil((D+1-p0-q0)/3)), since |u0^3 + v0^3|^k <= (2 rho^3)^k
    // and binom(j-1+k, k) <= 2^(j-1+k).
    SectionBuilder builder;
    const int D = 16;
    auto run = [&](const Section& s, int edge, Rat u0, Rat v0) {
        Rat t0 = u0 * v0 / (1 + rat_pow(u0, 3) + rat_pow(v0, 3));
        int i = edge, i1 = (edge + 1) % 3;
        Rat direct = 0;
        Rat rho = std::max(u0 < 0 ? Rat(-u0) : u0, v0 < 0 ? Rat(-v0) : v0);
        Rat tail = 0;
        Rat ratio = 4 * rat_pow(rho, 3);
        for (const auto& mono : s.monomials()) {
            direct += mono.coeff * rat_pow(u0, mono.x[i]) * rat_pow(v0, mono.x[i1]) *
                      rat_pow(t0, mono.t);
            int p0 = mono.x[i] + mono.t, q0 = mono.x[i1] + mono.t;
            int k0 = std::max(0, (D + 1 - p0 - q0 + 2) / 3);
            Rat c_abs = mono.coeff < 0 ? Rat(-mono.coeff) : mono.coeff;
            tail += c_abs * rat_pow(rho, p0 + q0) * rat_pow(Rat(2), std::max(0, mono.t - 1)) *
                    rat_pow(ratio, k0) / (1 - ratio);
        }
        Rat truncated = chart_expand(s, edge, D).evaluate(u0, v0);
        Rat err = direct - truncated;
        if (err < 0)
            err = -err;
        CHECK(err <= tail);
        return err;
    };
    run(s11(), 1, R("1/4"), R("1/4"));
    run(s11(), 0, R("1/4"), R("-1/5"));
    run(builder.section(2, 1), 1, R("-1/6"), R("1/7"));
    run(builder.section(3, 2), 1, R("1/5"), R("1/4"));
    run(builder.section(3, 2), 2, R("-1/4"), R("1/8"));
}

TEST_CASE("section JSON round trip") {
    SectionBuilder builder;
    const Section& s = builder.section(3, 2);
    CHECK(section_from_json(section_to_json(s)) == s);
    // serialisation is canonical, hence byte-stable
    CHECK(section_to_json(s) == section_to_json(section_from_json(section_to_json(s))));
}
