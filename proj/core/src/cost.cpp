#include "skb/cost.hpp"

#include <stdexcept>

namespace skb {

std::pair<Rat, Rat> deck_action_bundle(long power, std::pair<Rat, Rat> point) {
    auto& [t, a] = point;
    for (long i = 0; i < power; ++i) {
        a = a - 9 * t + 9;
        t = t - 3;
    }
    for (long i = 0; i > power; --i) {
        a = a + 9 * t + 18;
        t = t + 3;
    }
    return point;
}

AffineGerm deck_action_germ(long power, AffineGerm s) {
    for (long i = 0; i < power; ++i) {
        s.offset_b = s.offset_b + 3 * s.slope_tv - 18;
        s.slope_tv = s.slope_tv - 9;
    }
    for (long i = 0; i > power; --i) {
        s.offset_b = s.offset_b - 3 * s.slope_tv - 9;
        s.slope_tv = s.slope_tv + 9;
    }
    return s;
}

Rat phi0(const Rat& t) {
    Rat k(rat_floor(t));
    return 3 * (k + 1) * t - 1 - 3 * k * (k + 1) / 2;
}

Rat bracket_orbit_term(const Rat& t, const Rat& tv, const Int& k) {
    Rat kk(k);
    return tv * t + 3 * kk * tv - 9 * kk * t - 18 * kk - 27 * kk * (kk - 1) / 2;
}

Rat bracket(const Rat& t, const Rat& tv) {
    Rat m(rat_floor((tv - 3 * t) / 9 + Rat(1, 3)));
    return (tv - 9 * m) * (t + 3 * m) + 9 * m * (3 * m - 1) / 2;
}

Rat legendre_star(const Rat& tv) {
    Rat l(rat_floor(tv / 3));
    return l * tv + 1 - 3 * l * (l + 1) / 2;
}

CostBreakdown cost(const Rat& t, const Rat& tv) {
    CostBreakdown out;
    out.k = rat_floor(t);
    out.l = rat_floor(tv / 3);
    out.m = rat_floor((tv - 3 * t) / 9 + Rat(1, 3));
    Rat k(out.k), l(out.l), m(out.m);
    out.value = 3 * (k + 1) * t + l * tv - (tv - 9 * m) * (t + 3 * m) -
                (3 * k * (k + 1) + 3 * l * (l + 1) + 9 * m * (3 * m - 1)) / 2;
    return out;
}

std::array<SlopeInterval, 4> cost_slopes_fixed_tv(const Rat& tv) {
    if (tv < 0 || tv > 3)
        throw std::domain_error("cost_slopes_fixed_tv: tv must lie in [0,3]");
    Rat mid = 1 + tv / 3;
    return {SlopeInterval{0, 1, 3 - tv},
            SlopeInterval{1, mid, 6 - tv},
            SlopeInterval{mid, 2, -(tv + 3)},
            SlopeInterval{2, 3, -tv}};
}

}  // namespace skb
