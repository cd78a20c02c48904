#pragma once

#include "skb/rational.hpp"

#include <array>
#include <utility>

namespace skb {

/// Germ of an affine section of the dual bundle in the chart-0 trivialisation:
/// n |-> slope_tv * phi_0(n) + offset_b.
struct AffineGerm {
    Rat slope_tv;
    Rat offset_b;

    friend bool operator==(const AffineGerm&, const AffineGerm&) = default;
};

/// Closed-form cost value together with the floor quantities it is built from:
/// k = floor(t), l = floor(tv/3), m = floor((tv - 3t)/9 + 1/3).
struct CostBreakdown {
    Int k;
    Int l;
    Int m;
    Rat value;
};

/// Deck generator on the total space of the skeleton bundle,
/// (t, a) -> (t - 3, a - 9t + 9), composed `power` times (negative powers
/// apply the inverse).
std::pair<Rat, Rat> deck_action_bundle(long power, std::pair<Rat, Rat> point);

/// Deck generator on germs, (tv, b) -> (tv - 9, b + 3 tv - 18), composed
/// `power` times.
AffineGerm deck_action_germ(long power, AffineGerm s);

/// The convex section on the cover: 3(floor(t)+1) t - 1 - 3 floor(t)(floor(t)+1)/2.
/// Equals the supremum over the deck orbit of the line family
/// k |-> 3kt - 1 - 3k(k-1)/2.
Rat phi0(const Rat& t);

/// Scalar part of the canonical pairing [t, tv] relative to the zero germ:
/// (tv - 9m)(t + 3m) + 9m(3m - 1)/2 at m = floor((tv - 3t)/9 + 1/3).
Rat bracket(const Rat& t, const Rat& tv);

/// One deck-orbit line of the pairing supremum:
/// tv t + 3k tv - 9k t - 18k - 27 k(k-1)/2. Exposed so that oracles and the
/// closed form share one definition of the objective.
Rat bracket_orbit_term(const Rat& t, const Rat& tv, const Int& k);

/// Legendre transform of phi0: sup_t([t, tv] - phi0(t)),
/// in closed form l*tv + 1 - 3l(l+1)/2 with l = floor(tv/3).
Rat legendre_star(const Rat& tv);

/// The cost c(t, tv) = -[t, tv] + phi0(t) + legendre_star(tv), evaluated by
/// its closed form. First argument is the skeleton coordinate, second the
/// polytope coordinate; all call sites use this order.
CostBreakdown cost(const Rat& t, const Rat& tv);

struct SlopeInterval {
    Rat lo;
    Rat hi;
    Rat slope;
};

/// Slopes of x -> cost(x, tv) over one skeleton period, for tv in [0,3]:
/// intervals [0,1], [1,1+tv/3], [1+tv/3,2], [2,3] with slopes 3-tv, 6-tv,
/// -(tv+3), -tv. Intervals may be degenerate at tv = 0 or 3.
/// Throws std::domain_error for tv outside [0,3].
std::array<SlopeInterval, 4> cost_slopes_fixed_tv(const Rat& tv);

}  // namespace skb
