#pragma once

#include "skb/rational.hpp"

namespace skb {

// Brute-force counterparts of the closed forms in cost.hpp, computed as
// certified suprema over the deck orbit. None of these call the closed-form
// floor expressions; they exist so that the closed forms can be checked
// against an independent route.
//
// Window certificate: each supremum over k ranges over [-W, W] with
// W = 10 + ceil(|tv|/9 + |t|/3) + 2, and the objective is required to be
// strictly smaller at both window ends than at the maximiser. A violated
// certificate throws CertificationError.

Rat phi0_bruteforce(const Rat& t);

Rat bracket_bruteforce(const Rat& t, const Rat& tv);

/// sup_t([t,tv] - phi0(t)), brute-forced. The objective is 3-periodic in t
/// (both terms are sections of the same bundle), so the supremum is attained
/// on [0,3]; it is piecewise linear there with breakpoints only at integers
/// and at the orbit-switch points t = (tv+3)/3 - 3j. The candidate set holds
/// all of these plus a step-1/12 grid on [-6,6]; affineness between
/// consecutive candidates and 3-periodicity are asserted, which makes the
/// candidate maximum the exact supremum.
Rat legendre_star_bruteforce(const Rat& tv);

}  // namespace skb
