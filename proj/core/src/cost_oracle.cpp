#include "skb/cost_oracle.hpp"

#include "skb/cost.hpp"
#include "skb/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace skb {

namespace {

long ceil_abs(const Rat& x) {
    Rat a = x < 0 ? Rat(-x) : x;
    return static_cast<long>(rat_floor(a)) + (denominator(a) == 1 ? 0 : 1);
}

// Supremum of a concave quadratic-in-k objective over k in [-W, W]. The scan
// stops after the first strict descent (concavity), and the window
// certificate requires the objective to sit strictly below the maximum at
// both ends.
template <typename F>
Rat certified_orbit_sup(long window, F&& objective, const char* what) {
    Rat best = objective(-window);
    for (long k = -window + 1; k <= window; ++k) {
        Rat v = objective(k);
        if (v > best)
            best = v;
        else if (v < best)
            break;  // concave in k: once strictly below the peak it stays below
    }
    if (!(objective(-window) < best && objective(window) < best))
        throw CertificationError(std::string(what) +
                                 ": orbit window does not certify the supremum");
    return best;
}

}  // namespace

Rat phi0_bruteforce(const Rat& t) {
    long window = 10 + ceil_abs(t) + 2;
    // line family 3kt - 1 - 3k(k-1)/2 = -1 + k(3t + 3/2) - (3/2)k^2
    Rat linear = 3 * t + Rat(3, 2);
    Rat quad(-3, 2);
    return certified_orbit_sup(
        window,
        [&](long k) {
            Rat kk(k);
            return Rat(-1) + kk * linear + kk * kk * quad;
        },
        "phi0_bruteforce");
}

Rat bracket_bruteforce(const Rat& t, const Rat& tv) {
    Rat reach = (tv < 0 ? Rat(-tv) : tv) / 9 + (t < 0 ? Rat(-t) : t) / 3;
    long window = 10 + ceil_abs(reach) + 2;
    // germ-orbit terms tv t + 3k tv - 9k t - 18k - 27k(k-1)/2, collected in k
    Rat constant = tv * t;
    Rat linear = 3 * tv - 9 * t - 18 + Rat(27, 2);
    Rat quad(-27, 2);
    return certified_orbit_sup(
        window,
        [&](long k) {
            Rat kk(k);
            return constant + kk * linear + kk * kk * quad;
        },
        "bracket_bruteforce");
}

Rat legendre_star_bruteforce(const Rat& tv) {
    auto h = [&](const Rat& t) { return bracket_bruteforce(t, tv) - phi0_bruteforce(t); };

    // h is 3-periodic (both terms are equivariant sections of the same
    // bundle), so the supremum over the line is the supremum over [0,3].
    // There h is piecewise affine with breakpoints only at the integers
    // (phi0 orbit switch) and at the translate of (tv+3)/3 (pairing orbit
    // switch); the candidate set holds all of them plus a coarse grid.
    Rat switch_point = rat_mod((tv + 3) / 3, 3);
    std::set<Rat> candidates{switch_point};
    for (long i = 0; i <= 12; ++i)
        candidates.insert(Rat(i, 4));

    for (const Rat& t : {Rat(0), Rat(1, 2), switch_point})
        if (h(t) != h(t + 3) || h(t) != h(t - 3))
            throw CertificationError("legendre_star_bruteforce: periodicity check failed");

    // Between consecutive candidates neither orbit switches, so h must be
    // affine; the midpoint identity certifies that no breakpoint was missed,
    // and the maximum of a piecewise affine function over a period is then
    // the maximum over the candidates.
    std::vector<Rat> period(candidates.begin(), candidates.end());
    std::vector<Rat> values;
    values.reserve(period.size());
    for (const Rat& t : period)
        values.push_back(h(t));
    Rat best = values.front();
    for (std::size_t i = 0; i + 1 < period.size(); ++i) {
        Rat mid = h((period[i] + period[i + 1]) / 2);
        if (2 * mid != values[i] + values[i + 1])
            throw CertificationError(
                "legendre_star_bruteforce: objective not affine between candidates");
        best = std::max({best, values[i], values[i + 1]});
    }
    return best;
}

}  // namespace skb
