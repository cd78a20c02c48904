#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace skb {

// Expression templates stay off: the formula-heavy call sites alias inputs
// and outputs freely, which the et_on rational adaptor of this boost release
// does not survive.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Floor of an exact rational.
Int rat_floor(const Rat& x);

/// Fractional part x - floor(x), in [0,1).
Rat rat_frac(const Rat& x);

/// Reduce x modulo a positive period into [0, period).
Rat rat_mod(const Rat& x, const Rat& period);

/// Canonical rendering: lowest terms, "p/q", integers without the "/1".
std::string rat_string(const Rat& x);

/// Parses "p" or "p/q" with an optional leading '-'. Nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

Int binomial(long n, long k);

}  // namespace skb
