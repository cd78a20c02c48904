#pragma once

#include "skb/rational.hpp"
#include "skb/series.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace skb::testing {

inline Rat R(const char* text) {
    auto r = parse_rational(text);
    if (!r)
        throw std::invalid_argument(std::string("bad rational literal: ") + text);
    return *r;
}

inline TruncatedSeries make_series(int trunc, std::initializer_list<std::pair<Exp, Rat>> terms) {
    TruncatedSeries s(trunc);
    for (const auto& [e, c] : terms)
        s.add_term(e, c);
    return s;
}

}  // namespace skb::testing
