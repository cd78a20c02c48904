#include "skb/basis.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace skb {

std::vector<LambdaEntry> lambda_set(long a, long b) {
    if (!(a > b && b >= 1))
        throw std::invalid_argument("lambda_set: need a > b >= 1");
    std::vector<LambdaEntry> out;
    // For each m there is at most one admissible s: the constraint window
    // a - ((a-1)/b) m - 1 <= s < a - (a/b) m has width 1 - m/b < 1.
    for (long m = 1; m < b; ++m) {
        Rat lo = Rat(a) - Rat((a - 1) * m, b) - 1;  // inclusive
        Rat hi = Rat(a) - Rat(a * m, b);            // exclusive
        Int s_min = rat_floor(lo) + (denominator(lo) == 1 ? 0 : 1);
        Int s_max = rat_floor(hi) - (denominator(hi) == 1 ? 1 : 0);
        for (Int s = s_min; s <= s_max; ++s) {
            if (s <= 0)
                continue;
            long sl = static_cast<long>(s);
            out.push_back(LambdaEntry{m, sl, sl - m});
        }
    }
    // The enumeration order makes m strictly increasing; the membership
    // inequalities force s and d strictly decreasing. Keep that as a checked
    // postcondition rather than an assumption.
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (!(out[i].m < out[i + 1].m && out[i].s > out[i + 1].s && out[i].d > out[i + 1].d))
            throw std::logic_error("lambda_set: ordering coherence violated");
    return out;
}

long lambda_cardinality(long a, long b) {
    if (!(a > b && b >= 1))
        throw std::invalid_argument("lambda_cardinality: need a > b >= 1");
    long g1 = std::gcd(a - 1, b);
    long g2 = std::gcd(a, b);
    long num = b + g1 - g2 - 1;
    if (num % 2 != 0)
        throw std::logic_error("lambda_cardinality: count formula is not an integer");
    return num / 2;
}

SectionBuilder::SectionBuilder(Options options) : options_(std::move(options)) {}

const Section& SectionBuilder::section(long a, long b) {
    if (a < 0 || b < 0 || a + b == 0)
        throw std::invalid_argument("SectionBuilder: need a, b >= 0 with a + b > 0");
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find({a, b});
        if (it != cache_.end())
            return it->second;
    }
    // Built outside the lock; racing builders derive the identical section,
    // and emplace keeps whichever arrived first (map nodes are stable, so
    // handed-out references survive later insertions).
    Section built = build(a, b);
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::make_pair(a, b), std::move(built)).first->second;
}

Section SectionBuilder::r0(long a, long b) {
    if (a == b || a < 1 || b < 1)
        throw std::invalid_argument("SectionBuilder::r0: need a != b with a, b >= 1");
    if (a > b) {
        Section left = Section::monomial(1, {0, 1, 0}, 0, 1) * section(a - 1, b);
        Section right = Section::monomial(1, {1, 0, 0}, 2, 1) * section(a - 2, b + 1);
        return left - right;
    }
    Section left = Section::monomial(1, {0, 0, 1}, 0, 1) * section(a, b - 1);
    Section right = Section::monomial(1, {1, 0, 0}, 2, 1) * section(a + 1, b - 2);
    return left - right;
}

Section SectionBuilder::correction_term(long a, long b, const LambdaEntry& entry,
                                        const Rat& lambda) {
    auto entries = lambda_set(a, b);
    if (std::find(entries.begin(), entries.end(), entry) == entries.end())
        throw std::invalid_argument("correction_term: entry does not belong to the index set");
    const long m = entry.m, s = entry.s, d = entry.d;
    const int degree = static_cast<int>(a + b);
    if (3 * d > 2 * a) {
        Section lower = section(2 * d - a, a + b - d);
        Section shift = Section::monomial(static_cast<int>(a - d), {static_cast<int>(a - d), 0, 0},
                                          static_cast<int>(2 * a + 5 * m - 2 * s), 1);
        return (shift * lower).scaled(lambda);
    }
    if (3 * d >= a - b) {
        long e0 = 2 * a - 3 * d, e2 = 3 * d + b - a;
        return Section::monomial(degree, {static_cast<int>(e0), 0, static_cast<int>(e2)},
                                 static_cast<int>(a + 3 * m), lambda);
    }
    long e0 = 2 * b + 3 * d, e1 = a - b - 3 * d;
    if (e0 < 0)
        // First reached at (a,b) = (8,7), entry (6,1): the recipe asks for
        // x0^(6-b). No monomial has the required chart shift there, so the
        // construction cannot proceed for this index set.
        throw std::domain_error(
            "correction_term: recipe leaves the monomial cone at this entry");
    return Section::monomial(degree, {static_cast<int>(e0), static_cast<int>(e1), 0},
                             static_cast<int>(b + 3 * s), lambda);
}

std::vector<Rat> SectionBuilder::lambdas(long a, long b) const {
    std::lock_guard lock(mutex_);
    auto it = lambdas_.find({a, b});
    return it == lambdas_.end() ? std::vector<Rat>{} : it->second;
}

Section SectionBuilder::build(long a, long b) {
    // Pure powers on the axes and the diagonal.
    if (b == 0)
        return Section::monomial(static_cast<int>(a), {0, static_cast<int>(a), 0}, 0, 1);
    if (a == 0)
        return Section::monomial(static_cast<int>(b), {0, 0, static_cast<int>(b)}, 0, 1);
    if (a == b) {
        Section seed(2, {Monomial{{0, 1, 1}, 0, 1}, Monomial{{2, 0, 0}, 1, -1}});
        return seed.pow(static_cast<int>(a));
    }
    if (b > a)
        return section(b, a).swapped12();

    Section current = r0(a, b);
    const auto entries = lambda_set(a, b);
    std::vector<Rat> extracted;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const int p = static_cast<int>(a + 3 * e.m);
        const int q = static_cast<int>(b + 3 * e.s);
        Rat lambda = coefficient_at(current, 1, p, q);
        if (options_.lambda_tweak && options_.lambda_tweak->a == a && options_.lambda_tweak->b == b &&
            options_.lambda_tweak->step == static_cast<int>(i))
            lambda += options_.lambda_tweak->delta;
        if (denominator(lambda) != 1)
            std::cerr << "skb: warning: non-integer correction coefficient " << lambda << " at ("
                      << a << "," << b << ") step " << i << "\n";
        extracted.push_back(lambda);
        if (lambda != 0)
            current = current - correction_term(a, b, e, lambda);
    }
    {
        std::lock_guard lock(mutex_);
        lambdas_.emplace(std::make_pair(a, b), std::move(extracted));
    }

    // The corrected section must keep its two pure corner coefficients at 1;
    // the loop only moves mixed terms.
    if (!options_.lambda_tweak) {
        if (coefficient_at(current, 1, static_cast<int>(a), static_cast<int>(b + 3 * a)) != 1 ||
            coefficient_at(current, 1, static_cast<int>(a + 3 * b), static_cast<int>(b)) != 1)
            throw std::logic_error("SectionBuilder: pure corner coefficients disturbed");
    }
    return current;
}

const Section* BasisDescriptor::find(const PolytopePoint& m) const {
    for (const auto& [key, s] : entries)
        if (key == m)
            return &s;
    return nullptr;
}

Section monomial_section(const PolytopePoint& m, int degree) {
    if (m.a() + m.b() != degree)
        throw std::invalid_argument("monomial_section: weights do not match the degree");
    Section base = Section::monomial(degree, {0, static_cast<int>(m.a()), static_cast<int>(m.b())},
                                     0, 1);
    return base.cycled(m.edge());
}

BasisDescriptor build_basis(int degree, SectionBuilder& builder) {
    if (degree < 1)
        throw std::invalid_argument("build_basis: degree must be >= 1");
    BasisDescriptor out;
    out.degree = degree;
    for (int edge = 0; edge < 3; ++edge) {
        for (long a = degree; a >= 1; --a) {
            long b = degree - a;
            const Section& base = builder.section(a, b);
            out.entries.emplace_back(PolytopePoint(edge, a, b), base.cycled(edge));
        }
    }
    // A vertex is listed once, as (degree, 0) on its edge; the formula coming
    // from the adjacent edge must produce the identical section.
    for (int edge = 0; edge < 3; ++edge) {
        Section from_prev = builder.section(0, degree).cycled(edge == 0 ? 2 : edge - 1);
        const Section* stored = out.find(PolytopePoint(edge, degree, 0));
        if (stored == nullptr || !(*stored == from_prev))
            throw std::logic_error("build_basis: vertex sections disagree between edges");
    }
    return out;
}

BasisDescriptor build_basis(int degree) {
    SectionBuilder builder;
    return build_basis(degree, builder);
}

std::string basis_to_json(const BasisDescriptor& basis) {
    nlohmann::json j;
    j["degree"] = basis.degree;
    j["entries"] = nlohmann::json::array();
    for (const auto& [m, s] : basis.entries) {
        nlohmann::json e;
        e["m"] = {{"edge", m.edge()}, {"a", m.a()}, {"b", m.b()}};
        e["section"] = nlohmann::json::parse(section_to_json(s));
        j["entries"].push_back(e);
    }
    return j.dump(2);
}

BasisDescriptor basis_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BasisDescriptor out;
    out.degree = j.at("degree").get<int>();
    for (const auto& e : j.at("entries")) {
        PolytopePoint m(e.at("m").at("edge").get<int>(), e.at("m").at("a").get<long>(),
                        e.at("m").at("b").get<long>());
        out.entries.emplace_back(m, section_from_json(e.at("section").dump()));
    }
    return out;
}

}  // namespace skb
