#include "skb/section.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace skb {

namespace {

int mod3(int k) {
    int r = k % 3;
    return r < 0 ? r + 3 : r;
}

bool monomial_key_less(const Monomial& a, const Monomial& b) {
    return std::tie(a.t, a.x) < std::tie(b.t, b.x);
}

}  // namespace

Section::Section(int degree, std::vector<Monomial> monomials)
    : degree_(degree), monomials_(std::move(monomials)) {
    if (degree < 0)
        throw std::invalid_argument("Section: negative degree");
    std::sort(monomials_.begin(), monomials_.end(), monomial_key_less);
    std::vector<Monomial> merged;
    for (auto& m : monomials_) {
        if (m.x[0] < 0 || m.x[1] < 0 || m.x[2] < 0 || m.t < 0)
            throw std::invalid_argument("Section: negative exponent");
        if (m.x[0] + m.x[1] + m.x[2] != degree_)
            throw std::invalid_argument("Section: monomial breaks homogeneity");
        if (!merged.empty() && merged.back().x == m.x && merged.back().t == m.t)
            merged.back().coeff += m.coeff;
        else
            merged.push_back(m);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Monomial& m) { return m.coeff == 0; }),
                 merged.end());
    monomials_ = std::move(merged);
}

Section Section::monomial(int degree, std::array<int, 3> x, int t, const Rat& coeff) {
    return Section(degree, {Monomial{x, t, coeff}});
}

Section operator+(const Section& a, const Section& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("Section: degree mismatch in addition");
    std::vector<Monomial> all = a.monomials();
    all.insert(all.end(), b.monomials().begin(), b.monomials().end());
    return Section(a.degree(), std::move(all));
}

Section operator-(const Section& a, const Section& b) {
    return a + b.scaled(-1);
}

Section operator*(const Section& a, const Section& b) {
    std::vector<Monomial> out;
    out.reserve(a.monomials().size() * b.monomials().size());
    for (const auto& ma : a.monomials())
        for (const auto& mb : b.monomials())
            out.push_back(Monomial{{ma.x[0] + mb.x[0], ma.x[1] + mb.x[1], ma.x[2] + mb.x[2]},
                                   ma.t + mb.t, ma.coeff * mb.coeff});
    return Section(a.degree() + b.degree(), std::move(out));
}

Section Section::scaled(const Rat& c) const {
    std::vector<Monomial> out = monomials_;
    for (auto& m : out)
        m.coeff *= c;
    return Section(degree_, std::move(out));
}

Section Section::times_t(int power) const {
    if (power < 0)
        throw std::invalid_argument("Section: negative t power");
    std::vector<Monomial> out = monomials_;
    for (auto& m : out)
        m.t += power;
    return Section(degree_, std::move(out));
}

Section Section::pow(int exponent) const {
    if (exponent < 0)
        throw std::invalid_argument("Section: negative power");
    Section result = Section::monomial(0, {0, 0, 0}, 0, 1);
    for (int i = 0; i < exponent; ++i)
        result = result * *this;
    return result;
}

Section Section::cycled(int shift) const {
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (const auto& m : monomials_) {
        std::array<int, 3> x{};
        for (int i = 0; i < 3; ++i)
            x[mod3(i + shift)] = m.x[i];
        out.push_back(Monomial{x, m.t, m.coeff});
    }
    return Section(degree_, std::move(out));
}

Section Section::swapped12() const {
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (const auto& m : monomials_)
        out.push_back(Monomial{{m.x[0], m.x[2], m.x[1]}, m.t, m.coeff});
    return Section(degree_, std::move(out));
}

TruncatedSeries chart_expand(const Section& s, int edge, int trunc_degree) {
    const int i = mod3(edge);
    const int u_var = i, v_var = mod3(i + 1);

    TruncatedSeries cube(trunc_degree);  // u^3 + v^3
    cube.add_term({3, 0}, 1);
    cube.add_term({0, 3}, 1);
    const TruncatedSeries inv = geom_inverse(cube, trunc_degree);

    // Monomials share the factor (1+u^3+v^3)^{-j}; cache its powers.
    std::vector<TruncatedSeries> inv_pow{TruncatedSeries::one(trunc_degree)};

    TruncatedSeries out(trunc_degree);
    for (const auto& m : s.monomials()) {
        const int p0 = m.x[u_var] + m.t;
        const int q0 = m.x[v_var] + m.t;
        if (p0 + q0 > trunc_degree)
            continue;
        while (static_cast<int>(inv_pow.size()) <= m.t)
            inv_pow.push_back(series_mul(inv_pow.back(), inv));
        for (const auto& [e, c] : inv_pow[m.t].terms())
            out.add_term({p0 + e.p, q0 + e.q}, m.coeff * c);
    }
    return out;
}

Exp support_floor(const Section& s, int edge) {
    if (s.is_zero())
        throw std::domain_error("support_floor: zero section");
    const int i = mod3(edge);
    const int u_var = i, v_var = mod3(i + 1);
    int u_min = 0, v_min = 0;
    bool first = true;
    for (const auto& m : s.monomials()) {
        int p0 = m.x[u_var] + m.t;
        int q0 = m.x[v_var] + m.t;
        u_min = first ? p0 : std::min(u_min, p0);
        v_min = first ? q0 : std::min(v_min, q0);
        first = false;
    }
    return Exp{u_min, v_min};
}

Rat coefficient_at(const Section& s, int edge, int p, int q) {
    if (p < 0 || q < 0)
        return 0;
    return chart_expand(s, edge, p + q).coeff({p, q});
}

const char* route_name(CertificateRoute route) {
    switch (route) {
        case CertificateRoute::single_vertex:
            return "single-vertex";
        case CertificateRoute::componentwise_domination:
            return "componentwise-domination";
    }
    return "unknown";
}

ValuationProfile certified_valuation_profile(const Section& s, int edge, int trunc_degree) {
    if (s.is_zero())
        throw std::domain_error("certified_valuation_profile: zero section");
    const int i = mod3(edge);
    const Exp floor = support_floor(s, i);

    // Single-vertex route: if the floor corner itself carries a nonzero
    // coefficient, every term of the full expansion componentwise dominates
    // it, so the valuation is the line through the corner. The corner
    // coefficient is the sum over monomials whose shift is exactly the floor
    // (no other monomial can reach the corner: expansions only add exponents
    // from (3Z>=0)^2).
    const int u_var = i, v_var = mod3(i + 1);
    Rat corner = 0;
    for (const auto& m : s.monomials())
        if (m.x[u_var] + m.t == floor.p && m.x[v_var] + m.t == floor.q)
            corner += m.coeff;
    if (corner != 0)
        return ValuationProfile{i, hull_to_plfunction(LowerHull{{floor}}),
                                CertificateRoute::single_vertex};

    // Componentwise-domination route. Requirements on the retained hull:
    // its extreme vertices (p*,q*) and (p**,q**) must sit on the support
    // floor lines, and D must reach p** + q*. Then any omitted exponent
    // (p >= u_min, q >= v_min, p+q > D) componentwise dominates one of the
    // two extremes: q >= q* gives (p*,q*) since p >= u_min = p*; otherwise
    // q < q* forces p > D - q* >= p**, giving (p**,q**) since q >= v_min.
    TruncatedSeries expansion = chart_expand(s, i, trunc_degree);
    if (expansion.is_zero())
        throw CertificationError(
            "certified_valuation_profile: expansion vanishes to the truncation order", 0);
    LowerHull hull = lower_hull(expansion);
    const Exp first = hull.vertices.front();
    const Exp last = hull.vertices.back();
    if (first.p != floor.p || last.q != floor.q)
        throw CertificationError(
            "certified_valuation_profile: hull does not attain the support floor");
    if (trunc_degree < last.p + first.q)
        throw CertificationError(
            "certified_valuation_profile: truncation too small for the domination certificate",
            last.p + first.q - trunc_degree);
    return ValuationProfile{i, hull_to_plfunction(hull),
                            CertificateRoute::componentwise_domination};
}

int default_trunc_degree(int degree, int margin) {
    return 4 * degree + margin;
}

std::string section_to_json(const Section& s) {
    nlohmann::json j;
    j["degree"] = s.degree();
    j["monomials"] = nlohmann::json::array();
    for (const auto& m : s.monomials()) {
        nlohmann::json jm;
        jm["x"] = {m.x[0], m.x[1], m.x[2]};
        jm["t"] = m.t;
        jm["coeff"] = rat_string(m.coeff);
        j["monomials"].push_back(jm);
    }
    return j.dump(2);
}

Section section_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int degree = j.at("degree").get<int>();
    std::vector<Monomial> monomials;
    for (const auto& jm : j.at("monomials")) {
        Monomial m;
        m.x = {jm.at("x").at(0).get<int>(), jm.at("x").at(1).get<int>(),
               jm.at("x").at(2).get<int>()};
        m.t = jm.at("t").get<int>();
        auto coeff = parse_rational(jm.at("coeff").get<std::string>());
        if (!coeff)
            throw std::invalid_argument("section_from_json: malformed coefficient");
        m.coeff = *coeff;
        monomials.push_back(m);
    }
    return Section(degree, std::move(monomials));
}

}  // namespace skb
