#include "skb/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skb {

namespace {

Rat scaled_cost(const Rat& t, const Rat& tv, int degree) {
    return cost(t, tv).value * Rat(degree, 3);
}

}  // namespace

PLFunction expected_profile(const PolytopePoint& m, int edge, int degree) {
    if (m.a() + m.b() != degree)
        throw std::invalid_argument("expected_profile: weights do not match the degree");
    const Rat tv = m.cover();
    const Rat e(edge % 3 < 0 ? edge % 3 + 3 : edge % 3);

    // On the open edge only the orbit floor m = floor((tv-3t)/9 + 1/3) can
    // jump; it does so where t = (tv+3)/3 modulo 3.
    std::vector<Rat> bp{Rat(0)};
    Rat interior = rat_mod((tv + 3) / 3 - e, 3);
    if (interior > 0 && interior < 1)
        bp.push_back(interior);
    bp.push_back(Rat(1));

    std::vector<Rat> vals;
    vals.reserve(bp.size());
    for (const Rat& r : bp)
        vals.push_back(scaled_cost(e + r, tv, degree));

    // The cost is affine between consecutive breakpoints; check one interior
    // sample per segment so a missed jump cannot pass silently.
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        Rat mid = (bp[i] + bp[i + 1]) / 2;
        if (2 * scaled_cost(e + mid, tv, degree) != vals[i] + vals[i + 1])
            throw std::logic_error("expected_profile: cost not affine between breakpoints");
    }
    return PLFunction(std::move(bp), std::move(vals));
}

std::set<long> slope_set_formula(int k, int s) {
    if (s < 1 || s > k)
        throw std::invalid_argument("slope_set_formula: need 1 <= s <= k");
    std::set<long> out;
    for (long j = -k; j <= k; ++j)
        out.insert(j);
    for (long j = k + 1; j <= 2 * k - s; ++j)
        out.insert(j);
    for (long j = k + 1; j <= k + s - 1; ++j)
        out.insert(-j);
    return out;
}

namespace {

// Locates the first merged-breakpoint subinterval on which two PL functions
// disagree and reports exact witnesses at its midpoint.
Counterexample profile_counterexample(const PolytopePoint& m, int edge, const PLFunction& expected,
                                      const PLFunction& actual) {
    std::vector<Rat> merged = expected.breakpoints();
    merged.insert(merged.end(), actual.breakpoints().begin(), actual.breakpoints().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    Counterexample ce;
    ce.m = m;
    ce.edge = edge;
    ce.what = "valuation profile differs from the cost prediction";
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        Rat mid = (merged[i] + merged[i + 1]) / 2;
        if (expected(merged[i]) != actual(merged[i]) || expected(mid) != actual(mid)) {
            ce.r_lo = merged[i];
            ce.r_hi = merged[i + 1];
            ce.expected = rat_string(expected(mid)) + " at r = " + rat_string(mid);
            ce.actual = rat_string(actual(mid)) + " at r = " + rat_string(mid);
            return ce;
        }
    }
    // Difference only at r = 1 (profiles are continuous, so this is the
    // remaining possibility).
    ce.r_lo = merged[merged.size() - 2];
    ce.r_hi = 1;
    ce.expected = rat_string(expected(Rat(1))) + " at r = 1";
    ce.actual = rat_string(actual(Rat(1))) + " at r = 1";
    return ce;
}

bool leading_monomial_ok(const Section& s, const PolytopePoint& m, int degree) {
    const Section sigma = monomial_section(m, degree);
    const Monomial& lead = sigma.monomials().front();
    bool seen = false;
    for (const auto& mono : s.monomials()) {
        if (mono.t == 0) {
            if (seen || mono.x != lead.x || mono.coeff != 1)
                return false;
            seen = true;
        }
    }
    return seen;
}

}  // namespace

Certificate verify_theorem(const BasisDescriptor& basis, VerifyOptions options) {
    const int d = basis.degree;
    if (d < 1 || static_cast<int>(basis.entries.size()) != 3 * d)
        throw std::invalid_argument("verify_theorem: descriptor must hold 3d sections");
    const int trunc = default_trunc_degree(d, options.margin);

    Certificate cert;
    cert.degree = d;
    cert.leading_ok = true;
    cert.equalities_ok = true;

    for (const auto& [m, s] : basis.entries) {
        SectionCheck check;
        check.m = m;
        check.leading_ok = leading_monomial_ok(s, m, d);
        if (!check.leading_ok) {
            cert.leading_ok = false;
            Counterexample ce;
            ce.m = m;
            ce.edge = -1;
            ce.what = "section is not the monomial plus t-divisible rest";
            ce.expected = section_to_json(monomial_section(m, d));
            ce.actual = "t-free part differs";
            cert.counterexamples.push_back(std::move(ce));
        }
        for (int edge = 0; edge < 3; ++edge) {
            EdgeCheck ec;
            try {
                ec.profile = certified_valuation_profile(s, edge, trunc);
            } catch (const CertificationError& e) {
                throw CertificationError(
                    "section (edge " + std::to_string(m.edge()) + ", a " + std::to_string(m.a()) +
                        ", b " + std::to_string(m.b()) + ") on skeleton edge " +
                        std::to_string(edge) + ": " + e.what(),
                    e.suggested_margin());
            }
            ec.expected = expected_profile(m, edge, d);
            ec.equal = (ec.profile.pl == ec.expected);
            if (!ec.equal) {
                cert.equalities_ok = false;
                cert.counterexamples.push_back(
                    profile_counterexample(m, edge, ec.expected, ec.profile.pl));
            }
            check.edges[edge] = std::move(ec);
        }
        cert.sections.push_back(std::move(check));
    }

    // Slope multisets: one midpoint sample per generic subinterval.
    cert.slopes_ok = true;
    for (int edge = 0; edge < 3; ++edge) {
        cert.slope_report[edge].resize(d);
        for (int s = 1; s <= d; ++s) {
            Rat r(2 * s - 1, 2 * d);
            std::vector<Rat> slopes;
            slopes.reserve(cert.sections.size());
            for (const auto& check : cert.sections)
                slopes.push_back(check.edges[edge].profile.pl.slope_right(r));
            std::sort(slopes.begin(), slopes.end());
            bool distinct = std::adjacent_find(slopes.begin(), slopes.end()) == slopes.end();

            std::set<long> expected_set = slope_set_formula(d, s);
            std::set<long> got;
            bool integral = true;
            for (const Rat& sl : slopes) {
                if (denominator(sl) != 1) {
                    integral = false;
                    break;
                }
                got.insert(static_cast<long>(numerator(sl)));
            }
            if (!distinct || !integral || got != expected_set) {
                cert.slopes_ok = false;
                Counterexample ce;
                ce.m = basis.entries.front().first;
                ce.edge = edge;
                ce.r_lo = Rat(s - 1, d);
                ce.r_hi = Rat(s, d);
                ce.what = "slope multiset on a generic subinterval is off";
                std::string exp_str, act_str;
                for (long v : expected_set)
                    exp_str += std::to_string(v) + " ";
                for (const Rat& sl : slopes)
                    act_str += rat_string(sl) + " ";
                ce.expected = exp_str;
                ce.actual = act_str;
                cert.counterexamples.push_back(std::move(ce));
            }
            cert.slope_report[edge][s - 1] = std::move(slopes);
        }
    }

    cert.independence_ok = cert.equalities_ok && cert.slopes_ok;
    return cert;
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["degree"] = cert.degree;
    j["leading_ok"] = cert.leading_ok;
    j["equalities_ok"] = cert.equalities_ok;
    j["slopes_ok"] = cert.slopes_ok;
    j["independence_ok"] = cert.independence_ok;

    j["sections"] = nlohmann::json::array();
    for (const auto& check : cert.sections) {
        nlohmann::json js;
        js["m"] = {{"edge", check.m.edge()}, {"a", check.m.a()}, {"b", check.m.b()}};
        js["leading_ok"] = check.leading_ok;
        js["edges"] = nlohmann::json::array();
        for (const auto& ec : check.edges) {
            nlohmann::json je;
            je["edge"] = ec.profile.edge;
            je["route"] = route_name(ec.profile.route);
            je["equal"] = ec.equal;
            auto dump_pl = [](const PLFunction& pl) {
                nlohmann::json out;
                out["breakpoints"] = nlohmann::json::array();
                out["values"] = nlohmann::json::array();
                out["slopes"] = nlohmann::json::array();
                for (const Rat& r : pl.breakpoints())
                    out["breakpoints"].push_back(rat_string(r));
                for (const Rat& v : pl.values())
                    out["values"].push_back(rat_string(v));
                for (const Rat& s : pl.slopes())
                    out["slopes"].push_back(rat_string(s));
                return out;
            };
            je["profile"] = dump_pl(ec.profile.pl);
            je["expected"] = dump_pl(ec.expected);
            js["edges"].push_back(je);
        }
        j["sections"].push_back(js);
    }

    j["slope_report"] = nlohmann::json::array();
    for (int edge = 0; edge < 3; ++edge) {
        nlohmann::json per_edge = nlohmann::json::array();
        for (const auto& slopes : cert.slope_report[edge]) {
            nlohmann::json row = nlohmann::json::array();
            for (const Rat& s : slopes)
                row.push_back(rat_string(s));
            per_edge.push_back(row);
        }
        j["slope_report"].push_back(per_edge);
    }

    j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : cert.counterexamples) {
        nlohmann::json jc;
        jc["m"] = {{"edge", ce.m.edge()}, {"a", ce.m.a()}, {"b", ce.m.b()}};
        jc["edge"] = ce.edge;
        jc["r_lo"] = rat_string(ce.r_lo);
        jc["r_hi"] = rat_string(ce.r_hi);
        jc["what"] = ce.what;
        jc["expected"] = ce.expected;
        jc["actual"] = ce.actual;
        j["counterexamples"].push_back(jc);
    }
    return j.dump(2);
}

BasisDescriptor perturb_basis(const BasisDescriptor& basis, const std::vector<long>& B) {
    const std::size_t n = basis.entries.size();
    if (B.size() != n * n)
        throw std::invalid_argument("perturb_basis: matrix size must be (3d)^2");
    BasisDescriptor out;
    out.degree = basis.degree;
    for (std::size_t row = 0; row < n; ++row) {
        Section tilde = basis.entries[row].second;
        for (std::size_t col = 0; col < n; ++col) {
            long c = B[row * n + col];
            if (c != 0)
                tilde = tilde + basis.entries[col].second.times_t(1).scaled(c);
        }
        out.entries.emplace_back(basis.entries[row].first, std::move(tilde));
    }
    return out;
}

bool perturbation_invariance(const BasisDescriptor& basis, const std::vector<long>& B,
                             VerifyOptions options) {
    BasisDescriptor perturbed = perturb_basis(basis, B);
    const int base_trunc = default_trunc_degree(basis.degree, options.margin);
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
        for (int edge = 0; edge < 3; ++edge) {
            ValuationProfile original =
                certified_valuation_profile(basis.entries[i].second, edge, base_trunc);
            ValuationProfile tilde{edge, PLFunction::constant(0), CertificateRoute::single_vertex};
            bool certified = false;
            for (int extra : {0, 9, 18, 36}) {  // perturbed hulls can be longer
                try {
                    tilde = certified_valuation_profile(perturbed.entries[i].second, edge,
                                                        base_trunc + extra);
                    certified = true;
                    break;
                } catch (const CertificationError&) {
                    if (extra == 36)
                        throw;
                }
            }
            if (!certified || !(tilde.pl == original.pl))
                return false;
        }
    }
    return true;
}

}  // namespace skb
