#pragma once

#include "skb/errors.hpp"
#include "skb/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace skb {

/// coeff * x0^x[0] x1^x[1] x2^x[2] * t^t, coeff nonzero.
struct Monomial {
    std::array<int, 3> x{0, 0, 0};
    int t = 0;
    Rat coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Polynomial in x0, x1, x2, t, homogeneous of a fixed degree in the x
/// variables, considered as a section on the Fermat pencil
/// x0 x1 x2 = t (x0^3 + x1^3 + x2^3). Immutable after construction;
/// monomials are kept in a canonical sorted order with duplicates merged
/// and zeros pruned.
class Section {
public:
    Section(int degree, std::vector<Monomial> monomials);

    static Section zero(int degree) { return Section(degree, {}); }
    static Section monomial(int degree, std::array<int, 3> x, int t, const Rat& coeff);

    int degree() const { return degree_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }

    friend Section operator+(const Section& a, const Section& b);
    friend Section operator-(const Section& a, const Section& b);
    friend Section operator*(const Section& a, const Section& b);

    Section scaled(const Rat& c) const;
    Section times_t(int power) const;
    Section pow(int exponent) const;

    /// Substitution x_i -> x_{i+shift mod 3}.
    Section cycled(int shift) const;
    /// Substitution x1 <-> x2.
    Section swapped12() const;

    friend bool operator==(const Section&, const Section&) = default;

private:
    int degree_;
    std::vector<Monomial> monomials_;
};

/// Chart data of skeleton edge i: coordinates u = x_i/x_{i-1},
/// v = x_{i+1}/x_{i-1}, trivialising monomial x_{i-1}^degree. On the curve,
/// t = uv/(1 + u^3 + v^3); chart_expand returns the exact Taylor expansion of
/// s / x_{i-1}^degree up to total degree trunc_degree.
TruncatedSeries chart_expand(const Section& s, int edge, int trunc_degree);

/// Componentwise lower bounds for the chart support, read off the monomial
/// list alone: u_min = min(x[i] + t), v_min = min(x[i+1] + t). Sound because
/// each monomial expands into its shift times a series supported on
/// (3Z>=0)^2. Throws std::domain_error on the zero section.
Exp support_floor(const Section& s, int edge);

/// Exact coefficient of u^p v^q in the chart expansion (truncates at p+q).
Rat coefficient_at(const Section& s, int edge, int p, int q);

enum class CertificateRoute {
    /// The support floor itself carries a nonzero coefficient, so the
    /// valuation is the single line through it; no expansion needed.
    single_vertex,
    /// Hull from an expansion to degree D, certified exact because every
    /// omitted exponent componentwise dominates a retained hull vertex.
    componentwise_domination,
};

const char* route_name(CertificateRoute route);

/// Exact valuation profile of a section on one skeleton edge.
struct ValuationProfile {
    int edge = 0;
    PLFunction pl = PLFunction::constant(0);
    CertificateRoute route = CertificateRoute::single_vertex;
};

/// r |-> val_n(s) on edge i, as an exact PL function together with the
/// certificate route that proves no term beyond the truncation can lower the
/// envelope. Tries the single-vertex route first; otherwise expands to
/// trunc_degree and requires the componentwise-domination conditions:
/// the hull's extreme vertices (p*,q*) and (p**,q**) satisfy
/// p* = u_min, q** = v_min and trunc_degree >= p** + q*.
/// Throws CertificationError when neither route closes; never returns an
/// uncertified profile.
ValuationProfile certified_valuation_profile(const Section& s, int edge, int trunc_degree);

/// 4*degree + margin, the truncation at which the domination certificate
/// closes for the constructed sections.
int default_trunc_degree(int degree, int margin = 0);

std::string section_to_json(const Section& s);
Section section_from_json(const std::string& text);

}  // namespace skb
