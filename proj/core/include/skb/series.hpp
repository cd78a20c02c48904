#pragma once

#include "skb/rational.hpp"

#include <map>
#include <vector>

namespace skb {

/// Exponent pair of a bivariate term u^p v^q.
struct Exp {
    int p = 0;
    int q = 0;

    friend auto operator<=>(const Exp&, const Exp&) = default;
};

/// Sparse bivariate polynomial over the rationals truncated at a recorded
/// total degree. Zero coefficients are never stored; every stored exponent
/// satisfies p, q >= 0 and p + q <= trunc_degree. Terms beyond the truncation
/// are silently discarded on insertion, which is the intended semantics:
/// a TruncatedSeries represents its underlying series modulo total degree
/// > trunc_degree, and binary operations never extrapolate past the smaller
/// of the two input truncations.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc_degree);

    static TruncatedSeries one(int trunc_degree);

    int trunc_degree() const { return trunc_degree_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Accumulates c * u^p v^q; prunes a resulting zero, drops p+q > D.
    void add_term(Exp e, const Rat& c);

    /// Coefficient of u^p v^q (zero if absent).
    Rat coeff(Exp e) const;

    /// Exact evaluation at a rational point.
    Rat evaluate(const Rat& u, const Rat& v) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int trunc_degree_;
    std::map<Exp, Rat> terms_;
};

/// Result truncation of every binary operation is min of the inputs'.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& c);

/// 1/(1 + u) truncated at trunc_degree, for u with zero constant term
/// (throws std::invalid_argument otherwise).
TruncatedSeries geom_inverse(const TruncatedSeries& u_poly, int trunc_degree);

/// Lower-left convex hull of a support set: vertices with p strictly
/// increasing and q strictly decreasing; collinear support points are not
/// vertices. The induced min-of-lines envelope on r in [0,1] is
/// min over vertices of (1-r) p + r q.
struct LowerHull {
    std::vector<Exp> vertices;

    friend bool operator==(const LowerHull&, const LowerHull&) = default;
};

/// Hull of the support of s. Throws std::domain_error on an identically zero
/// series: that case carries the distinguished meaning "valuation larger than
/// the truncation degree" and must be handled by the caller, not by a hull.
LowerHull lower_hull(const TruncatedSeries& s);

/// Continuous piecewise-linear function on [0,1], held as breakpoints
/// 0 = r_0 < ... < r_n = 1 with exact values. Canonical form: no interior
/// breakpoint joins two segments of equal slope.
class PLFunction {
public:
    PLFunction(std::vector<Rat> breakpoints, std::vector<Rat> values);

    static PLFunction constant(const Rat& v);
    static PLFunction line(const Rat& at0, const Rat& at1);

    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const std::vector<Rat>& values() const { return values_; }
    const std::vector<Rat>& slopes() const { return slopes_; }

    Rat operator()(const Rat& r) const;

    /// Slope of the segment containing r; r must not be a breakpoint
    /// (throws std::invalid_argument if it is one, endpoints excepted).
    Rat slope_at(const Rat& r) const;

    /// Slope immediately to the right of r, defined for every r in [0,1).
    Rat slope_right(const Rat& r) const;

    /// Strictly decreasing slopes, as every min-of-lines envelope has.
    bool concave() const;

    PLFunction scaled(const Rat& c) const;

    friend PLFunction operator+(const PLFunction& a, const PLFunction& b);

    /// Structural equality of canonical forms == pointwise equality.
    friend bool operator==(const PLFunction&, const PLFunction&) = default;

    /// Pointwise a <= b on [0,1], decided exactly at the merged breakpoints.
    static bool leq(const PLFunction& a, const PLFunction& b);

private:
    std::vector<Rat> breakpoints_;
    std::vector<Rat> values_;
    std::vector<Rat> slopes_;
};

/// Exact min-of-lines envelope of a hull.
PLFunction hull_to_plfunction(const LowerHull& h);

/// f dominates g: the envelope of f lies pointwise below (or on) that of g.
bool dominates(const PLFunction& f, const PLFunction& g);
bool dominates(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace skb
