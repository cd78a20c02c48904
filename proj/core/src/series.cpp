#include "skb/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace skb {

TruncatedSeries::TruncatedSeries(int trunc_degree) : trunc_degree_(trunc_degree) {
    if (trunc_degree < 0)
        throw std::invalid_argument("TruncatedSeries: negative truncation degree");
}

TruncatedSeries TruncatedSeries::one(int trunc_degree) {
    TruncatedSeries s(trunc_degree);
    s.add_term({0, 0}, 1);
    return s;
}

void TruncatedSeries::add_term(Exp e, const Rat& c) {
    if (e.p < 0 || e.q < 0)
        throw std::invalid_argument("TruncatedSeries: negative exponent");
    if (c == 0 || e.p + e.q > trunc_degree_)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rat TruncatedSeries::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncatedSeries::evaluate(const Rat& u, const Rat& v) const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < e.p; ++i)
            term *= u;
        for (int i = 0; i < e.q; ++i)
            term *= v;
        total += term;
    }
    return total;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.trunc_degree(), b.trunc_degree()));
    for (const auto& [e, c] : a.terms())
        out.add_term(e, c);
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.trunc_degree(), b.trunc_degree()));
    for (const auto& [e, c] : a.terms())
        out.add_term(e, c);
    for (const auto& [e, c] : b.terms())
        out.add_term(e, -c);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.trunc_degree(), b.trunc_degree()));
    for (const auto& [ea, ca] : a.terms()) {
        if (ea.p + ea.q > out.trunc_degree())
            continue;
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea.p + eb.p, ea.q + eb.q}, ca * cb);
    }
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& c) {
    TruncatedSeries out(a.trunc_degree());
    for (const auto& [e, coeff] : a.terms())
        out.add_term(e, coeff * c);
    return out;
}

TruncatedSeries geom_inverse(const TruncatedSeries& u_poly, int trunc_degree) {
    if (u_poly.coeff({0, 0}) != 0)
        throw std::invalid_argument("geom_inverse: argument must have zero constant term");
    // 1/(1+u) = sum (-1)^k u^k; u has positive valuation so powers terminate.
    TruncatedSeries result = TruncatedSeries::one(trunc_degree);
    TruncatedSeries power = TruncatedSeries::one(trunc_degree);
    int sign = 1;
    while (true) {
        power = series_mul(power, u_poly);
        if (power.is_zero())
            break;
        sign = -sign;
        result = sign > 0 ? series_add(result, power) : series_sub(result, power);
    }
    return result;
}

LowerHull lower_hull(const TruncatedSeries& s) {
    if (s.is_zero())
        throw std::domain_error("lower_hull: empty series (valuation beyond truncation)");

    // Support sorted by p then q; one candidate per p (the least q), then a
    // strictly-decreasing-q staircase, then a convexity prune. Collinear
    // middles are removed so that the representation is canonical.
    std::vector<Exp> chain;
    int last_p = -1;
    for (const auto& [e, c] : s.terms()) {
        if (e.p == last_p)
            continue;  // map order: the first entry per p has the least q
        last_p = e.p;
        if (!chain.empty() && e.q >= chain.back().q)
            continue;  // componentwise dominated, never a vertex
        while (chain.size() >= 2) {
            const Exp& a = chain[chain.size() - 2];
            const Exp& b = chain.back();
            // keep b only if strictly below the segment a--e
            Int lhs = Int(b.q - a.q) * Int(e.p - a.p);
            Int rhs = Int(e.q - a.q) * Int(b.p - a.p);
            if (lhs < rhs)
                break;
            chain.pop_back();
        }
        chain.push_back(e);
    }
    return LowerHull{std::move(chain)};
}

PLFunction::PLFunction(std::vector<Rat> breakpoints, std::vector<Rat> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size() || breakpoints_.size() < 2)
        throw std::invalid_argument("PLFunction: need matching breakpoints and values");
    if (breakpoints_.front() != 0 || breakpoints_.back() != 1)
        throw std::invalid_argument("PLFunction: domain must be [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("PLFunction: breakpoints must increase strictly");

    // Canonicalise: merge interior breakpoints joining equal-slope segments.
    std::vector<Rat> bp{breakpoints_.front()};
    std::vector<Rat> vals{values_.front()};
    for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
        Rat left = (values_[i] - vals.back()) / (breakpoints_[i] - bp.back());
        Rat right = (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
        if (left != right) {
            bp.push_back(breakpoints_[i]);
            vals.push_back(values_[i]);
        }
    }
    bp.push_back(breakpoints_.back());
    vals.push_back(values_.back());
    breakpoints_ = std::move(bp);
    values_ = std::move(vals);

    slopes_.reserve(breakpoints_.size() - 1);
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        slopes_.push_back((values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]));
}

PLFunction PLFunction::constant(const Rat& v) {
    return PLFunction({Rat(0), Rat(1)}, {v, v});
}

PLFunction PLFunction::line(const Rat& at0, const Rat& at1) {
    return PLFunction({Rat(0), Rat(1)}, {at0, at1});
}

Rat PLFunction::operator()(const Rat& r) const {
    if (r < 0 || r > 1)
        throw std::invalid_argument("PLFunction: argument outside [0,1]");
    std::size_t i = 0;
    while (i + 2 < breakpoints_.size() && breakpoints_[i + 1] <= r)
        ++i;
    return values_[i] + slopes_[i] * (r - breakpoints_[i]);
}

Rat PLFunction::slope_at(const Rat& r) const {
    if (r <= 0 || r >= 1)
        throw std::invalid_argument("PLFunction: slope sample must be interior");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (i > 0 && r == breakpoints_[i])
            throw std::invalid_argument("PLFunction: slope undefined at a breakpoint");
        if (r < breakpoints_[i + 1])
            return slopes_[i];
    }
    return slopes_.back();
}

Rat PLFunction::slope_right(const Rat& r) const {
    if (r < 0 || r >= 1)
        throw std::invalid_argument("PLFunction: right slope needs r in [0,1)");
    std::size_t i = 0;
    while (i + 2 < breakpoints_.size() && breakpoints_[i + 1] <= r)
        ++i;
    return slopes_[i];
}

bool PLFunction::concave() const {
    for (std::size_t i = 0; i + 1 < slopes_.size(); ++i)
        if (!(slopes_[i] > slopes_[i + 1]))
            return false;
    return true;
}

PLFunction PLFunction::scaled(const Rat& c) const {
    if (c <= 0)
        throw std::invalid_argument("PLFunction: scale factor must be positive");
    std::vector<Rat> vals;
    vals.reserve(values_.size());
    for (const Rat& v : values_)
        vals.push_back(v * c);
    return PLFunction(breakpoints_, std::move(vals));
}

namespace {

std::vector<Rat> merged_breakpoints(const PLFunction& a, const PLFunction& b) {
    std::vector<Rat> merged;
    merged.reserve(a.breakpoints().size() + b.breakpoints().size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
               b.breakpoints().end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

}  // namespace

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
    std::vector<Rat> bp = merged_breakpoints(a, b);
    std::vector<Rat> vals;
    vals.reserve(bp.size());
    for (const Rat& r : bp)
        vals.push_back(a(r) + b(r));
    return PLFunction(std::move(bp), std::move(vals));
}

bool PLFunction::leq(const PLFunction& a, const PLFunction& b) {
    for (const Rat& r : merged_breakpoints(a, b))
        if (a(r) > b(r))
            return false;
    return true;
}

PLFunction hull_to_plfunction(const LowerHull& h) {
    if (h.vertices.empty())
        throw std::invalid_argument("hull_to_plfunction: empty hull");
    const auto& v = h.vertices;
    std::vector<Rat> bp{Rat(0)};
    std::vector<Rat> vals{Rat(v.front().p)};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // crossing of (1-r) p_i + r q_i with the next line
        Rat r = Rat(v[i + 1].p - v[i].p, (v[i + 1].p - v[i].p) + (v[i].q - v[i + 1].q));
        if (!(r > bp.back() && r < 1))
            throw std::logic_error("hull_to_plfunction: hull crossings out of order");
        bp.push_back(r);
        vals.push_back(Rat(v[i].p) + Rat(v[i].q - v[i].p) * r);
    }
    bp.push_back(Rat(1));
    vals.push_back(Rat(v.back().q));
    return PLFunction(std::move(bp), std::move(vals));
}

bool dominates(const PLFunction& f, const PLFunction& g) {
    return PLFunction::leq(f, g);
}

bool dominates(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.is_zero())
        return true;  // the zero series has valuation beyond any envelope
    if (f.is_zero())
        return false;
    return dominates(hull_to_plfunction(lower_hull(f)), hull_to_plfunction(lower_hull(g)));
}

}  // namespace skb
