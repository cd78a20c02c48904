#pragma once

#include "skb/basis.hpp"
#include "skb/cost.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace skb {

/// The profile the cost function predicts for the section at m on one
/// skeleton edge: r |-> (d/3) cost(edge + r, tv(m)), with breakpoints read
/// from the floor structure of the closed form.
PLFunction expected_profile(const PolytopePoint& m, int edge, int degree);

/// Predicted slope set on the s-th generic subinterval for degree k:
/// {0, +-1, ..., +-k} u {k+1, ..., 2k-s} u {-(k+1), ..., -(k+s-1)};
/// cardinality 3k. Requires 1 <= s <= k.
std::set<long> slope_set_formula(int k, int s);

struct Counterexample {
    PolytopePoint m{0, 1, 0};
    int edge = 0;
    Rat r_lo, r_hi;        // subinterval where the two sides differ
    std::string what;      // which check failed
    std::string expected;  // exact witness values at the midpoint
    std::string actual;
};

struct EdgeCheck {
    ValuationProfile profile;
    PLFunction expected = PLFunction::constant(0);
    bool equal = false;
};

struct SectionCheck {
    PolytopePoint m{0, 1, 0};
    bool leading_ok = false;  // s_m = sigma_m + t * rest
    std::array<EdgeCheck, 3> edges;
};

/// Everything verify_theorem established about one basis. All comparisons
/// behind the booleans are exact rational equalities; independence_ok is set
/// when the profile equalities hold and every generic subinterval shows 3d
/// pairwise distinct slopes (the hypothesis under which slope-distinctness
/// implies valuative independence).
struct Certificate {
    int degree = 0;
    std::vector<SectionCheck> sections;
    /// slope_report[edge][s-1]: sorted slopes of all sections at the midpoint
    /// of the s-th subinterval.
    std::array<std::vector<std::vector<Rat>>, 3> slope_report;
    bool leading_ok = false;
    bool equalities_ok = false;
    bool slopes_ok = false;
    bool independence_ok = false;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return leading_ok && equalities_ok && slopes_ok && independence_ok; }
};

struct VerifyOptions {
    int margin = 0;  // added to the default truncation degree
};

/// Checks, per section: the leading-monomial form, and exact PL equality of
/// the certified valuation profile against the cost prediction on all three
/// edges; then the slope multiset on every generic subinterval (3d distinct
/// values, matching slope_set_formula). Mismatches are returned as structured
/// counterexamples; certification failures propagate as CertificationError.
Certificate verify_theorem(const BasisDescriptor& basis, VerifyOptions options = {});

std::string certificate_to_json(const Certificate& cert);

/// The basis (I + tB)s: entry m becomes s_m + t * sum_m' B[m][m'] s_m'.
/// B is row-major over the descriptor's entry order, size (3d)^2.
BasisDescriptor perturb_basis(const BasisDescriptor& basis, const std::vector<long>& B);

/// True iff every valuation profile of the perturbed basis equals the
/// original's on all three edges. Profiles of perturbed sections may need a
/// deeper expansion than the default; this routine retries on a bounded
/// ladder of truncation degrees before giving up.
bool perturbation_invariance(const BasisDescriptor& basis, const std::vector<long>& B,
                             VerifyOptions options = {});

}  // namespace skb
