#pragma once

#include "skb/section.hpp"
#include "skb/skeleton.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skb {

/// One correction index of the loop: a pair (m, s) with gap d = s - m.
/// Membership in the index set of (a, b) means
/// (a/b) m < a - s <= ((a-1)/b) m + 1 with m, s > 0, held exactly.
struct LambdaEntry {
    long m = 0;
    long s = 0;
    long d = 0;  // s - m

    friend bool operator==(const LambdaEntry&, const LambdaEntry&) = default;
};

/// All correction indices for a > b >= 1, ordered by m strictly increasing
/// (equivalently s strictly decreasing, d strictly decreasing; the three
/// orderings are asserted to coincide). Throws std::invalid_argument unless
/// a > b >= 1.
std::vector<LambdaEntry> lambda_set(long a, long b);

/// Closed-form cardinality (b + gcd(a-1,b) - gcd(a,b) - 1)/2.
long lambda_cardinality(long a, long b);

/// Builds the sections S(a, b) by the inductive procedure: pure powers on
/// the diagonal and the axes, the two-term seed R_0 off them, then one
/// subtraction per correction index. Built sections are cached by (a, b)
/// under insert-if-absent semantics: builds are deterministic functions of
/// (a, b), so concurrent builders may race on disjoint or overlapping keys
/// and still observe identical sections. Cached references stay valid for
/// the life of the builder.
class SectionBuilder {
public:
    struct LambdaTweak {
        long a = 0;
        long b = 0;
        int step = 0;  // 0-based index into the correction loop
        Rat delta;     // added to the extracted coefficient
    };

    struct Options {
        int margin = 0;  // added to every default truncation degree
        /// Test hook: perturb one correction coefficient of one build.
        std::optional<LambdaTweak> lambda_tweak;
    };

    SectionBuilder() = default;
    explicit SectionBuilder(Options options);

    /// Memoized S(a, b), any a, b >= 0 with a + b > 0.
    const Section& section(long a, long b);

    /// The seed R_0(a, b) for a != b, a, b >= 1.
    Section r0(long a, long b);

    /// The term subtracted at one correction step, scaled by `lambda`:
    /// three-way case split on 3d against 2a and a-b. The entry must belong
    /// to lambda_set(a, b).
    Section correction_term(long a, long b, const LambdaEntry& entry, const Rat& lambda);

    /// Correction coefficients extracted while building S(a, b) (empty until
    /// that section has been built).
    std::vector<Rat> lambdas(long a, long b) const;

    const Options& options() const { return options_; }

private:
    Section build(long a, long b);

    Options options_;
    mutable std::mutex mutex_;
    std::map<std::pair<long, long>, Section> cache_;
    std::map<std::pair<long, long>, std::vector<Rat>> lambdas_;
};

/// The full basis for one x-degree: 3d sections indexed by the boundary
/// lattice points, in deterministic order (edge ascending, a descending).
struct BasisDescriptor {
    int degree = 0;
    std::vector<std::pair<PolytopePoint, Section>> entries;

    const Section* find(const PolytopePoint& m) const;
};

/// sigma_m: the monomial section attached to a boundary lattice point
/// (x1^a x2^b for edge 0, cycled for the other edges).
Section monomial_section(const PolytopePoint& m, int degree);

BasisDescriptor build_basis(int degree, SectionBuilder& builder);
BasisDescriptor build_basis(int degree);

std::string basis_to_json(const BasisDescriptor& basis);
BasisDescriptor basis_from_json(const std::string& text);

}  // namespace skb
