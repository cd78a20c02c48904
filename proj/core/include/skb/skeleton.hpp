#pragma once

#include "skb/rational.hpp"

namespace skb {

/// Integer vector in the fixed lattice basis. The same struct serves the
/// polytope and its dual; the two roles are kept apart by the call sites.
struct LatticeVec {
    long c1 = 0;
    long c2 = 0;

    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

/// Vertex m_k of the triangle: m_0 = (-1,-1), m_1 = (-1,2), m_2 = (2,-1).
/// Indices are taken modulo 3.
LatticeVec triangle_vertex(long k);

/// Vertex n_k of the dual triangle: n_0 = (-1,0), n_1 = (1,1), n_2 = (0,-1).
LatticeVec dual_vertex(long k);

/// The dual pairing <m, n> = m.c1 n.c1 + m.c2 n.c2.
long pairing(const LatticeVec& m, const LatticeVec& n);

/// Point of the dual triangle boundary: edge [n_e, n_{e+1}] at parameter
/// r in [0,1]. A vertex stored as (edge, r=1) is normalised to
/// (edge+1 mod 3, r=0), so each point has a unique representation.
class SkeletonPoint {
public:
    SkeletonPoint(int edge, Rat r);

    int edge() const { return edge_; }
    const Rat& r() const { return r_; }

    /// Canonical cover coordinate t in [0,3).
    Rat cover() const { return Rat(edge_) + r_; }

    friend bool operator==(const SkeletonPoint& a, const SkeletonPoint& b) {
        return a.edge_ == b.edge_ && a.r_ == b.r_;
    }

private:
    int edge_;
    Rat r_;
};

/// Canonical point under the period-3 identification of the cover.
SkeletonPoint cover_to_edge(const Rat& t);

/// Canonical cover coordinate in [0,3); inverse of cover_to_edge.
Rat edge_to_cover(const SkeletonPoint& n);

/// Chart phi_k around the vertex n_k: k + (1/3)<m_{k+1} - m_k, n>.
/// Defined on the star of n_k including the far endpoint n_{k+1} (where it
/// takes the closure value k+1) but excluding n_{k-1} and the opposite open
/// edge. Throws std::domain_error outside this domain.
Rat chart_phi(long k, const SkeletonPoint& n);

/// Point of the triangle boundary with integer weights: (a m_e + b m_{e+1})/(a+b)
/// on edge [m_e, m_{e+1}]. Requires a + b > 0; a representation with a = 0 is
/// normalised to (edge+1 mod 3, b, 0). Two representations are equal iff they
/// name the same geometric point (equality is tested on the cover coordinate).
class PolytopePoint {
public:
    PolytopePoint(int edge, long a, long b);

    int edge() const { return edge_; }
    long a() const { return a_; }
    long b() const { return b_; }

    /// Cover coordinate t-dual = 3 edge + 3b/(a+b), canonical in [0,9).
    Rat cover() const;

    friend bool operator==(const PolytopePoint& a, const PolytopePoint& b) {
        return a.cover() == b.cover();
    }

private:
    int edge_;
    long a_;
    long b_;
};

}  // namespace skb
