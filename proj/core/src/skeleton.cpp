#include "skb/skeleton.hpp"

#include <stdexcept>

namespace skb {

namespace {

int mod3(long k) {
    int r = static_cast<int>(k % 3);
    return r < 0 ? r + 3 : r;
}

}  // namespace

LatticeVec triangle_vertex(long k) {
    static const LatticeVec ms[3] = {{-1, -1}, {-1, 2}, {2, -1}};
    return ms[mod3(k)];
}

LatticeVec dual_vertex(long k) {
    static const LatticeVec ns[3] = {{-1, 0}, {1, 1}, {0, -1}};
    return ns[mod3(k)];
}

long pairing(const LatticeVec& m, const LatticeVec& n) {
    return m.c1 * n.c1 + m.c2 * n.c2;
}

SkeletonPoint::SkeletonPoint(int edge, Rat r) : edge_(mod3(edge)), r_(std::move(r)) {
    if (r_ < 0 || r_ > 1)
        throw std::invalid_argument("SkeletonPoint: r must lie in [0,1]");
    if (r_ == 1) {  // the shared vertex belongs to the next edge
        edge_ = mod3(edge_ + 1);
        r_ = 0;
    }
}

SkeletonPoint cover_to_edge(const Rat& t) {
    Rat canonical = rat_mod(t, 3);
    Int e = rat_floor(canonical);
    return SkeletonPoint(static_cast<int>(e), canonical - Rat(e));
}

Rat edge_to_cover(const SkeletonPoint& n) {
    return n.cover();
}

Rat chart_phi(long k, const SkeletonPoint& n) {
    int kk = mod3(k);
    // Domain: edge k with r in [0,1) plus the vertex n_{k+1}, and edge k-1
    // with r in (0,1). Excluded: n_{k-1} and the open opposite edge.
    bool ok = n.edge() == kk || (n.edge() == mod3(kk - 1) && n.r() > 0) ||
              (n.edge() == mod3(kk + 1) && n.r() == 0);
    if (!ok)
        throw std::domain_error("chart_phi: point outside the chart around the requested vertex");

    LatticeVec dm{triangle_vertex(kk + 1).c1 - triangle_vertex(kk).c1,
                  triangle_vertex(kk + 1).c2 - triangle_vertex(kk).c2};
    LatticeVec a = dual_vertex(n.edge());
    LatticeVec b = dual_vertex(n.edge() + 1);
    // <dm, (1-r) a + r b> / 3
    Rat value = (Rat(pairing(dm, a)) * (1 - n.r()) + Rat(pairing(dm, b)) * n.r()) / 3;
    return Rat(kk) + value;
}

PolytopePoint::PolytopePoint(int edge, long a, long b) : edge_(mod3(edge)), a_(a), b_(b) {
    if (a < 0 || b < 0 || a + b == 0)
        throw std::invalid_argument("PolytopePoint: weights must be nonnegative with a+b > 0");
    if (a_ == 0) {  // the point is the vertex m_{edge+1}
        edge_ = mod3(edge_ + 1);
        a_ = b_;
        b_ = 0;
    }
}

Rat PolytopePoint::cover() const {
    return Rat(3 * edge_) + Rat(3 * b_, a_ + b_);
}

}  // namespace skb
