#pragma once

// Index-set generators for every sum in the library: the mediant tree of
// unimodular first-quadrant pairs with box pruning, det-n half-plane pairs,
// sublattice classes, coprime pairs, and zero-sum coefficient triples.
// Brute-force oracles for the first two live here as well.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "telesum/lattice.hpp"

namespace telesum {

struct TruncationSpec {
    enum class Kind { coord_box, coeff_box };
    Kind kind = Kind::coord_box;
    Int bound = 1;

    static TruncationSpec coord_box(Int n) {
        if (n < 1) throw std::domain_error("TruncationSpec: box bound must be >= 1");
        return {Kind::coord_box, n};
    }
    static TruncationSpec coeff_box(Int m) {
        if (m < 1) throw std::domain_error("TruncationSpec: coefficient bound must be >= 1");
        return {Kind::coeff_box, m};
    }
};

// Depth-first walk of the mediant tree rooted at ((1,0),(0,1)), children
// (x, x+y) then (x+y, y), pruned where the mediant leaves [0,N]^2. The
// traversal is iterative: depth reaches N along the ((1,0),(k,1)) chains.
// visit(x, y, x+y, is_boundary) is called once per surviving node, in
// deterministic preorder.
template <typename Visit>
void visit_unimodular_tree(Int box, Visit&& visit) {
    if (box < 1) return;
    struct Node {
        Vec2 x, y;
    };
    std::vector<Node> stack;
    stack.reserve(64);
    stack.push_back({{1, 0}, {0, 1}});
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        Vec2 med = n.x + n.y;
        bool boundary = med.a > box || med.b > box;
        visit(n.x, n.y, med, boundary);
        if (!boundary) {
            stack.push_back({med, n.y});  // popped second
            stack.push_back({n.x, med});  // popped first
        }
    }
}

// Interior = every tree node inside the box; boundary = the subset whose
// mediant left it. As a set, interior is exactly
// { (x,y) : x,y in [0,N]^2, det(x y) = 1 }.
struct TreeCut {
    std::vector<VectorPair> interior;
    std::vector<VectorPair> boundary;
};
TreeCut tree_cut(const TruncationSpec& spec);

// O(N^4) scan of the box, det = 1 filter. Refuses N > 200. Sorted output.
std::vector<VectorPair> unimodular_oracle(Int box);

// Pairs (x, y) with both vectors in the half-plane
// H = { (a,b) : b > 0 } u { (a,0) : a > 0 }, coordinates in [-N, N], and
// det(x y) = n. For each y the solutions x of the linear Diophantine
// equation det(x y) = n form a line stepped by y/gcd(y) (the primitive
// vector under y); only in-box, in-H points are emitted. visit(x, y) in
// deterministic order (y by (b,a), then line steps).
template <typename Visit>
void visit_detn_pairs(Int n, Int box, Visit&& visit) {
    if (n < 1) throw std::domain_error("visit_detn_pairs: determinant must be >= 1");
    if (box < 1) return;
    auto in_half_plane = [](Int a, Int b) { return b > 0 || (b == 0 && a > 0); };
    for (Int d = 0; d <= box; ++d) {
        Int c_lo = (d == 0) ? 1 : -box;
        for (Int c = c_lo; c <= box; ++c) {
            if (c == 0 && d == 0) continue;
            Int g = std::gcd(c, d);
            if (n % g != 0) continue;  // the line a*d - b*c = n has no lattice points
            Int scale = n / g;
            // Extended gcd: u0*d + v0*c = g.
            Int u0 = 1, v0 = 0, u1 = 0, v1 = 1, r0 = d, r1 = c;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1;
                Int u2 = u0 - q * u1;
                Int v2 = v0 - q * v1;
                r0 = r1; u0 = u1; v0 = v1;
                r1 = r2; u1 = u2; v1 = v2;
            }
            if (r0 < 0) { u0 = -u0; v0 = -v0; }
            // One solution of a*d - b*c = n; the rest differ by multiples of
            // the primitive direction (cs, ds) = (c, d)/g.
            Int a0 = u0 * scale;
            Int b0 = -v0 * scale;
            Int cs = c / g, ds = d / g;
            if (ds == 0 && b0 < 0) continue;  // whole line sits below H
            // Clamp t so that a0 + t*cs and b0 + t*ds stay inside [-box, box].
            double lo = -4e18, hi = 4e18;
            auto clamp = [&](Int base, Int step) {
                if (step == 0) {
                    if (base < -box || base > box) { lo = 1; hi = 0; }
                    return;
                }
                double t1 = double(-box - base) / double(step);
                double t2 = double(box - base) / double(step);
                if (t1 > t2) std::swap(t1, t2);
                if (t1 > lo) lo = t1;
                if (t2 < hi) hi = t2;
            };
            clamp(a0, cs);
            clamp(b0, ds);
            if (lo > hi) continue;
            Int t_lo = static_cast<Int>(std::ceil(lo - 1e-9));
            Int t_hi = static_cast<Int>(std::floor(hi + 1e-9));
            for (Int t = t_lo; t <= t_hi; ++t) {
                Int a = a0 + t * cs;
                Int b = b0 + t * ds;
                if (a < -box || a > box || b < -box || b > box) continue;
                if (!in_half_plane(a, b)) continue;
                visit(Vec2{a, b}, Vec2{c, d});
            }
        }
    }
}

std::vector<VectorPair> detn_pairs(Int n, Int box);

// O(N^4) scan over H x H within [-N, N]^2, det = n filter. Refuses N > 60.
std::vector<VectorPair> detn_oracle(Int n, Int box);

// One sublattice of index n per (d | n, 0 <= k < n/d), generated by
// ((n/d, 0), (k, d)). The second generator is only determined modulo the
// first (adding (n/d, 0) does not change the lattice), so k runs below n/d;
// summed over divisors that still gives sigma_1(n) classes, and their
// Hermite normal forms are pairwise distinct.
struct SublatticeClass {
    Int n = 1;
    Int d = 1;
    Int k = 0;
    VectorPair generators() const { return VectorPair::of({n / d, 0}, {k, d}); }
};
std::vector<SublatticeClass> sublattice_classes(Int n);

/// Hermite normal form of the rank-2 lattice spanned by x, y: generators
// ((a,0), (c,d)) with a > 0, d > 0, 0 <= c < a. Unique per sublattice.
struct Hnf {
    Int a = 1;
    Int c = 0;
    Int d = 1;
    friend constexpr bool operator==(const Hnf& p, const Hnf& q) {
        return p.a == q.a && p.c == q.c && p.d == q.d;
    }
    friend constexpr bool operator<(const Hnf& p, const Hnf& q) {
        return std::tie(p.a, p.c, p.d) < std::tie(q.a, q.c, q.d);
    }
};
Hnf hermite_normal_form(const VectorPair& p);

// All coprime positive pairs (b, d) <= N, each exactly once, (b asc, d asc).
template <typename Visit>
void visit_coprime_pairs(Int bound, Visit&& visit) {
    for (Int b = 1; b <= bound; ++b)
        for (Int d = 1; d <= bound; ++d)
            if (std::gcd(b, d) == 1) visit(b, d);
}
std::vector<std::pair<Int, Int>> coprime_pairs(Int bound);

// Zero-sum coefficient triples: (w1, w2) over ([-M,M]^2 \ {0})^2 with
// w3 = -w1 - w2 != 0 (w3's coefficients may leave the box; the truncation
// is on (w1, w2) only). The collinear flag is det(w1 w2) = 0 on the integer
// coefficients. visit(m1, n1, m2, n2, det, collinear).
template <typename Visit>
void visit_triples(Int coeff_box, Visit&& visit) {
    const Int M = coeff_box;
    for (Int m1 = -M; m1 <= M; ++m1)
        for (Int n1 = -M; n1 <= M; ++n1) {
            if (m1 == 0 && n1 == 0) continue;
            for (Int m2 = -M; m2 <= M; ++m2)
                for (Int n2 = -M; n2 <= M; ++n2) {
                    if (m2 == 0 && n2 == 0) continue;
                    if (m1 + m2 == 0 && n1 + n2 == 0) continue;
                    Int d = m1 * n2 - m2 * n1;
                    visit(m1, n1, m2, n2, d, d == 0);
                }
        }
}

}  // namespace telesum
