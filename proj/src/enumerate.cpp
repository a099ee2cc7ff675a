#include "telesum/enumerate.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>

#include "telesum/numtheory.hpp"

namespace telesum {

TreeCut tree_cut(const TruncationSpec& spec) {
    if (spec.kind != TruncationSpec::Kind::coord_box)
        throw std::invalid_argument("tree_cut: needs a coordinate-box truncation");
    TreeCut cut;
    visit_unimodular_tree(spec.bound, [&](Vec2 x, Vec2 y, Vec2, bool boundary) {
        VectorPair p{x, y, 1};
        cut.interior.push_back(p);
        if (boundary) cut.boundary.push_back(p);
    });
    return cut;
}

std::vector<VectorPair> unimodular_oracle(Int box) {
    if (box < 0) throw std::domain_error("unimodular_oracle: box must be >= 0");
    if (box > 200)
        throw std::domain_error("unimodular_oracle: refusing box > 200 (O(N^4) scan)");
    std::vector<VectorPair> out;
    for (Int a = 0; a <= box; ++a)
        for (Int b = 0; b <= box; ++b)
            for (Int c = 0; c <= box; ++c)
                for (Int d = 0; d <= box; ++d)
                    if (a * d - b * c == 1) out.push_back({{a, b}, {c, d}, 1});
    return out;
}

std::vector<VectorPair> detn_pairs(Int n, Int box) {
    std::vector<VectorPair> out;
    visit_detn_pairs(n, box, [&](Vec2 x, Vec2 y) { out.push_back({x, y, n}); });
    return out;
}

std::vector<VectorPair> detn_oracle(Int n, Int box) {
    if (n < 1) throw std::domain_error("detn_oracle: determinant must be >= 1");
    if (box < 0) throw std::domain_error("detn_oracle: box must be >= 0");
    if (box > 60) throw std::domain_error("detn_oracle: refusing box > 60 (O(N^4) scan)");
    auto in_half_plane = [](Int a, Int b) { return b > 0 || (b == 0 && a > 0); };
    std::vector<VectorPair> out;
    for (Int a = -box; a <= box; ++a)
        for (Int b = -box; b <= box; ++b) {
            if (!in_half_plane(a, b)) continue;
            for (Int c = -box; c <= box; ++c)
                for (Int d = -box; d <= box; ++d) {
                    if (!in_half_plane(c, d)) continue;
                    if (a * d - b * c == n) out.push_back({{a, b}, {c, d}, n});
                }
        }
    return out;
}

std::vector<SublatticeClass> sublattice_classes(Int n) {
    if (n < 1) throw std::domain_error("sublattice_classes: n must be >= 1");
    std::vector<SublatticeClass> out;
    for (Int d : divisors(n))
        for (Int k = 0; k < n / d; ++k) out.push_back({n, d, k});
    return out;
}

Hnf hermite_normal_form(const VectorPair& p) {
    if (p.d == 0) throw std::domain_error("hermite_normal_form: pair must be nondegenerate");
    // Column operations: combine the two generators into one with second
    // coordinate gcd(x.b, y.b) = g, leaving a purely horizontal partner of
    // length |det|/g; then reduce the mixed column's first coordinate mod it.
    Int b = p.x.b, d = p.y.b;
    // Extended gcd: u*b + v*d = g.
    Int u = 1, v = 0, u1 = 0, v1 = 1, r = b, r1 = d;
    while (r1 != 0) {
        Int q = r / r1;
        Int r2 = r - q * r1;
        Int u2 = u - q * u1;
        Int v2 = v - q * v1;
        r = r1; u = u1; v = v1;
        r1 = r2; u1 = u2; v1 = v2;
    }
    if (r < 0) { r = -r; u = -u; v = -v; }
    Hnf h;
    if (r == 0) throw std::domain_error("hermite_normal_form: degenerate pair");
    h.d = r;
    Int128 area = det(p.x, p.y);
    if (area < 0) area = -area;
    h.a = static_cast<Int>(area / r);
    Int128 c = Int128(u) * p.x.a + Int128(v) * p.y.a;
    c %= h.a;
    if (c < 0) c += h.a;
    h.c = static_cast<Int>(c);
    return h;
}

std::vector<std::pair<Int, Int>> coprime_pairs(Int bound) {
    std::vector<std::pair<Int, Int>> out;
    visit_coprime_pairs(bound, [&](Int b, Int d) { out.emplace_back(b, d); });
    return out;
}

}  // namespace telesum
