#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "telesum/enumerate.hpp"
#include "telesum/numtheory.hpp"

using namespace telesum;

namespace {

std::vector<VectorPair> sorted(std::vector<VectorPair> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("truncation factories validate their bounds") {
    CHECK(TruncationSpec::coord_box(5).bound == 5);
    CHECK(TruncationSpec::coeff_box(7).kind == TruncationSpec::Kind::coeff_box);
    CHECK_THROWS_AS(TruncationSpec::coord_box(0), std::domain_error);
    CHECK_THROWS_AS(TruncationSpec::coeff_box(-2), std::domain_error);
    CHECK_THROWS_AS(tree_cut(TruncationSpec::coeff_box(3)), std::invalid_argument);
}

TEST_CASE("mediant tree at box 1 and 2, by hand") {
    TreeCut c1 = tree_cut(TruncationSpec::coord_box(1));
    REQUIRE(c1.interior.size() == 3);
    CHECK(c1.boundary.size() == 2);
    // Preorder: root, then the (x, x+y) child before the (x+y, y) child.
    CHECK(c1.interior[0] == VectorPair::of({1, 0}, {0, 1}));
    CHECK(c1.interior[1] == VectorPair::of({1, 0}, {1, 1}));
    CHECK(c1.interior[2] == VectorPair::of({1, 1}, {0, 1}));
    CHECK(c1.boundary[0] == VectorPair::of({1, 0}, {1, 1}));
    CHECK(c1.boundary[1] == VectorPair::of({1, 1}, {0, 1}));

    TreeCut c2 = tree_cut(TruncationSpec::coord_box(2));
    CHECK(c2.interior.size() == 7);
    CHECK(c2.boundary.size() == 4);
}

TEST_CASE("every visited node is unimodular, in-box, and consistently flagged") {
    Int box = 40;
    visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2 med, bool boundary) {
        CHECK(det(x, y) == 1);
        CHECK(x.a <= box);
        CHECK(x.b <= box);
        CHECK(y.a <= box);
        CHECK(y.b <= box);
        CHECK(med == x + y);
        CHECK(boundary == (med.a > box || med.b > box));
    });
}

TEST_CASE("tree interior equals the quadruple-loop oracle") {
    for (Int box : {1, 2, 3, 5, 8, 12, 20}) {
        TreeCut cut = tree_cut(TruncationSpec::coord_box(box));
        CHECK(sorted(cut.interior) == unimodular_oracle(box));
        // No duplicates in the traversal.
        std::set<VectorPair> uniq(cut.interior.begin(), cut.interior.end());
        CHECK(uniq.size() == cut.interior.size());
    }
    CHECK_THROWS_AS(unimodular_oracle(500), std::domain_error);
}

TEST_CASE("det-n line solver equals the exhaustive oracle") {
    for (Int n = 1; n <= 5; ++n)
        for (Int box : {1, 2, 5, 12}) {
            CAPTURE(n);
            CAPTURE(box);
            CHECK(sorted(detn_pairs(n, box)) == sorted(detn_oracle(n, box)));
        }
}

TEST_CASE("det-n pairs: hand cases and invariants") {
    // det = 2 inside box 1: only ((1,1), (-1,1)).
    std::vector<VectorPair> p21 = detn_pairs(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0] == VectorPair::of({1, 1}, {-1, 1}));

    auto in_h = [](Vec2 v) { return v.b > 0 || (v.b == 0 && v.a > 0); };
    for (const VectorPair& p : detn_pairs(3, 15)) {
        CHECK(det(p.x, p.y) == 3);
        CHECK(in_h(p.x));
        CHECK(in_h(p.y));
        CHECK(std::max({std::abs(p.x.a), std::abs(p.x.b), std::abs(p.y.a), std::abs(p.y.b)}) <=
              15);
    }
    CHECK_THROWS_AS(detn_pairs(0, 5), std::domain_error);
    CHECK_THROWS_AS(detn_oracle(2, 100), std::domain_error);
}

TEST_CASE("sublattice classes: counts, determinants, distinct lattices") {
    // sigma_1(n) classes for every n.
    std::vector<Int> table = sigma1_table(500);
    for (Int n = 1; n <= 500; ++n)
        CHECK(Int(sublattice_classes(n).size()) == table[n]);

    // n = 2: the three index-2 sublattices.
    std::vector<SublatticeClass> cls = sublattice_classes(2);
    REQUIRE(cls.size() == 3);
    std::vector<VectorPair> gens;
    for (const SublatticeClass& c : cls) gens.push_back(c.generators());
    CHECK(std::count(gens.begin(), gens.end(), VectorPair::of({2, 0}, {0, 1})) == 1);
    CHECK(std::count(gens.begin(), gens.end(), VectorPair::of({2, 0}, {1, 1})) == 1);
    CHECK(std::count(gens.begin(), gens.end(), VectorPair::of({1, 0}, {0, 2})) == 1);

    // Generators have determinant n, and the spanned lattices are pairwise
    // distinct (distinct Hermite forms).
    for (Int n = 1; n <= 60; ++n) {
        std::set<Hnf> forms;
        for (const SublatticeClass& c : sublattice_classes(n)) {
            VectorPair g = c.generators();
            CHECK(det(g.x, g.y) == n);
            forms.insert(hermite_normal_form(g));
        }
        CHECK(Int(forms.size()) == sigma1(n));
    }
}

TEST_CASE("hermite normal form is a lattice invariant") {
    CHECK(hermite_normal_form(VectorPair::of({1, 0}, {0, 1})) == Hnf{1, 0, 1});
    CHECK(hermite_normal_form(VectorPair::of({2, 0}, {1, 1})) == Hnf{2, 1, 1});
    CHECK(hermite_normal_form(VectorPair::of({0, 1}, {1, 0})) == Hnf{1, 0, 1});

    // Unimodular basis changes do not move the form.
    std::vector<VectorPair> bases = {VectorPair::of({3, 1}, {1, 2}),
                                     VectorPair::of({5, 0}, {2, 1}),
                                     VectorPair::of({-4, 6}, {10, 2})};
    for (const VectorPair& p : bases) {
        Hnf h = hermite_normal_form(p);
        CHECK(hermite_normal_form(VectorPair::of(p.x + p.y, p.y)) == h);
        CHECK(hermite_normal_form(VectorPair::of(p.x, p.y - p.x)) == h);
        CHECK(hermite_normal_form(VectorPair::of(p.y, p.x)) == h);
        CHECK(h.a * h.d == std::abs(p.d));
        CHECK(0 <= h.c);
        CHECK(h.c < h.a);
    }
    CHECK_THROWS_AS(hermite_normal_form(VectorPair::of({2, 1}, {4, 2})), std::domain_error);
}

TEST_CASE("coprime pairs stream in row order without duplicates") {
    std::vector<std::pair<Int, Int>> got = coprime_pairs(10);
    std::vector<std::pair<Int, Int>> want;
    for (Int b = 1; b <= 10; ++b)
        for (Int d = 1; d <= 10; ++d)
            if (std::gcd(b, d) == 1) want.emplace_back(b, d);
    CHECK(got == want);
    CHECK(got.front() == std::pair<Int, Int>{1, 1});
}

TEST_CASE("zero-sum triples at coefficient box 1") {
    Int total = 0, collinear = 0;
    visit_triples(1, [&](Int, Int, Int, Int, Int d, bool coll) {
        ++total;
        if (coll) ++collinear;
        CHECK(coll == (d == 0));
    });
    // 8 choices for w1, 8 for w2, minus the 8 with w2 = -w1 (w3 = 0).
    CHECK(total == 56);
    // Collinear survivors at box 1 are exactly w2 = w1.
    CHECK(collinear == 8);
}
