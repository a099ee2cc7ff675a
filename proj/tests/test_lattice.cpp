#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "telesum/exact.hpp"
#include "telesum/lattice.hpp"

using namespace telesum;

TEST_CASE("integer kernels are exact") {
    Vec2 e1{1, 0}, e2{0, 1};
    CHECK(det(e1, e2) == 1);
    CHECK(det(e2, e1) == -1);
    CHECK(dot(Vec2{3, 4}, Vec2{4, -3}) == 0);
    CHECK(norm_sq(Vec2{3, 4}) == 25);
    CHECK(norm(Vec2{3, 4}) == doctest::Approx(5.0).epsilon(1e-15));

    // 128-bit intermediates: coordinates near 2^31 square without overflow.
    Int big = Int(1) << 31;
    CHECK(norm_sq(Vec2{big, big}) == Int128(2) * big * big);
    CHECK(det(Vec2{big, 1}, Vec2{1, big}) == Int128(big) * big - 1);
    CHECK(to_string(det(Vec2{big, 1}, Vec2{1, big})) == "4611686018427387903");
}

TEST_CASE("f_kernel matches hand values and rejects zero vectors") {
    CHECK(f_kernel({1, 0}, {0, 1}) == 0.0);
    CHECK(f_kernel({1, 0}, {1, 1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f_kernel({2, 1}, {1, 1}) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK_THROWS_AS(f_kernel({0, 0}, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(f_kernel({1, 1}, {0, 0}), std::domain_error);
}

TEST_CASE("defect equals |x|+|y|-|x+y| and survives cancellation") {
    // 3-4-5 triangle: defect is exactly 3 + 4 - 5.
    CHECK(defect({3, 0}, {0, 4}) == doctest::Approx(2.0).epsilon(1e-15));
    // Collinear same direction: no gap.
    CHECK(defect({1, 0}, {2, 0}) == 0.0);
    // Opposite directions: |x| + |y| remains.
    CHECK(defect({1, 0}, {-1, 0}) == doctest::Approx(2.0).epsilon(1e-15));

    // Nearly collinear long pair, where the naive form loses every digit:
    // x = (1,0), y = (N,1): defect = 1 + sqrt(N^2+1) - sqrt((N+1)^2+1).
    Int n = 100000;
    double naive = 1.0 + std::hypot(double(n), 1.0) - std::hypot(double(n) + 1.0, 1.0);
    double stable = defect({1, 0}, {n, 1});
    CHECK(stable > 0.0);
    // Reference via Lagrange's identity, |x|^2|y|^2 - dot^2 = det^2 = 1, so
    // the numerator is exact and long double carries the rest.
    long double ny = std::sqrt((long double)(n) * n + 1.0L);
    long double ns = std::sqrt(((long double)n + 1.0L) * (n + 1.0L) + 1.0L);
    double ref = double(2.0L / ((ny + (long double)n) * (1.0L + ny + ns)));
    CHECK(stable == doctest::Approx(ref).epsilon(1e-12));
    CHECK(std::abs(naive - stable) <= 1e-10);  // naive is near the noise floor here
}

TEST_CASE("defect is nonnegative on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> coord(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        Vec2 x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(defect(x, y) >= 0.0);
    }
}

TEST_CASE("angle uses the exact (det, dot) pair") {
    CHECK(angle({1, 0}, {0, 1}) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(angle({1, 0}, {1, 1}) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    CHECK(angle({1, 0}, {1, 0}) == 0.0);
    CHECK(angle({1, 0}, {-1, 0}) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    // Unsigned: swapping arguments changes nothing.
    CHECK(angle({2, 1}, {1, 1}) == angle({1, 1}, {2, 1}));
    CHECK_THROWS_AS(angle({0, 0}, {1, 0}), std::domain_error);
}

TEST_CASE("det-1 pairs satisfy F = sin(t)cos(t) and |F - t| <= t^3") {
    // For |det| = 1, sin(t) = 1/(|x||y|) and cos(t) = dot/(|x||y|), so
    // F = dot/(|x|^2 |y|^2) is exactly sin(t)cos(t).
    std::vector<std::pair<Vec2, Vec2>> pairs = {
        {{1, 0}, {1, 1}}, {{2, 1}, {1, 1}}, {{5, 2}, {2, 1}}, {{8, 3}, {5, 2}},
        {{13, 5}, {5, 2}}, {{1, 0}, {9, 1}}, {{7, 1}, {6, 1}}};
    for (auto [x, y] : pairs) {
        REQUIRE(det(x, y) == 1);
        double t = angle(x, y);
        double f = f_kernel(x, y);
        CHECK(f == doctest::Approx(std::sin(t) * std::cos(t)).epsilon(1e-13));
        CHECK(std::abs(f - t) <= t * t * t);
    }
}

TEST_CASE("VectorPair caches the determinant and orders lexicographically") {
    VectorPair p = VectorPair::of({2, 1}, {1, 1});
    CHECK(p.d == 1);
    VectorPair q = VectorPair::of({1, 1}, {-1, 1});
    CHECK(q.d == 2);
    CHECK(VectorPair::of({1, 0}, {0, 1}) < p);
    CHECK(!(p < p));
    CHECK(p == p);
    // Determinants beyond 64 bits are refused rather than truncated.
    Int h = Int(1) << 62;
    CHECK_THROWS_AS(VectorPair::of({h, 0}, {0, h}), std::overflow_error);
}

TEST_CASE("exact kernel closed form holds on random pairs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> coord(-50, 50);
    int tested = 0;
    while (tested < 300) {
        Vec2 x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
        if (x.is_zero() || y.is_zero() || (x + y).is_zero()) continue;
        Rational r = telescope_residual(x, y);  // throws if the identity breaks
        BigInt d = big(det(x, y));
        CHECK(r == Rational(-2 * d * d, big(norm_sq(x)) * big(norm_sq(y)) * big(norm_sq(x + y))));
        ++tested;
    }
}

TEST_CASE("scalar kernel identities vanish identically") {
    CHECK(scalar_kernel_identities(1, 1).all_zero());
    CHECK(scalar_kernel_identities(3, 7).all_zero());
    CHECK(scalar_kernel_identities(123456, 987654).all_zero());
    CHECK_THROWS_AS(scalar_kernel_identities(0, 1), std::domain_error);
}

TEST_CASE("rational tree sums agree at small boxes") {
    for (Int box = 1; box <= 8; ++box) {
        TreeRationalSums s = theorem1_rational(box);
        CHECK(s.equal());
        CHECK(s.direct > 0);
    }
    // Box 1 by hand: 1/2 + 1/10 + 1/10 = 7/10.
    CHECK(theorem1_rational(1).direct == Rational(7, 10));
}
