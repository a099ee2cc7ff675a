#include "telesum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "telesum/accumulate.hpp"
#include "telesum/exact.hpp"
#include "telesum/numtheory.hpp"
#include "telesum/series.hpp"

namespace telesum {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

double rel_to(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

// Accumulates "measured <= gate" clauses and a readable trace of each.
struct Gate {
    bool ok = true;
    std::ostringstream out;

    void bound(const char* label, double measured, double limit) {
        bool pass = measured <= limit;
        ok = ok && pass;
        out << (pass ? "" : "!!") << label << "=" << measured << " (<=" << limit << ") ";
    }
    void truth(const char* label, bool pass) {
        ok = ok && pass;
        out << (pass ? "" : "!!") << label << "=" << (pass ? "yes" : "NO") << " ";
    }
};

CheckResult finish(const std::string& id, Gate& g, Clock::time_point start) {
    CheckResult r;
    r.id = id;
    r.pass = g.ok;
    r.detail = g.out.str();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

std::vector<VectorPair> sorted(std::vector<VectorPair> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// 1. The Theorem 1 limit through the boundary route.
CheckResult check_theorem1_limit(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    struct Step { Int box; double tol; };
    // Tolerances pinned from convergence runs: measured 3.2e-8 at N=500 and
    // 5.1e-10 at N=2000, so these gates keep two orders of headroom.
    std::vector<Step> steps = lv == VerifyLevel::full
                                  ? std::vector<Step>{{500, 1e-6}, {2000, 1e-7}}
                                  : std::vector<Step>{{500, 1e-6}};
    for (auto [box, tol] : steps) {
        SumResult r = theorem1_boundary(TruncationSpec::coord_box(box));
        std::string label = "err_N" + std::to_string(box);
        g.bound(label.c_str(), std::abs(4.0 * r.value - kPi), tol);
        g.bound(("ms_N" + std::to_string(box)).c_str(), r.elapsed_ms, 2000.0);
    }
    return finish("01-theorem1-limit", g, t0);
}

// 2. direct == boundary, floating to 1e-12 relative and rationally exact.
CheckResult check_theorem1_identity(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    std::vector<Int> boxes = lv == VerifyLevel::full ? std::vector<Int>{10, 100, 1000}
                                                     : std::vector<Int>{10, 100};
    for (Int box : boxes) {
        TruncationSpec spec = TruncationSpec::coord_box(box);
        double d = theorem1_direct(spec).value;
        double b = theorem1_boundary(spec).value;
        g.bound(("rel_N" + std::to_string(box)).c_str(), std::abs(d - b) / std::abs(d), 1e-12);
    }
    Int rational_max = lv == VerifyLevel::full ? 20 : 12;
    bool exact = true;
    for (Int box = 1; box <= rational_max; ++box) exact = exact && theorem1_rational(box).equal();
    g.truth("rational_equal", exact);
    return finish("02-theorem1-exact-identity", g, t0);
}

// 3. Boundary angles partition the quadrant.
CheckResult check_angle_partition(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    std::vector<Int> boxes = lv == VerifyLevel::full ? std::vector<Int>{1, 10, 100, 1000}
                                                     : std::vector<Int>{1, 10, 100};
    for (Int box : boxes) {
        KahanAccumulator acc;
        visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2, bool boundary) {
            if (boundary) acc.add(angle(x, y));
        });
        g.bound(("err_N" + std::to_string(box)).c_str(), std::abs(acc.value() - kPi / 2.0),
                1e-12);
    }
    return finish("03-angle-partition", g, t0);
}

// 4. Tree and line-solver enumerations equal their quadruple-loop oracles.
CheckResult check_oracle_equivalence(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int tree_max = lv == VerifyLevel::full ? 60 : 25;
    bool tree_ok = true;
    for (Int box = 1; box <= tree_max && tree_ok; ++box)
        tree_ok = sorted(tree_cut(TruncationSpec::coord_box(box)).interior) ==
                  unimodular_oracle(box);
    g.truth("tree_vs_oracle", tree_ok);
    std::vector<Int> boxes = lv == VerifyLevel::full ? std::vector<Int>{5, 30}
                                                     : std::vector<Int>{5, 15};
    bool detn_ok = true;
    for (Int n = 1; n <= 4; ++n)
        for (Int box : boxes)
            detn_ok = detn_ok && sorted(detn_pairs(n, box)) == sorted(detn_oracle(n, box));
    g.truth("detn_vs_oracle", detn_ok);
    return finish("04-oracle-equivalence", g, t0);
}

// 5. Theorem 2 limit and its finite identity.
CheckResult check_theorem2(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    double ref = kPi / 2.0 - 1.0;
    Int big_box = lv == VerifyLevel::full ? 2000 : 500;
    // Pinned: measured 6.3e-11 at N=2000, 4.0e-9 at N=500.
    double big_tol = lv == VerifyLevel::full ? 1e-8 : 1e-6;
    SumResult b = theorem2(TruncationSpec::coord_box(big_box), Method::boundary);
    g.bound("limit_err", std::abs(b.value - ref), big_tol);
    std::vector<Int> boxes = lv == VerifyLevel::full ? std::vector<Int>{10, 100, 1000}
                                                     : std::vector<Int>{10, 100};
    for (Int box : boxes) {
        TruncationSpec spec = TruncationSpec::coord_box(box);
        double d = theorem2(spec, Method::direct).value;
        double bb = theorem2(spec, Method::boundary).value;
        g.bound(("rel_N" + std::to_string(box)).c_str(), std::abs(d - bb) / std::abs(d), 1e-12);
    }
    return finish("05-theorem2", g, t0);
}

// 6. The two tropical sums.
CheckResult check_tropical(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int n1 = lv == VerifyLevel::full ? 4000 : 1000;
    // Pinned: measured 1.0e-3 at N=4000, 3.6e-3 at N=1000.
    double tol1 = lv == VerifyLevel::full ? 3e-3 : 1.5e-2;
    Int n2 = 1000;
    auto [lin1, sq1] = tropical_sums(TruncationSpec::coord_box(n1));
    g.bound("defect_rel", rel_to(lin1.value, 2.0), tol1);
    auto [lin2, sq2] = tropical_sums(TruncationSpec::coord_box(n2));
    (void)lin2;
    g.bound("defect_sq_err", std::abs(sq2.value - (2.0 - kPi / 2.0)), 1e-7);
    return finish("06-tropical-sums", g, t0);
}

// 7. Mordell-Tornheim values, the recurrence, and the exact scalar kernels.
CheckResult check_mt(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int bound = lv == VerifyLevel::full ? 2000 : 500;
    MTIndex i222 = MTIndex::of(2, 2, 2);
    double c222 = mt_scalar(i222, bound, true).value;
    double a222 = mt_scalar(i222, bound, false).value;
    double c123 = mt_scalar(MTIndex::of(1, 2, 3), bound, true).value;
    double c213 = mt_scalar(MTIndex::of(2, 1, 3), bound, true).value;
    // Pinned: measured 1.4e-10 at bound 2000, 8.6e-9 at bound 500; the
    // recurrence cancels termwise, so its residual is pure rounding noise.
    double tol = lv == VerifyLevel::full ? 1e-8 : 1e-6;
    g.bound("coprime_err", std::abs(c222 - 1.0 / 3.0), tol);
    g.bound("allpairs_err", std::abs(a222 - zeta(6.0) / 3.0), tol);
    g.bound("recurrence_err", std::abs(c222 - c123 - c213), 1e-12);
    int trials = lv == VerifyLevel::full ? 10000 : 1000;
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<Int> dist(1, 1000000);
    bool kernels = true;
    for (int i = 0; i < trials && kernels; ++i)
        kernels = scalar_kernel_identities(dist(rng), dist(rng)).all_zero();
    g.truth("scalar_kernels_zero", kernels);
    return finish("07-mordell-tornheim", g, t0);
}

// 8. Theorem 3 values, the factor-2 link to Theorem 1, sublattice counts.
CheckResult check_theorem3(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int box = lv == VerifyLevel::full ? 500 : 200;
    Int n_max = lv == VerifyLevel::full ? 6 : 4;
    // Pinned: measured 2.6e-7 worst case at N=500, 1.9e-6 at N=200.
    double tol = lv == VerifyLevel::full ? 1e-5 : 1e-4;
    for (Int n = 1; n <= n_max; ++n) {
        double ref = kPi / (2.0 * double(n)) * double(sigma1(n));
        double v = theorem3(n, TruncationSpec::coord_box(box)).sum.value;
        g.bound(("rel_n" + std::to_string(n)).c_str(), rel_to(v, ref), tol);
    }
    double t3 = theorem3(1, TruncationSpec::coord_box(box)).sum.value;
    double t1 = theorem1_direct(TruncationSpec::coord_box(box)).value;
    g.bound("half_plane_vs_quadrant", std::abs(t3 - 2.0 * t1) / (kPi / 2.0), tol);
    Int class_max = lv == VerifyLevel::full ? 10000 : 2000;
    std::vector<Int> sieve = sigma1_table(class_max);
    bool counts = true;
    for (Int n = 1; n <= class_max && counts; ++n)
        counts = Int(sublattice_classes(n).size()) == sieve[std::size_t(n)];
    g.truth("class_counts", counts);
    return finish("08-theorem3", g, t0);
}

// 9. The divisor Dirichlet series and the zeta closed forms.
CheckResult check_dirichlet(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int cutoff = lv == VerifyLevel::full ? 10000 : 2000;
    // Pinned: the true tail is 1.64e-4 past 10^4 and 8.2e-4 past 2000.
    double tol = lv == VerifyLevel::full ? 2e-4 : 1e-3;
    DirichletSigmaCheck r = dirichlet_sigma_check(3.0, cutoff);
    g.bound("residual", r.residual(), tol);
    g.truth("within_proven_tail", r.within_bound());
    g.bound("zeta2_rel", rel_to(zeta(2.0), kPi * kPi / 6.0), 1e-12);
    g.bound("zeta4_rel", rel_to(zeta(4.0), std::pow(kPi, 4) / 90.0), 1e-12);
    return finish("09-dirichlet-sigma", g, t0);
}

// 10. The D_111 decomposition against 2E(i,3) + pi^3 zeta(3).
CheckResult check_d111(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int box = lv == VerifyLevel::full ? 40 : 16;
    LatticeShape zi = LatticeShape::of(0.0, 1.0);
    D111Result r = d111(zi, TruncationSpec::coeff_box(box));
    double e_i3 = eisenstein(zi, 3.0, TruncationSpec::coeff_box(200)).value;
    double ref = 2.0 * e_i3 + std::pow(kPi, 3) * zeta(3.0);
    // Pinned: measured 8.4e-4 / 6.5e-5 at M=40 and 3.9e-3 / 9.6e-4 at M=16.
    g.bound("total_plus_hint_rel", std::abs(r.total.value + *r.total.tail_hint - ref) / ref,
            lv == VerifyLevel::full ? 5e-3 : 1e-2);
    g.bound("collinear_rel", rel_to(r.collinear.value, 2.0 * e_i3),
            lv == VerifyLevel::full ? 1e-3 : 5e-3);
    g.truth("partition_exact", r.total.value == r.collinear.value + r.noncollinear.value);
    bool small_partitions = true;
    for (Int m = 1; m <= 4; ++m) {
        D111Result s = d111(zi, TruncationSpec::coeff_box(m));
        small_partitions = small_partitions &&
                           s.total.value == s.collinear.value + s.noncollinear.value;
        if (m == 1) g.truth("m1_triple_count", s.total.terms == 56);
    }
    g.truth("partition_small_m", small_partitions);
    g.bound("ms", r.total.elapsed_ms, 60000.0);
    return finish("10-d111-zagier", g, t0);
}

// 11. Theorem 4 at s in {0, 1}, its s=0 tie to d111, and the y-scaling.
CheckResult check_theorem4(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int box = lv == VerifyLevel::full ? 40 : 16;
    // Pinned: measured 3.7e-3 worst case at M=40; M=16 sits at 1.8e-2, so the
    // fast gate stays at the original bound.
    double tol = lv == VerifyLevel::full ? 1e-2 : 2e-2;
    TruncationSpec spec = TruncationSpec::coeff_box(box);
    LatticeShape zi = LatticeShape::of(0.0, 1.0);
    LatticeShape z2i = LatticeShape::of(0.0, 2.0);
    SumResult s0 = theorem4(zi, 0.0, spec);
    SumResult s1 = theorem4(zi, 1.0, spec);
    g.bound("s0_rel", rel_to(s0.value, 6.0 * kPi * zeta(3.0) * zeta(2.0)), tol);
    g.bound("s1_rel", rel_to(s1.value, 6.0 * kPi * zeta(4.0) * zeta(3.0)), tol);
    D111Result d = d111(zi, spec);
    g.truth("s0_equals_noncollinear", s0.value == d.noncollinear.value);
    for (double s : {0.0, 1.0}) {
        double ratio = theorem4(z2i, s, spec).value /
                       (s == 0.0 ? s0.value : s1.value);
        std::string label = "scaling_rel_s" + std::to_string(int(s));
        g.bound(label.c_str(), std::abs(ratio * 8.0 - 1.0), tol);
    }
    return finish("11-theorem4", g, t0);
}

// 12. Telescoped enumeration beats the O(N^4) oracle at an identical set.
CheckResult check_performance(VerifyLevel lv) {
    auto t0 = Clock::now();
    Gate g;
    Int box = lv == VerifyLevel::full ? 200 : 120;
    auto t_tree = Clock::now();
    TreeCut cut = tree_cut(TruncationSpec::coord_box(box));
    double tree_ms = std::chrono::duration<double, std::milli>(Clock::now() - t_tree).count();
    auto t_oracle = Clock::now();
    std::vector<VectorPair> oracle = unimodular_oracle(box);
    double oracle_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t_oracle).count();
    g.truth("identical_sets", sorted(cut.interior) == oracle);
    g.bound("min_speedup_inverse", 20.0 * tree_ms, oracle_ms);  // oracle >= 20x tree
    SumResult b = theorem1_boundary(TruncationSpec::coord_box(500));
    g.bound("boundary_err", std::abs(4.0 * b.value - kPi), 1e-6);
    g.bound("boundary_ms", b.elapsed_ms, 2000.0);
    g.out << "tree_ms=" << tree_ms << " oracle_ms=" << oracle_ms << " ";
    return finish("12-performance", g, t0);
}

}  // namespace

const std::vector<Check>& verification_checks() {
    static const std::vector<Check> checks = {
        {"01-theorem1-limit", check_theorem1_limit},
        {"02-theorem1-exact-identity", check_theorem1_identity},
        {"03-angle-partition", check_angle_partition},
        {"04-oracle-equivalence", check_oracle_equivalence},
        {"05-theorem2", check_theorem2},
        {"06-tropical-sums", check_tropical},
        {"07-mordell-tornheim", check_mt},
        {"08-theorem3", check_theorem3},
        {"09-dirichlet-sigma", check_dirichlet},
        {"10-d111-zagier", check_d111},
        {"11-theorem4", check_theorem4},
        {"12-performance", check_performance},
    };
    return checks;
}

bool run_verification(VerifyLevel level, std::ostream& out) {
    bool all = true;
    for (const Check& c : verification_checks()) {
        CheckResult r = c.run(level);
        all = all && r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.elapsed_ms << " ms]  "
            << r.detail << "\n";
    }
    out << (all ? "verification: all checks passed" : "verification: FAILURES above") << "\n";
    return all;
}

}  // namespace telesum
