#pragma once

// Evaluators for every sum exposed by the library. Each telescoping sum has
// a direct form (sum over tree interior) and a boundary form (sum over the
// pruned frontier); the two are equal at every finite cut, not just in the
// limit, and that finite identity is what the verification suite leans on.

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

#include "telesum/enumerate.hpp"
#include "telesum/lattice.hpp"

namespace telesum {

enum class Method { direct, boundary, oracle };
const char* method_name(Method m);

struct EvalOptions {
    bool compensated = true;  // Neumaier-compensated accumulation
    int threads = 1;          // > 1 enables chunked deterministic reduction
};

struct SumResult {
    double value = 0.0;
    std::uint64_t terms = 0;
    TruncationSpec spec = TruncationSpec::coord_box(1);
    Method method = Method::direct;
    std::optional<double> tail_hint;  // heuristic, never a proven bound
    double elapsed_ms = 0.0;
};

// The lattice Z z + Z, z = re + i*im with im > 0; the coefficient pair
// (m, n) embeds as omega = m z + n with |omega|^2 = (m re + n)^2 + (m im)^2.
struct LatticeShape {
    double re = 0.0;
    double im = 1.0;

    static LatticeShape of(double re, double im) {
        if (!(im > 0.0)) throw std::domain_error("LatticeShape: im must be > 0");
        return {re, im};
    }
    double norm_sq(Int m, Int n) const {
        double u = double(m) * re + double(n);
        double v = double(m) * im;
        return u * u + v * v;
    }
};

// Exponent triple of the scalar double series
// (k, n, m) = sum over coprime b, d > 0 of 1/(b^k d^n (b+d)^m).
struct MTIndex {
    Int k = 0;
    Int n = 0;
    Int m = 0;

    static MTIndex of(Int k, Int n, Int m);  // enforces convergence guards
};

// sum over interior pairs of 1/(|x|^2 |y|^2 |x+y|^2); 4x the value tends
// to pi.
SumResult theorem1_direct(const TruncationSpec& spec, const EvalOptions& opts = {});

// Equal route: (1/2) * sum over boundary pairs of F(x,x+y) + F(x+y,y).
SumResult theorem1_boundary(const TruncationSpec& spec, const EvalOptions& opts = {});

// sum of (|x|+|y|-|x+y|) / (|x||y||x+y|); direct sums over the interior,
// boundary sums 1/(|u||v|) over the frontier's child pairs and subtracts
// the root term 1. Both tend to pi/2 - 1.
SumResult theorem2(const TruncationSpec& spec, Method method, const EvalOptions& opts = {});

// (sum of defects, sum of squared defects) over interior pairs; the limits
// are 2 and 2 - pi/2.
std::pair<SumResult, SumResult> tropical_sums(const TruncationSpec& spec,
                                              const EvalOptions& opts = {});

// Truncated scalar series over positive pairs b, d <= bound, coprime only
// or all pairs. Limits: coprime (2,2,2) = 1/3, all-pairs (2,2,2) = zeta(6)/3.
SumResult mt_scalar(const MTIndex& idx, Int bound, bool coprime_only,
                    const EvalOptions& opts = {});

// sum over det-n half-plane pairs of n^2/(|x|^2 |y|^2 |x+y|^2), limit
// (pi/(2n)) sigma_1(n). normalized drops the n^2 (limit (pi/2) sigma_1(n)/n^3);
// axis_ray_subtotal isolates the terms with a vector on the positive x-axis
// so either reading of the summation domain can be audited.
struct Theorem3Result {
    SumResult sum;
    double normalized = 0.0;
    double axis_ray_subtotal = 0.0;
};
Theorem3Result theorem3(Int n, const TruncationSpec& spec, const EvalOptions& opts = {});

// E(z, s) = (1/2) sum over (m,n) != (0,0) of im^s / |m z + n|^(2s), truncated
// to the coefficient box. Requires s > 1; tail_hint is the heuristic
// pi * im^s * M^(2-2s) / (s-1).
SumResult eisenstein(const LatticeShape& shape, double s, const TruncationSpec& spec,
                     const EvalOptions& opts = {});

// D_111 truncation: sum of im^3/(|w1|^2 |w2|^2 |w3|^2) over zero-sum triples,
// split by collinearity of the coefficient pairs. total is defined as
// collinear + noncollinear (one pass, two accumulators), so the partition is
// exact at every M. Limits: collinear -> 2 E(z,3), total -> 2 E(z,3) + pi^3 zeta(3).
struct D111Result {
    SumResult total;
    SumResult collinear;
    SumResult noncollinear;
};
D111Result d111(const LatticeShape& shape, const TruncationSpec& spec,
                const EvalOptions& opts = {});

// sum over non-collinear zero-sum triples of
// |m1 n2 - m2 n1|^(-s) / (|w1|^2 |w2|^2 |w3|^2), limit (6 pi / im^3)
// zeta(s+3) zeta(s+2). Collinear triples are excluded for every s >= 0: a
// det = 0 term with weight det^(-s) is an infinite summand removed by the
// primed sum, and keeping that convention at s = 0 is what makes this sum
// the noncollinear part of d111 (they match term for term when im = 1).
SumResult theorem4(const LatticeShape& shape, double s, const TruncationSpec& spec,
                   const EvalOptions& opts = {});

// Four routes to pi^3 zeta(3), reported with consecutive residuals:
//   a. noncollinear part of d111(i) at coefficient box M
//   b. 12 * sum over n <= n_series of the normalized theorem3 value at box N
//   c. 12 * sum over n of (pi/2) sigma_1(n)/n^3, evaluated both at n_series
//      (so b-vs-c isolates route b's per-n box truncation) and at n_exact
//      (so c-vs-d shows only the divisor-series tail)
//   d. 6 pi zeta(3) zeta(2) = pi^3 zeta(3)
// The residual gates default to values pinned by convergence runs against the
// default truncations; callers shrinking the truncations must widen them.
struct ZagierChainConfig {
    Int coeff_box = 40;   // M for route a
    Int n_series = 40;    // det-n values summed in route b
    Int box = 600;        // per-n truncation for route b
    Int n_exact = 10000;  // divisor-sum cutoff for route c
    // Measured at the defaults: rel_ab 1.7e-2, rel_bc 1.4e-7, rel_cd 8.3e-5,
    // rel_ad 3.7e-3.
    double tol_ab = 2.5e-2;
    double tol_bc = 1e-4;
    double tol_cd = 2e-4;
    double tol_ad = 1e-2;
};
struct ZagierChainReport {
    ZagierChainConfig config;
    double a_noncollinear = 0.0;
    double b_detn_partial = 0.0;
    double c_series_partial = 0.0;  // route c cut at n_series
    double c_dirichlet_partial = 0.0;
    double d_closed_form = 0.0;
    // |a-b|, |b-c @ n_series|, |c-d|, |a-d|, all relative to d
    double rel_ab = 0.0, rel_bc = 0.0, rel_cd = 0.0, rel_ad = 0.0;
    bool pass() const {
        return rel_ab <= config.tol_ab && rel_bc <= config.tol_bc && rel_cd <= config.tol_cd &&
               rel_ad <= config.tol_ad;
    }
};
ZagierChainReport zagier_chain(const ZagierChainConfig& config = {},
                               const EvalOptions& opts = {});

}  // namespace telesum
