#include "telesum/series.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "telesum/accumulate.hpp"
#include "telesum/numtheory.hpp"

namespace telesum {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

double ipow(double base, Int e) {
    double r = 1.0;
    for (Int i = 0; i < e; ++i) r *= base;
    return r;
}

Int coord_box_of(const TruncationSpec& spec, const char* what) {
    if (spec.kind != TruncationSpec::Kind::coord_box)
        throw std::invalid_argument(std::string(what) + ": needs a coordinate-box truncation");
    return spec.bound;
}

Int coeff_box_of(const TruncationSpec& spec, const char* what) {
    if (spec.kind != TruncationSpec::Kind::coeff_box)
        throw std::invalid_argument(std::string(what) + ": needs a coefficient-box truncation");
    return spec.bound;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::boundary: return "boundary";
        case Method::oracle: return "oracle";
    }
    return "?";
}

MTIndex MTIndex::of(Int k, Int n, Int m) {
    if (k < 0 || n < 0 || m < 0)
        throw std::domain_error("mt_scalar: exponents must be nonnegative");
    if (k + m < 2 || n + m < 2 || k + n + m < 3)
        throw std::domain_error("mt_scalar: exponent triple does not converge");
    return {k, n, m};
}

SumResult theorem1_direct(const TruncationSpec& spec, const EvalOptions& opts) {
    Int box = coord_box_of(spec, "theorem1_direct");
    Stopwatch sw;
    Accumulator acc(opts.compensated);
    std::uint64_t terms = 0;
    visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2 med, bool) {
        acc.add(1.0 / (to_double(norm_sq(x)) * to_double(norm_sq(y)) * to_double(norm_sq(med))));
        ++terms;
    });
    return {acc.value(), terms, spec, Method::direct, std::nullopt, sw.ms()};
}

SumResult theorem1_boundary(const TruncationSpec& spec, const EvalOptions& opts) {
    Int box = coord_box_of(spec, "theorem1_boundary");
    Stopwatch sw;
    Accumulator acc(opts.compensated);
    std::uint64_t terms = 0;
    visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2 med, bool boundary) {
        if (!boundary) return;
        acc.add(0.5 * (f_kernel(x, med) + f_kernel(med, y)));
        ++terms;
    });
    return {acc.value(), terms, spec, Method::boundary, std::nullopt, sw.ms()};
}

namespace {

// Shared by the direct and oracle methods of theorem2.
double theorem2_term(Vec2 x, Vec2 y) {
    return defect(x, y) / (norm(x) * norm(y) * norm(x + y));
}

}  // namespace

SumResult theorem2(const TruncationSpec& spec, Method method, const EvalOptions& opts) {
    Int box = coord_box_of(spec, "theorem2");
    Stopwatch sw;
    Accumulator acc(opts.compensated);
    std::uint64_t terms = 0;
    switch (method) {
        case Method::direct:
            visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2, bool) {
                acc.add(theorem2_term(x, y));
                ++terms;
            });
            break;
        case Method::boundary:
            visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2 med, bool boundary) {
                if (!boundary) return;
                acc.add(1.0 / (norm(x) * norm(med)) + 1.0 / (norm(med) * norm(y)));
                ++terms;
            });
            acc.add(-1.0);  // the telescoped root term 1/(|e1||e2|)
            break;
        case Method::oracle:
            for (const VectorPair& p : unimodular_oracle(box)) {
                acc.add(theorem2_term(p.x, p.y));
                ++terms;
            }
            break;
    }
    return {acc.value(), terms, spec, method, std::nullopt, sw.ms()};
}

std::pair<SumResult, SumResult> tropical_sums(const TruncationSpec& spec,
                                              const EvalOptions& opts) {
    Int box = coord_box_of(spec, "tropical_sums");
    Stopwatch sw;
    Accumulator lin(opts.compensated), sq(opts.compensated);
    std::uint64_t terms = 0;
    visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2, bool) {
        double d = defect(x, y);
        lin.add(d);
        sq.add(d * d);
        ++terms;
    });
    double ms = sw.ms();
    return {SumResult{lin.value(), terms, spec, Method::direct, std::nullopt, ms},
            SumResult{sq.value(), terms, spec, Method::direct, std::nullopt, ms}};
}

SumResult mt_scalar(const MTIndex& idx, Int bound, bool coprime_only, const EvalOptions& opts) {
    MTIndex::of(idx.k, idx.n, idx.m);  // re-validate (callers may aggregate-init)
    if (bound < 1) throw std::domain_error("mt_scalar: bound must be >= 1");
    Stopwatch sw;
    Accumulator acc(opts.compensated);
    std::uint64_t terms = 0;
    for (Int b = 1; b <= bound; ++b)
        for (Int d = 1; d <= bound; ++d) {
            if (coprime_only && std::gcd(b, d) != 1) continue;
            acc.add(1.0 /
                    (ipow(double(b), idx.k) * ipow(double(d), idx.n) * ipow(double(b + d), idx.m)));
            ++terms;
        }
    TruncationSpec spec = TruncationSpec::coord_box(bound);
    return {acc.value(), terms, spec, Method::direct, std::nullopt, sw.ms()};
}

Theorem3Result theorem3(Int n, const TruncationSpec& spec, const EvalOptions& opts) {
    Int box = coord_box_of(spec, "theorem3");
    if (n < 1) throw std::domain_error("theorem3: n must be >= 1");
    Stopwatch sw;
    Accumulator acc(opts.compensated), axis(opts.compensated);
    std::uint64_t terms = 0;
    visit_detn_pairs(n, box, [&](Vec2 x, Vec2 y) {
        double base =
            1.0 / (to_double(norm_sq(x)) * to_double(norm_sq(y)) * to_double(norm_sq(x + y)));
        acc.add(base);
        if (x.b == 0 || y.b == 0) axis.add(base);
        ++terms;
    });
    double n2 = double(n) * double(n);
    Theorem3Result out;
    out.sum = {n2 * acc.value(), terms, spec, Method::direct, std::nullopt, sw.ms()};
    out.normalized = acc.value();
    out.axis_ray_subtotal = n2 * axis.value();
    return out;
}

SumResult eisenstein(const LatticeShape& shape, double s, const TruncationSpec& spec,
                     const EvalOptions& opts) {
    Int box = coeff_box_of(spec, "eisenstein");
    if (!(s > 1.0)) throw std::domain_error("eisenstein: s must be > 1");
    Stopwatch sw;
    Accumulator acc(opts.compensated);
    std::uint64_t terms = 0;
    double ys = std::pow(shape.im, s);
    for (Int m = -box; m <= box; ++m)
        for (Int n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            acc.add(0.5 * ys * std::pow(shape.norm_sq(m, n), -s));
            ++terms;
        }
    // Continuum estimate of the dropped region (point density 1/im): of
    // order pi * im^s * M^(2-2s) / (s-1). Heuristic, not a bound.
    double hint = std::numbers::pi * ys * std::pow(double(box), 2.0 - 2.0 * s) / (s - 1.0);
    return {acc.value(), terms, spec, Method::direct, hint, sw.ms()};
}

namespace {

struct TripleAccum {
    Accumulator collinear;
    Accumulator noncollinear;
    std::uint64_t terms = 0;
    std::uint64_t collinear_terms = 0;

    explicit TripleAccum(bool compensated)
        : collinear(compensated), noncollinear(compensated) {}

    void merge(const TripleAccum& other) {
        collinear.merge(other.collinear);
        noncollinear.merge(other.noncollinear);
        terms += other.terms;
        collinear_terms += other.collinear_terms;
    }
};

// One strip m1 in [m1_lo, m1_hi] of the zero-sum triple scan. Every triple
// hits exactly one bucket, so collinear + noncollinear is an exact partition
// of the stream at any truncation. `weight` is a table indexed by |det| of
// the coefficient pair (entries 0..2*box*box). Deliberately not a template:
// d111 and theorem4 must execute the same machine code so that their
// noncollinear buckets agree bitwise when the weight table is all ones.
void triple_strip(const LatticeShape& z, Int box, Int m1_lo, Int m1_hi, const double* weight,
                  TripleAccum& acc) {
    for (Int m1 = m1_lo; m1 <= m1_hi; ++m1)
        for (Int n1 = -box; n1 <= box; ++n1) {
            if (m1 == 0 && n1 == 0) continue;
            double q1 = z.norm_sq(m1, n1);
            for (Int m2 = -box; m2 <= box; ++m2)
                for (Int n2 = -box; n2 <= box; ++n2) {
                    if (m2 == 0 && n2 == 0) continue;
                    Int m3 = m1 + m2, n3 = n1 + n2;
                    if (m3 == 0 && n3 == 0) continue;
                    double base = 1.0 / (q1 * z.norm_sq(m2, n2) * z.norm_sq(m3, n3));
                    Int d = m1 * n2 - m2 * n1;
                    ++acc.terms;
                    if (d == 0) {
                        acc.collinear.add(base);
                        ++acc.collinear_terms;
                    } else {
                        acc.noncollinear.add(weight[std::size_t(d < 0 ? -d : d)] * base);
                    }
                }
        }
}

// Full scan. threads <= 1 runs the flat deterministic loop the tests pin;
// more threads split the m1 range into per-value strips and merge them in
// strip order, so any thread count reproduces the same merged result.
TripleAccum triple_scan(const LatticeShape& z, Int box, const double* weight,
                        const EvalOptions& opts) {
    if (opts.threads <= 1) {
        TripleAccum acc(opts.compensated);
        triple_strip(z, box, -box, box, weight, acc);
        return acc;
    }
    Int strips = 2 * box + 1;
    std::vector<TripleAccum> parts(strips, TripleAccum(opts.compensated));
    std::atomic<Int> next{0};
    auto worker = [&] {
        for (;;) {
            Int i = next.fetch_add(1);
            if (i >= strips) return;
            triple_strip(z, box, -box + i, -box + i, weight, parts[i]);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(opts.threads, int(strips));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    TripleAccum acc(opts.compensated);
    for (const TripleAccum& p : parts) acc.merge(p);
    return acc;
}

}  // namespace

D111Result d111(const LatticeShape& shape, const TruncationSpec& spec, const EvalOptions& opts) {
    Int box = coeff_box_of(spec, "d111");
    Stopwatch sw;
    std::vector<double> unit(std::size_t(2 * box * box + 1), 1.0);
    TripleAccum acc = triple_scan(shape, box, unit.data(), opts);
    double y3 = shape.im * shape.im * shape.im;

    // Heuristic truncation hint: the dominant omission is one small vector
    // paired with one outside the box, estimated by the in-box sum of
    // 1/|w|^2 times the continuum tail pi/(im R^2), twice by symmetry.
    Accumulator s2(opts.compensated);
    for (Int m = -box; m <= box; ++m)
        for (Int n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            s2.add(1.0 / shape.norm_sq(m, n));
        }
    double radius = double(box) * std::min(1.0, shape.im);
    double hint =
        2.0 * y3 * s2.value() * std::numbers::pi / (shape.im * radius * radius);

    double ms = sw.ms();
    D111Result out;
    out.collinear = {y3 * acc.collinear.value(), acc.collinear_terms, spec, Method::direct,
                     std::nullopt, ms};
    out.noncollinear = {y3 * acc.noncollinear.value(), acc.terms - acc.collinear_terms, spec,
                        Method::direct, std::nullopt, ms};
    out.total = {out.collinear.value + out.noncollinear.value, acc.terms, spec, Method::direct,
                 hint, ms};
    return out;
}

SumResult theorem4(const LatticeShape& shape, double s, const TruncationSpec& spec,
                   const EvalOptions& opts) {
    Int box = coeff_box_of(spec, "theorem4");
    if (!(s >= 0.0)) throw std::domain_error("theorem4: s must be >= 0");
    Stopwatch sw;
    // Coefficient determinants are bounded by 2 M^2; table the weights so the
    // hot loop never calls pow.
    std::vector<double> weight(std::size_t(2 * box * box + 1), 1.0);
    for (std::size_t k = 1; k < weight.size(); ++k)
        weight[k] = std::pow(double(k), -s);
    TripleAccum acc = triple_scan(shape, box, weight.data(), opts);
    return {acc.noncollinear.value(), acc.terms - acc.collinear_terms, spec, Method::direct,
            std::nullopt, sw.ms()};
}

ZagierChainReport zagier_chain(const ZagierChainConfig& config, const EvalOptions& opts) {
    if (config.coeff_box < 1 || config.n_series < 1 || config.box < 1 || config.n_exact < 1)
        throw std::domain_error("zagier_chain: truncations must be >= 1");
    if (config.n_series > config.n_exact)
        throw std::domain_error("zagier_chain: n_series must not exceed n_exact");
    ZagierChainReport r;
    r.config = config;

    LatticeShape zi = LatticeShape::of(0.0, 1.0);
    r.a_noncollinear = d111(zi, TruncationSpec::coeff_box(config.coeff_box), opts)
                           .noncollinear.value;

    KahanAccumulator b;
    for (Int n = 1; n <= config.n_series; ++n)
        b.add(theorem3(n, TruncationSpec::coord_box(config.box), opts).normalized);
    r.b_detn_partial = 12.0 * b.value();

    std::vector<Int> sigma = sigma1_table(config.n_exact);
    KahanAccumulator c;
    for (Int n = 1; n <= config.n_exact; ++n) {
        c.add(0.5 * std::numbers::pi * double(sigma[n]) / ipow(double(n), 3));
        if (n == config.n_series) r.c_series_partial = 12.0 * c.value();
    }
    r.c_dirichlet_partial = 12.0 * c.value();

    r.d_closed_form = 6.0 * std::numbers::pi * zeta(3.0) * zeta(2.0);

    double scale = std::abs(r.d_closed_form);
    r.rel_ab = std::abs(r.a_noncollinear - r.b_detn_partial) / scale;
    r.rel_bc = std::abs(r.b_detn_partial - r.c_series_partial) / scale;
    r.rel_cd = std::abs(r.c_dirichlet_partial - r.d_closed_form) / scale;
    r.rel_ad = std::abs(r.a_noncollinear - r.d_closed_form) / scale;
    return r;
}

}  // namespace telesum
