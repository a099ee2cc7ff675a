// Python bindings for the main operations: enumeration, the series
// evaluators, the number-theory helpers, and the JSON report runner.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "telesum/enumerate.hpp"
#include "telesum/exact.hpp"
#include "telesum/numtheory.hpp"
#include "telesum/report.hpp"
#include "telesum/verify.hpp"

namespace py = pybind11;
using namespace telesum;

namespace {

Method method_of(const std::string& name) {
    if (name == "direct") return Method::direct;
    if (name == "boundary") return Method::boundary;
    if (name == "oracle") return Method::oracle;
    throw std::invalid_argument("unknown method: " + name);
}

py::dict sum_dict(const SumResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["terms"] = r.terms;
    d["method"] = method_name(r.method);
    d["elapsed_ms"] = r.elapsed_ms;
    if (r.tail_hint) d["tail_hint"] = *r.tail_hint;
    return d;
}

std::vector<std::tuple<Int, Int, Int, Int, Int>> pack(const std::vector<VectorPair>& v) {
    std::vector<std::tuple<Int, Int, Int, Int, Int>> out;
    out.reserve(v.size());
    for (const VectorPair& p : v) out.emplace_back(p.x.a, p.x.b, p.y.a, p.y.b, p.d);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "telescoped lattice-pair summation and series verification";

    m.def(
        "tree_cut",
        [](Int box) {
            TreeCut cut = tree_cut(TruncationSpec::coord_box(box));
            py::dict d;
            d["interior"] = pack(cut.interior);
            d["boundary"] = pack(cut.boundary);
            return d;
        },
        py::arg("box"),
        "Mediant-tree pairs inside [0, box]^2: all visited nodes plus the pruned frontier.");

    m.def(
        "unimodular_oracle", [](Int box) { return pack(unimodular_oracle(box)); },
        py::arg("box"), "O(N^4) reference enumeration (box <= 200).");

    m.def(
        "detn_pairs", [](Int n, Int box) { return pack(detn_pairs(n, box)); }, py::arg("n"),
        py::arg("box"), "Half-plane pairs with determinant n, coordinates in [-box, box].");

    m.def(
        "sublattice_count", [](Int n) { return Int(sublattice_classes(n).size()); },
        py::arg("n"), "Number of index-n sublattice classes (= sigma1(n)).");

    m.def(
        "theorem1",
        [](Int box, const std::string& method) {
            TruncationSpec spec = TruncationSpec::coord_box(box);
            return sum_dict(method_of(method) == Method::boundary ? theorem1_boundary(spec)
                                                                  : theorem1_direct(spec));
        },
        py::arg("box"), py::arg("method") = "boundary",
        "Unimodular-pair kernel sum; 4x the value tends to pi.");

    m.def(
        "theorem2",
        [](Int box, const std::string& method) {
            return sum_dict(theorem2(TruncationSpec::coord_box(box), method_of(method)));
        },
        py::arg("box"), py::arg("method") = "boundary",
        "Defect-over-norms sum; tends to pi/2 - 1.");

    m.def(
        "tropical_sums",
        [](Int box) {
            auto [lin, sq] = tropical_sums(TruncationSpec::coord_box(box));
            return py::make_tuple(lin.value, sq.value);
        },
        py::arg("box"), "(sum of defects, sum of squared defects); limits 2 and 2 - pi/2.");

    m.def(
        "mt_scalar",
        [](Int k, Int n, Int m, Int bound, bool coprime) {
            return mt_scalar(MTIndex::of(k, n, m), bound, coprime).value;
        },
        py::arg("k"), py::arg("n"), py::arg("m"), py::arg("bound"),
        py::arg("coprime") = true, "Scalar double series over (co)prime positive pairs.");

    m.def(
        "theorem3",
        [](Int n, Int box) {
            Theorem3Result r = theorem3(n, TruncationSpec::coord_box(box));
            py::dict d = sum_dict(r.sum);
            d["normalized"] = r.normalized;
            d["axis_ray_subtotal"] = r.axis_ray_subtotal;
            return d;
        },
        py::arg("n"), py::arg("box"), "Det-n pair sum; tends to (pi/2n) sigma1(n).");

    m.def(
        "eisenstein",
        [](double z_re, double z_im, double s, Int coeff_box) {
            return sum_dict(
                eisenstein(LatticeShape::of(z_re, z_im), s, TruncationSpec::coeff_box(coeff_box)));
        },
        py::arg("z_re"), py::arg("z_im"), py::arg("s"), py::arg("coeff_box"),
        "Non-holomorphic Eisenstein series, truncated.");

    m.def(
        "d111",
        [](double z_re, double z_im, Int coeff_box) {
            D111Result r =
                d111(LatticeShape::of(z_re, z_im), TruncationSpec::coeff_box(coeff_box));
            py::dict d;
            d["total"] = sum_dict(r.total);
            d["collinear"] = sum_dict(r.collinear);
            d["noncollinear"] = sum_dict(r.noncollinear);
            return d;
        },
        py::arg("z_re"), py::arg("z_im"), py::arg("coeff_box"),
        "Triple lattice sum split by collinearity; total = collinear + noncollinear exactly.");

    m.def(
        "theorem4",
        [](double z_re, double z_im, double s, Int coeff_box) {
            return sum_dict(theorem4(LatticeShape::of(z_re, z_im), s,
                                     TruncationSpec::coeff_box(coeff_box)));
        },
        py::arg("z_re"), py::arg("z_im"), py::arg("s"), py::arg("coeff_box"),
        "Determinant-weighted noncollinear triple sum; limit (6 pi / im^3) zeta(s+3) zeta(s+2).");

    m.def(
        "zagier_chain",
        [](Int coeff_box, Int n_series, Int box, Int n_exact) {
            ZagierChainConfig cfg;
            cfg.coeff_box = coeff_box;
            cfg.n_series = n_series;
            cfg.box = box;
            cfg.n_exact = n_exact;
            ZagierChainReport r = zagier_chain(cfg);
            py::dict d;
            d["a_noncollinear"] = r.a_noncollinear;
            d["b_detn_partial"] = r.b_detn_partial;
            d["c_series_partial"] = r.c_series_partial;
            d["c_dirichlet_partial"] = r.c_dirichlet_partial;
            d["d_closed_form"] = r.d_closed_form;
            d["rel_ab"] = r.rel_ab;
            d["rel_bc"] = r.rel_bc;
            d["rel_cd"] = r.rel_cd;
            d["rel_ad"] = r.rel_ad;
            return d;
        },
        py::arg("coeff_box") = 40, py::arg("n_series") = 40, py::arg("box") = 600,
        py::arg("n_exact") = 10000, "Four routes to pi^3 zeta(3) with pairwise residuals.");

    m.def("zeta", &zeta, py::arg("s"), "Riemann zeta for real s > 1 (Euler-Maclaurin).");
    m.def("sigma1", &sigma1, py::arg("n"), "Sum of divisors.");
    m.def(
        "dirichlet_sigma",
        [](double s, Int cutoff) {
            DirichletSigmaCheck r = dirichlet_sigma_check(s, cutoff);
            py::dict d;
            d["truncated"] = r.truncated;
            d["reference"] = r.reference;
            d["tail_bound"] = r.tail_bound;
            d["residual"] = r.residual();
            d["within_bound"] = r.within_bound();
            return d;
        },
        py::arg("s"), py::arg("cutoff"),
        "Truncated sum of sigma1(n)/n^s against zeta(s) zeta(s-1), with a proven tail bound.");

    m.def(
        "scalar_kernels_exact",
        [](Int m_, Int n_) { return scalar_kernel_identities(m_, n_).all_zero(); },
        py::arg("m"), py::arg("n"),
        "True iff both scalar splitting identities vanish in exact rationals.");

    m.def(
        "report_json",
        [](const std::string& series, Int box, Int coeff_box, Int bound, std::optional<Int> n,
           std::optional<Int> k, std::optional<Int> m, bool coprime, double z_re, double z_im,
           std::optional<double> s, const std::string& method, bool compensated, int threads) {
            RunConfig cfg;
            cfg.series = series;
            cfg.box = box;
            cfg.coeff_box = coeff_box;
            cfg.bound = bound;
            cfg.n = n;
            cfg.mt_k = k;
            cfg.mt_n = n;
            cfg.mt_m = m;
            cfg.coprime = coprime;
            cfg.z_re = z_re;
            cfg.z_im = z_im;
            cfg.s = s;
            cfg.method = method_of(method);
            cfg.compensated = compensated;
            cfg.threads = threads;
            return report_to_json(run_series(cfg));
        },
        py::arg("series"), py::arg("box") = 0, py::arg("coeff_box") = 0, py::arg("bound") = 0,
        py::arg("n") = std::nullopt, py::arg("k") = std::nullopt, py::arg("m") = std::nullopt,
        py::arg("coprime") = false, py::arg("z_re") = 0.0, py::arg("z_im") = 1.0,
        py::arg("s") = std::nullopt, py::arg("method") = "direct",
        py::arg("compensated") = true, py::arg("threads") = 1,
        "Evaluate a named series and return the JSON report text.");

    m.def(
        "verify",
        [](const std::string& level) {
            std::ostringstream log;
            bool ok = run_verification(
                level == "full" ? VerifyLevel::full : VerifyLevel::fast, log);
            return py::make_tuple(ok, log.str());
        },
        py::arg("level") = "fast", "(all_passed, log_text) for the verification suite.");
}
