#include "telesum/report.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "telesum/accumulate.hpp"
#include "telesum/numtheory.hpp"

namespace telesum {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal form, '.' separator, locale-independent.
std::string fmt(double v) { return nlohmann::json(v).dump(); }
std::string fmt(Int v) { return std::to_string(v); }

double closed_form_pi() { return std::numbers::pi; }

struct Evaluated {
    SumResult sum;
    std::optional<double> reference;
    std::optional<double> axis_ray;
    std::vector<std::pair<std::string, std::string>> params;
    std::string truncation;
};

Int require_positive(Int v, const char* flag) {
    if (v < 1) throw std::invalid_argument(std::string("missing or invalid ") + flag);
    return v;
}

SumResult oracle_sum_theorem1(Int box) {
    auto start = std::chrono::steady_clock::now();
    KahanAccumulator acc;
    std::uint64_t terms = 0;
    for (const VectorPair& p : unimodular_oracle(box)) {
        acc.add(1.0 / (to_double(norm_sq(p.x)) * to_double(norm_sq(p.y)) *
                       to_double(norm_sq(p.x + p.y))));
        ++terms;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    return {acc.value(), terms, TruncationSpec::coord_box(box), Method::oracle, std::nullopt, ms};
}

Evaluated evaluate(const RunConfig& c) {
    EvalOptions opts{c.compensated, c.threads};
    Evaluated e;
    if (c.series == "theorem1") {
        Int box = require_positive(c.box, "--box");
        TruncationSpec spec = TruncationSpec::coord_box(box);
        SumResult r = c.method == Method::direct     ? theorem1_direct(spec, opts)
                      : c.method == Method::boundary ? theorem1_boundary(spec, opts)
                                                     : oracle_sum_theorem1(box);
        r.value *= 4.0;  // the closed form is stated for 4x the lattice sum
        e.sum = r;
        e.reference = closed_form_pi();
        e.truncation = "box=" + fmt(box);
    } else if (c.series == "theorem2") {
        Int box = require_positive(c.box, "--box");
        e.sum = theorem2(TruncationSpec::coord_box(box), c.method, opts);
        e.reference = std::numbers::pi / 2.0 - 1.0;
        e.truncation = "box=" + fmt(box);
    } else if (c.series == "tropical1" || c.series == "tropical2") {
        Int box = require_positive(c.box, "--box");
        if (c.method != Method::direct)
            throw std::invalid_argument("tropical sums only have a direct method");
        auto [lin, sq] = tropical_sums(TruncationSpec::coord_box(box), opts);
        bool first = c.series == "tropical1";
        e.sum = first ? lin : sq;
        e.reference = first ? 2.0 : 2.0 - std::numbers::pi / 2.0;
        e.truncation = "box=" + fmt(box);
    } else if (c.series == "mt") {
        if (!c.mt_k || !c.mt_n || !c.mt_m)
            throw std::invalid_argument("mt requires --k, --n and --m");
        Int bound = require_positive(c.bound, "--bound");
        MTIndex idx = MTIndex::of(*c.mt_k, *c.mt_n, *c.mt_m);
        e.sum = mt_scalar(idx, bound, c.coprime, opts);
        if (idx.k == 2 && idx.n == 2 && idx.m == 2)
            e.reference = c.coprime ? 1.0 / 3.0 : zeta(6.0) / 3.0;
        e.params = {{"k", fmt(idx.k)},
                    {"n", fmt(idx.n)},
                    {"m", fmt(idx.m)},
                    {"coprime", c.coprime ? "true" : "false"}};
        e.truncation = "bound=" + fmt(bound);
    } else if (c.series == "theorem3") {
        if (!c.n) throw std::invalid_argument("theorem3 requires --n");
        Int box = require_positive(c.box, "--box");
        Theorem3Result r = theorem3(*c.n, TruncationSpec::coord_box(box), opts);
        e.sum = r.sum;
        e.axis_ray = r.axis_ray_subtotal;
        e.reference = std::numbers::pi / (2.0 * double(*c.n)) * double(sigma1(*c.n));
        e.params = {{"n", fmt(*c.n)}, {"normalized", fmt(r.normalized)}};
        e.truncation = "box=" + fmt(box);
    } else if (c.series == "eisenstein") {
        if (!c.s) throw std::invalid_argument("eisenstein requires --s");
        Int box = require_positive(c.coeff_box, "--coeff-box");
        LatticeShape z = LatticeShape::of(c.z_re, c.z_im);
        e.sum = eisenstein(z, *c.s, TruncationSpec::coeff_box(box), opts);
        e.params = {{"z_re", fmt(c.z_re)}, {"z_im", fmt(c.z_im)}, {"s", fmt(*c.s)}};
        e.truncation = "coeff_box=" + fmt(box);
    } else if (c.series == "d111") {
        Int box = require_positive(c.coeff_box, "--coeff-box");
        LatticeShape z = LatticeShape::of(c.z_re, c.z_im);
        D111Result r = d111(z, TruncationSpec::coeff_box(box), opts);
        e.sum = r.total;
        // Reference 2 E(z,3) + pi^3 zeta(3), with E evaluated at box 200
        // (its own truncation error is far below every gate used here).
        double ez3 = eisenstein(z, 3.0, TruncationSpec::coeff_box(200), opts).value;
        e.reference = 2.0 * ez3 + std::pow(std::numbers::pi, 3) * zeta(3.0);
        e.params = {{"z_re", fmt(c.z_re)},
                    {"z_im", fmt(c.z_im)},
                    {"collinear", fmt(r.collinear.value)},
                    {"noncollinear", fmt(r.noncollinear.value)}};
        e.truncation = "coeff_box=" + fmt(box);
    } else if (c.series == "theorem4") {
        if (!c.s) throw std::invalid_argument("theorem4 requires --s");
        Int box = require_positive(c.coeff_box, "--coeff-box");
        LatticeShape z = LatticeShape::of(c.z_re, c.z_im);
        e.sum = theorem4(z, *c.s, TruncationSpec::coeff_box(box), opts);
        double y3 = z.im * z.im * z.im;
        e.reference = 6.0 * std::numbers::pi / y3 * zeta(*c.s + 3.0) * zeta(*c.s + 2.0);
        e.params = {{"z_re", fmt(c.z_re)}, {"z_im", fmt(c.z_im)}, {"s", fmt(*c.s)}};
        e.truncation = "coeff_box=" + fmt(box);
    } else if (c.series == "zagier-chain") {
        ZagierChainConfig cfg;
        if (c.coeff_box > 0) cfg.coeff_box = c.coeff_box;
        if (c.box > 0) cfg.box = c.box;
        if (c.bound > 0) cfg.n_exact = c.bound;
        if (c.n) cfg.n_series = *c.n;
        auto start = std::chrono::steady_clock::now();
        ZagierChainReport r = zagier_chain(cfg, opts);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        e.sum = {r.a_noncollinear, 0, TruncationSpec::coeff_box(cfg.coeff_box), Method::direct,
                 std::nullopt, ms};
        e.reference = r.d_closed_form;
        e.params = {{"b_detn_partial", fmt(r.b_detn_partial)},
                    {"c_series_partial", fmt(r.c_series_partial)},
                    {"c_dirichlet_partial", fmt(r.c_dirichlet_partial)},
                    {"rel_ab", fmt(r.rel_ab)},
                    {"rel_bc", fmt(r.rel_bc)},
                    {"rel_cd", fmt(r.rel_cd)},
                    {"rel_ad", fmt(r.rel_ad)},
                    {"pass", r.pass() ? "true" : "false"}};
        e.truncation = "coeff_box=" + fmt(cfg.coeff_box) + ";n_series=" + fmt(cfg.n_series) +
                       ";box=" + fmt(cfg.box) + ";n_exact=" + fmt(cfg.n_exact);
    } else if (c.series == "dirichlet-sigma") {
        if (!c.s) throw std::invalid_argument("dirichlet-sigma requires --s");
        Int bound = require_positive(c.bound, "--bound");
        auto start = std::chrono::steady_clock::now();
        DirichletSigmaCheck r = dirichlet_sigma_check(*c.s, bound);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        e.sum = {r.truncated, std::uint64_t(bound), TruncationSpec::coord_box(bound),
                 Method::direct, r.tail_bound, ms};
        e.reference = r.reference;
        e.params = {{"s", fmt(*c.s)}};
        e.truncation = "bound=" + fmt(bound);
    } else {
        throw std::invalid_argument("unknown series: " + c.series);
    }
    return e;
}

}  // namespace

const std::vector<std::string>& series_names() {
    static const std::vector<std::string> names = {
        "theorem1",   "theorem2", "tropical1", "tropical2",    "mt",             "theorem3",
        "eisenstein", "d111",     "theorem4",  "zagier-chain", "dirichlet-sigma"};
    return names;
}

Report run_series(const RunConfig& config) {
    Evaluated e = evaluate(config);
    Report r;
    r.series = config.series;
    r.params = e.params;
    r.truncation = e.truncation;
    r.method = method_name(e.sum.method);
    r.value = e.sum.value;
    r.reference_value = e.reference;
    if (e.reference) {
        r.abs_error = std::abs(r.value - *e.reference);
        if (*e.reference != 0.0) r.rel_error = *r.abs_error / std::abs(*e.reference);
    }
    r.terms = e.sum.terms;
    r.elapsed_ms = e.sum.elapsed_ms;
    r.tail_hint = e.sum.tail_hint;
    r.axis_ray_subtotal = e.axis_ray;
    return r;
}

std::string report_to_json(const Report& report) {
    ordered_json j;
    j["series"] = report.series;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["truncation"] = report.truncation;
    j["method"] = report.method;
    j["value"] = report.value;
    if (report.reference_value) j["reference_value"] = *report.reference_value;
    if (report.abs_error) j["abs_error"] = *report.abs_error;
    if (report.rel_error) j["rel_error"] = *report.rel_error;
    j["terms"] = report.terms;
    j["elapsed_ms"] = report.elapsed_ms;
    if (report.tail_hint) j["tail_hint"] = *report.tail_hint;
    if (report.axis_ray_subtotal) j["axis_ray_subtotal"] = *report.axis_ray_subtotal;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Report r;
    r.series = j.at("series").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params.emplace_back(k, v.get<std::string>());
    r.truncation = j.at("truncation").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.value = j.at("value").get<double>();
    if (j.contains("reference_value")) r.reference_value = j["reference_value"].get<double>();
    if (j.contains("abs_error")) r.abs_error = j["abs_error"].get<double>();
    if (j.contains("rel_error")) r.rel_error = j["rel_error"].get<double>();
    r.terms = j.at("terms").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("tail_hint")) r.tail_hint = j["tail_hint"].get<double>();
    if (j.contains("axis_ray_subtotal"))
        r.axis_ray_subtotal = j["axis_ray_subtotal"].get<double>();
    return r;
}

namespace {

std::string csv_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::string params_cell(const Report& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

}  // namespace

std::string report_csv_header() {
    return "series,params,truncation,method,value,reference_value,abs_error,rel_error,terms,"
           "elapsed_ms,tail_hint,axis_ray_subtotal";
}

std::string report_to_csv_row(const Report& r) {
    std::ostringstream out;
    out << r.series << ',' << params_cell(r) << ',' << r.truncation << ',' << r.method << ','
        << fmt(r.value) << ',' << csv_opt(r.reference_value) << ',' << csv_opt(r.abs_error) << ','
        << csv_opt(r.rel_error) << ',' << r.terms << ',' << fmt(r.elapsed_ms) << ','
        << csv_opt(r.tail_hint) << ',' << csv_opt(r.axis_ray_subtotal);
    return out.str();
}

std::vector<BenchRow> bench_ladder(const std::string& series, const std::vector<Int>& ladder,
                                   int threads) {
    if (series != "theorem1" && series != "theorem2")
        throw std::invalid_argument("bench supports theorem1 and theorem2");
    bool t1 = series == "theorem1";
    double limit = t1 ? std::numbers::pi : std::numbers::pi / 2.0 - 1.0;
    double scale = t1 ? 4.0 : 1.0;
    std::vector<BenchRow> rows;
    auto push = [&](Int n, const char* method, const SumResult& r) {
        rows.push_back({n, method, scale * r.value, std::abs(scale * r.value - limit), r.terms,
                        r.elapsed_ms});
    };
    for (Int n : ladder) {
        TruncationSpec spec = TruncationSpec::coord_box(n);
        EvalOptions on{true, threads}, off{false, threads};
        if (t1) {
            push(n, "direct", theorem1_direct(spec, on));
            push(n, "boundary", theorem1_boundary(spec, on));
            push(n, "direct-plain", theorem1_direct(spec, off));
            if (n <= 200) push(n, "oracle", oracle_sum_theorem1(n));
        } else {
            push(n, "direct", theorem2(spec, Method::direct, on));
            push(n, "boundary", theorem2(spec, Method::boundary, on));
            push(n, "direct-plain", theorem2(spec, Method::direct, off));
            if (n <= 200) push(n, "oracle", theorem2(spec, Method::oracle, on));
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "N,method,value,abs_error,terms,time_ms\n";
    for (const BenchRow& r : rows)
        out << r.truncation << ',' << r.method << ',' << fmt(r.value) << ',' << fmt(r.abs_error)
            << ',' << r.terms << ',' << fmt(r.time_ms) << '\n';
    return out.str();
}

}  // namespace telesum
