#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "telesum/report.hpp"
#include "telesum/verify.hpp"

using namespace telesum;

namespace {

RunConfig base(const std::string& series) {
    RunConfig c;
    c.series = series;
    return c;
}

size_t count_fields(const std::string& line) {
    return size_t(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("registry lists every series") {
    const std::vector<std::string>& names = series_names();
    REQUIRE(names.size() == 11);
    CHECK(names.front() == "theorem1");
    CHECK(std::count(names.begin(), names.end(), "zagier-chain") == 1);
    CHECK(std::count(names.begin(), names.end(), "dirichlet-sigma") == 1);
}

TEST_CASE("theorem1 report carries the pi reference") {
    RunConfig c = base("theorem1");
    c.box = 100;
    c.method = Method::boundary;
    Report r = run_series(c);
    CHECK(r.series == "theorem1");
    CHECK(r.method == "boundary");
    CHECK(r.truncation == "box=100");
    REQUIRE(r.reference_value.has_value());
    CHECK(*r.reference_value == std::numbers::pi);
    REQUIRE(r.rel_error.has_value());
    CHECK(*r.rel_error <= 2e-3);
    CHECK(r.terms > 0);

    // The three methods agree: direct/boundary to 1e-12, oracle bitwise with
    // the set-equal enumeration.
    c.method = Method::direct;
    Report d = run_series(c);
    CHECK(std::abs(d.value - r.value) <= 1e-12 * d.value);
    c.method = Method::oracle;
    Report o = run_series(c);
    CHECK(std::abs(o.value - d.value) <= 1e-12 * d.value);
    CHECK(o.method == "oracle");
}

TEST_CASE("usage errors throw invalid_argument") {
    CHECK_THROWS_AS(run_series(base("no-such-series")), std::invalid_argument);
    CHECK_THROWS_AS(run_series(base("theorem1")), std::invalid_argument);  // missing --box
    RunConfig t3 = base("theorem3");
    t3.box = 50;  // missing --n
    CHECK_THROWS_AS(run_series(t3), std::invalid_argument);
    RunConfig mt = base("mt");
    mt.bound = 100;
    mt.mt_k = 2;  // missing --n/--m
    CHECK_THROWS_AS(run_series(mt), std::invalid_argument);
    RunConfig t4 = base("theorem4");
    t4.coeff_box = 5;  // missing --s
    CHECK_THROWS_AS(run_series(t4), std::invalid_argument);
    RunConfig trop = base("tropical1");
    trop.box = 20;
    trop.method = Method::boundary;  // defect sums have no boundary route
    CHECK_THROWS_AS(run_series(trop), std::invalid_argument);
    RunConfig eis = base("eisenstein");
    eis.coeff_box = 10;
    eis.s = 3.0;
    eis.z_im = -1.0;  // invalid shape
    CHECK_THROWS_AS(run_series(eis), std::domain_error);
}

TEST_CASE("mt report: spec'd flags and the 1/3 reference") {
    RunConfig c = base("mt");
    c.mt_k = 2;
    c.mt_n = 2;
    c.mt_m = 2;
    c.coprime = true;
    c.bound = 400;
    Report r = run_series(c);
    REQUIRE(r.reference_value.has_value());
    CHECK(*r.reference_value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(*r.rel_error <= 1e-3);
    bool has_coprime = false;
    for (const auto& [k, v] : r.params) has_coprime |= (k == "coprime" && v == "true");
    CHECK(has_coprime);
}

TEST_CASE("theorem3 report exposes the axis-ray subtotal") {
    RunConfig c = base("theorem3");
    c.n = 6;
    c.box = 120;
    Report r = run_series(c);
    REQUIRE(r.reference_value.has_value());
    // sigma1(6) = 12: the reference collapses to pi.
    CHECK(*r.reference_value == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    REQUIRE(r.axis_ray_subtotal.has_value());
    CHECK(*r.axis_ray_subtotal > 0.0);
    CHECK(*r.axis_ray_subtotal < r.value);
}

TEST_CASE("dirichlet-sigma report turns the proven tail into the hint") {
    RunConfig c = base("dirichlet-sigma");
    c.s = 3.0;
    c.bound = 2000;
    Report r = run_series(c);
    REQUIRE(r.tail_hint.has_value());
    REQUIRE(r.abs_error.has_value());
    CHECK(*r.abs_error <= *r.tail_hint);  // the bound is honest
    CHECK(*r.abs_error <= 3e-3);
}

TEST_CASE("json reports round-trip byte for byte") {
    std::vector<RunConfig> configs;
    RunConfig a = base("theorem1");
    a.box = 60;
    a.method = Method::boundary;
    configs.push_back(a);
    RunConfig b = base("theorem3");
    b.n = 2;
    b.box = 60;
    configs.push_back(b);
    RunConfig c = base("dirichlet-sigma");
    c.s = 3.0;
    c.bound = 500;
    configs.push_back(c);
    RunConfig d = base("eisenstein");
    d.s = 2.5;
    d.coeff_box = 30;
    d.z_re = 0.5;
    d.z_im = 2.0;
    configs.push_back(d);
    for (const RunConfig& cfg : configs) {
        CAPTURE(cfg.series);
        std::string text = report_to_json(run_series(cfg));
        Report parsed = report_from_json(text);
        CHECK(report_to_json(parsed) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("csv rows align with the header") {
    std::string header = report_csv_header();
    RunConfig c = base("theorem2");
    c.box = 40;
    c.method = Method::boundary;
    Report r = run_series(c);
    std::string row = report_to_csv_row(r);
    CHECK(count_fields(header) == 12);
    CHECK(count_fields(row) == 12);
    CHECK(row.rfind("theorem2,", 0) == 0);
    CHECK(row.find('.') != std::string::npos);  // '.' decimal separator
}

TEST_CASE("bench ladder covers all methods and the errors shrink") {
    std::vector<BenchRow> rows = bench_ladder("theorem1", {30, 60});
    // direct, boundary, direct-plain, oracle at both sizes.
    REQUIRE(rows.size() == 8);
    auto err_of = [&](Int n, const std::string& m) {
        for (const BenchRow& r : rows)
            if (r.truncation == n && r.method == m) return r.abs_error;
        REQUIRE(false);
        return 0.0;
    };
    CHECK(err_of(60, "boundary") < err_of(30, "boundary"));
    CHECK(err_of(60, "direct") < err_of(30, "direct"));
    // Identical set, identical sum: oracle matches direct to rounding.
    CHECK(std::abs(err_of(60, "oracle") - err_of(60, "direct")) <= 1e-12);

    std::string csv = bench_to_csv(rows);
    CHECK(csv.rfind("N,method,value,abs_error,terms,time_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

    CHECK_THROWS_AS(bench_ladder("eisenstein", {10}), std::invalid_argument);
}

TEST_CASE("verification suite runs its fast level clean") {
    std::ostringstream log;
    bool ok = run_verification(VerifyLevel::fast, log);
    std::string text = log.str();
    INFO(text);
    CHECK(ok);
    // One line per check plus the summary.
    CHECK(std::count(text.begin(), text.end(), '\n') ==
          long(verification_checks().size()) + 1);
    CHECK(text.find("01-theorem1-limit") != std::string::npos);
    CHECK(text.find("12-performance") != std::string::npos);
}
