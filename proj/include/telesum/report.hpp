#pragma once

// Machine-readable run reports: a registry of named series, the closed-form
// reference values they converge to, and JSON/CSV serialization with a fixed
// field order so emitted reports round-trip byte for byte.

#include <optional>
#include <string>
#include <vector>

#include "telesum/series.hpp"

namespace telesum {

// Everything a single `sum` invocation needs. Fields irrelevant to the
// chosen series are ignored; required ones are validated by run_series.
struct RunConfig {
    std::string series;        // registry name, e.g. "theorem1"
    Int box = 0;               // --box N (coordinate box)
    Int coeff_box = 0;         // --coeff-box M
    Int bound = 0;             // --bound N (scalar-series cutoff)
    std::optional<Int> n;      // --n (theorem3 det / dump det)
    std::optional<Int> mt_k, mt_n, mt_m;  // --k --n --m for mt
    bool coprime = false;      // --coprime
    double z_re = 0.0;         // --z-re
    double z_im = 1.0;         // --z-im
    std::optional<double> s;   // --s
    Method method = Method::direct;
    bool compensated = true;
    int threads = 1;
};

struct Report {
    std::string series;
    std::vector<std::pair<std::string, std::string>> params;  // name -> literal
    std::string truncation;      // e.g. "box=500" or "coeff_box=40"
    std::string method;
    double value = 0.0;
    std::optional<double> reference_value;
    std::optional<double> abs_error;  // |value - reference|
    std::optional<double> rel_error;  // abs_error / |reference|, reference != 0
    std::uint64_t terms = 0;
    double elapsed_ms = 0.0;
    std::optional<double> tail_hint;
    std::optional<double> axis_ray_subtotal;
};

// Names accepted by run_series, in registry order.
const std::vector<std::string>& series_names();

// Evaluate one named series. Throws std::invalid_argument for an unknown
// name or missing/invalid parameters (the CLI maps that to a usage error).
Report run_series(const RunConfig& config);

// Fixed-order JSON document (two-space indent, '\n' line ends). Parsing and
// re-serializing an emitted report reproduces it byte for byte; numbers use
// shortest round-trip formatting.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

// CSV with '.' decimal separator: header_row followed by one row per report.
std::string report_csv_header();
std::string report_to_csv_row(const Report& report);

// One benchmark ladder row: a method evaluated at one truncation.
struct BenchRow {
    Int truncation = 0;
    std::string method;     // direct | boundary | oracle | direct-plain
    double value = 0.0;
    double abs_error = 0.0; // against the closed-form limit
    std::uint64_t terms = 0;
    double time_ms = 0.0;
};

// Run `series` (theorem1 or theorem2) over a ladder of truncations, with
// direct-tree, boundary, uncompensated-direct, and (small N only) the
// quadruple-loop oracle. Errors are measured against the closed-form limit.
std::vector<BenchRow> bench_ladder(const std::string& series, const std::vector<Int>& ladder,
                                   int threads = 1);
std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace telesum
