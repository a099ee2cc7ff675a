// telesum: evaluate telescoped lattice series, verify the identity suite,
// benchmark naive vs telescoped evaluation, and dump enumerated pairs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "telesum/enumerate.hpp"
#include "telesum/report.hpp"
#include "telesum/verify.hpp"

namespace {

telesum::Method parse_method(const std::string& name) {
    if (name == "direct") return telesum::Method::direct;
    if (name == "boundary") return telesum::Method::boundary;
    if (name == "oracle") return telesum::Method::oracle;
    throw std::invalid_argument("unknown method: " + name);
}

int run_sum(const telesum::RunConfig& cfg, const std::string& format) {
    telesum::Report report = telesum::run_series(cfg);
    if (format == "csv")
        std::cout << telesum::report_csv_header() << '\n'
                  << telesum::report_to_csv_row(report) << '\n';
    else
        std::cout << telesum::report_to_json(report);
    return 0;
}

int run_dump(telesum::Int det, telesum::Int box) {
    std::vector<telesum::VectorPair> pairs =
        det == 1 ? telesum::tree_cut(telesum::TruncationSpec::coord_box(box)).interior
                 : telesum::detn_pairs(det, box);
    std::sort(pairs.begin(), pairs.end());
    for (const telesum::VectorPair& p : pairs)
        std::cout << p.x.a << ' ' << p.x.b << ' ' << p.y.a << ' ' << p.y.b << ' '
                  << telesum::to_string(p.d) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"telescoped lattice-pair summation and series verification"};
    app.require_subcommand(1);

    telesum::RunConfig cfg;
    std::string format = "json";
    std::string method = "direct";
    std::string compensated = "on";
    std::int64_t opt_n = 0, opt_k = 0, opt_m = 0;
    double opt_s = 0.0;

    CLI::App* sum = app.add_subcommand("sum", "evaluate one named series and print a report");
    sum->add_option("--series", cfg.series, "series name (see --help-series)")->required();
    sum->add_option("--box", cfg.box, "coordinate box half-width N");
    sum->add_option("--coeff-box", cfg.coeff_box, "coefficient box half-width M");
    sum->add_option("--bound", cfg.bound, "scalar series cutoff");
    CLI::Option* n_opt = sum->add_option("--n", opt_n, "index n (theorem3 / mt middle index)");
    CLI::Option* k_opt = sum->add_option("--k", opt_k, "mt first index");
    CLI::Option* m_opt = sum->add_option("--m", opt_m, "mt last index");
    sum->add_flag("--coprime", cfg.coprime, "restrict mt to coprime pairs");
    sum->add_option("--z-re", cfg.z_re, "lattice shape, real part");
    sum->add_option("--z-im", cfg.z_im, "lattice shape, imaginary part (> 0)");
    CLI::Option* s_opt = sum->add_option("--s", opt_s, "series exponent s");
    sum->add_option("--method", method, "direct | boundary | oracle");
    sum->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sum->add_option("--threads", cfg.threads, "worker threads (1 = pinned sequential order)");
    sum->add_option("--compensated", compensated, "compensated accumulation, on | off")
        ->check(CLI::IsMember({"on", "off"}));

    std::string level = "fast";
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));

    std::string bench_series = "theorem1";
    std::vector<std::int64_t> ladder = {50, 100, 200, 400, 800};
    int bench_threads = 1;
    CLI::App* bench =
        app.add_subcommand("bench", "error/time ladder, naive vs telescoped, as CSV");
    bench->add_option("--series", bench_series, "theorem1 | theorem2");
    bench->add_option("--ladder", ladder, "comma-separated truncations")->delimiter(',');
    bench->add_option("--threads", bench_threads, "worker threads");

    telesum::Int dump_det = 1, dump_box = 0;
    CLI::App* dump = app.add_subcommand("dump", "print enumerated pairs, one per line");
    dump->add_option("--box", dump_box, "coordinate box half-width N")->required();
    dump->add_option("--n", dump_det, "determinant (1 = quadrant tree, else half-plane)");

    try {
        app.parse(argc, argv);

        if (sum->parsed()) {
            if (n_opt->count()) {
                cfg.n = opt_n;
                cfg.mt_n = opt_n;
            }
            if (k_opt->count()) cfg.mt_k = opt_k;
            if (m_opt->count()) cfg.mt_m = opt_m;
            if (s_opt->count()) cfg.s = opt_s;
            cfg.method = parse_method(method);
            cfg.compensated = compensated == "on";
            return run_sum(cfg, format);
        }
        if (verify->parsed()) {
            telesum::VerifyLevel lv =
                level == "full" ? telesum::VerifyLevel::full : telesum::VerifyLevel::fast;
            return telesum::run_verification(lv, std::cout) ? 0 : 1;
        }
        if (bench->parsed()) {
            std::vector<telesum::Int> steps(ladder.begin(), ladder.end());
            std::cout << telesum::bench_to_csv(
                telesum::bench_ladder(bench_series, steps, bench_threads));
            return 0;
        }
        return run_dump(dump_det, dump_box);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
