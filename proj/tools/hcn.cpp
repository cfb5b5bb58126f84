// hcn: Hurwitz class number tables, shifted convolution sums, and identity
// verification from the command line.

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcn/class_numbers.hpp"
#include "hcn/convolution.hpp"
#include "hcn/errors.hpp"
#include "hcn/identities.hpp"
#include "hcn/rational.hpp"
#include "hcn/report.hpp"
#include "hcn/table_io.hpp"
#include "hcn/version.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
    // geometric:START:RATIO:COUNT
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(':', pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 4 || parts[0] != "geometric")
        throw hcn::RangeError("grid spec must be geometric:START:RATIO:COUNT");
    try {
        const std::uint64_t start = std::stoull(parts[1]);
        const double ratio = std::stod(parts[2]);
        const int count = std::stoi(parts[3]);
        return hcn::geometric_grid(start, ratio, count);
    } catch (const std::logic_error&) {
        throw hcn::RangeError("cannot parse grid spec: " + text);
    }
}

hcn::ClassNumberTable load_or_fail(const std::string& path) {
    if (path.empty())
        throw hcn::RangeError("this command needs --table PATH");
    return hcn::load_table(path);
}

int cmd_sieve(std::uint64_t limit, const std::string& out, unsigned threads) {
    const auto t0 = Clock::now();
    const hcn::ClassNumberTable table = hcn::sieve_hurwitz(limit, threads);
    hcn::save_table(table, out);
    std::cout << "sieved 12*H(n) for n <= " << limit << " in " << seconds_since(t0)
              << " s -> " << out << "\n";
    return 0;
}

int cmd_value(std::uint64_t n, const std::string& table_path) {
    std::int64_t twelve = 0;
    if (!table_path.empty()) {
        const hcn::ClassNumberTable table = hcn::load_table(table_path);
        twelve = table.twelve_times(n);
    } else {
        twelve = hcn::hurwitz_single(n).twelve_times;
    }
    const hcn::Rational h(twelve, 12);
    std::cout << "H(" << n << ") = " << hcn::to_fraction_string(h) << " (" << twelve
              << "/12)\n";
    return 0;
}

int cmd_sum(std::uint64_t ell, std::uint64_t limit, const std::string& table_path,
            const std::string& grid_spec, const std::string& csv_path) {
    const hcn::ClassNumberTable table = load_or_fail(table_path);
    std::vector<std::uint64_t> grid;
    if (!grid_spec.empty())
        grid = parse_grid(grid_spec);
    else
        grid = {limit};
    const hcn::ConvolutionReport report = hcn::prefix_series(ell, grid, table);
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::binary | std::ios::trunc);
        if (!os) throw hcn::RangeError("cannot open " + csv_path + " for writing");
        hcn::write_sum_csv(os, report);
        std::cout << "wrote " << report.rows.size() << " rows -> " << csv_path << "\n";
    } else {
        hcn::write_sum_csv(std::cout, report);
    }
    return 0;
}

int cmd_smooth(std::uint64_t ell, double scale, const std::string& table_path) {
    const hcn::ClassNumberTable table = load_or_fail(table_path);
    const hcn::SmoothWeightSpec spec;
    const double value = hcn::smooth_sum(ell, scale, spec, table);
    const hcn::AsymptoticCoefficients co = hcn::coefficients(ell);
    const double w2 = hcn::mellin_W(spec, {2, 0}).real();
    const double w32 = hcn::mellin_W(spec, {1.5, 0}).real();
    const double lead = w2 * co.res_32 * scale * scale;
    const double second = w32 * co.res_1 * std::pow(scale, 1.5);
    std::cout << "smooth_sum(l=" << ell << ", X=" << hcn::format_double(scale)
              << ") = " << hcn::format_double(value) << "\n"
              << "W(2) res_32 X^2     = " << hcn::format_double(lead) << "\n"
              << "W(3/2) res_1 X^3/2  = " << hcn::format_double(second) << "\n"
              << "remainder           = " << hcn::format_double(value - lead - second)
              << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t limit, const std::string& table_path,
               const std::string& json_path, unsigned threads) {
    const auto t0 = Clock::now();
    std::optional<hcn::ClassNumberTable> table;
    if (!table_path.empty()) table = hcn::load_table(table_path);
    const auto need_table = [&]() -> const hcn::ClassNumberTable& {
        if (!table) throw hcn::RangeError("suite '" + suite + "' needs --table PATH");
        return *table;
    };

    hcn::VerificationReport report;
    if (suite == "kronecker-hurwitz") {
        report = hcn::run_kronecker_hurwitz_suite(need_table(), limit);
    } else if (suite == "r3") {
        report = hcn::run_r3_suite(need_table(), limit);
    } else if (suite == "r1-divisor") {
        report = hcn::run_r1_divisor_suite(limit);
    } else if (suite == "vanishing") {
        report = hcn::run_vanishing_suite(need_table(), limit);
    } else if (suite == "moment") {
        const hcn::PrimitiveClassTable prim = hcn::sieve_primitive(limit, threads);
        report = hcn::run_moment_suite(prim, limit);
    } else {
        throw hcn::RangeError("unknown suite: " + suite);
    }

    std::cout << report.suite << " [" << report.parameters << "]: checked "
              << report.checked << ", failures " << report.failures
              << ", max discrepancy " << hcn::format_double(report.max_discrepancy)
              << "\n";
    if (!json_path.empty()) {
        hcn::ReportDocument doc;
        doc.command = "verify";
        doc.parameters = {{"suite", suite}, {"limit", limit}};
        doc.rows.push_back(hcn::to_json(report));
        doc.summary = {{"passed", report.passed()}};
        doc.tool_version = hcn::kVersion;
        doc.wall_time_seconds = seconds_since(t0);
        std::ofstream os(json_path, std::ios::binary | std::ios::trunc);
        if (!os) throw hcn::RangeError("cannot open " + json_path + " for writing");
        os << hcn::to_json(doc).dump(2) << "\n";
    }
    return report.passed() ? 0 : 1;
}

int cmd_fit(std::uint64_t ell, const std::string& table_path, const std::string& grid_spec,
            bool subtract_secondary) {
    const hcn::ClassNumberTable table = load_or_fail(table_path);
    std::vector<std::uint64_t> grid;
    if (!grid_spec.empty())
        grid = parse_grid(grid_spec);
    else
        grid = hcn::geometric_grid(10000, std::pow(10.0, 0.25), 9);
    const hcn::ErrorExponentFit fit =
        hcn::fit_error_exponent(ell, grid, table, subtract_secondary);
    if (fit.all_zero_residual) {
        std::cout << "all residuals vanish for l = " << ell << " (l = 2 mod 4)\n";
        return 0;
    }
    std::cout << "error exponent fit (l=" << ell
              << (subtract_secondary ? ", secondary subtracted" : "")
              << "): slope = " << hcn::format_double(fit.slope) << " over "
              << fit.points_used << " points\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz class number tables and shifted convolution sums"};
    app.set_version_flag("--version", std::string("hcn ") + hcn::kVersion);
    unsigned threads = 0; // 0: HCN_THREADS env or hardware
    app.add_option("--threads", threads, "worker threads for table construction");
    app.require_subcommand(1);

    auto* sieve = app.add_subcommand("sieve", "build and store a 12*H(n) table");
    std::uint64_t sieve_limit = 0;
    std::string sieve_out;
    sieve->add_option("--limit", sieve_limit, "table limit X")->required();
    sieve->add_option("--out", sieve_out, "output path")->required();

    auto* value = app.add_subcommand("value", "print one Hurwitz class number");
    std::uint64_t value_n = 0;
    std::string value_table;
    value->add_option("N", value_n, "index n (H(n) of discriminant -n)")->required();
    value->add_option("--table", value_table, "look up in a stored table");

    auto* sum = app.add_subcommand("sum", "exact shifted convolution prefix sums");
    std::uint64_t sum_ell = 0, sum_limit = 0;
    std::string sum_table, sum_grid, sum_csv;
    sum->add_option("--ell", sum_ell, "shift l")->required();
    sum->add_option("--limit", sum_limit, "evaluate S_l at X = limit")->required();
    sum->add_option("--table", sum_table, "table path")->required();
    sum->add_option("--grid", sum_grid, "geometric:START:RATIO:COUNT grid of X values");
    sum->add_option("--csv", sum_csv, "write rows to this CSV file");

    auto* smooth = app.add_subcommand("smooth", "smooth-cutoff convolution sum");
    std::uint64_t smooth_ell = 0;
    double smooth_scale = 0;
    std::string smooth_table;
    smooth->add_option("--ell", smooth_ell, "shift l")->required();
    smooth->add_option("--scale", smooth_scale, "scale X")->required();
    smooth->add_option("--table", smooth_table, "table path")->required();

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string verify_suite, verify_table, verify_json;
    std::uint64_t verify_limit = 0;
    verify->add_option("--suite", verify_suite, "kronecker-hurwitz|r3|r1-divisor|vanishing|moment")
        ->required();
    verify->add_option("--limit", verify_limit, "suite range limit")->required();
    verify->add_option("--table", verify_table, "table path (suites that read H(n))");
    verify->add_option("--json", verify_json, "write a JSON report here");

    auto* fit = app.add_subcommand("fit", "log-log slope of the sharp-sum residual");
    std::uint64_t fit_ell = 0;
    std::string fit_table, fit_grid;
    bool fit_subtract = false;
    fit->add_option("--ell", fit_ell, "shift l")->required();
    fit->add_option("--table", fit_table, "table path")->required();
    fit->add_option("--grid", fit_grid, "geometric:START:RATIO:COUNT grid");
    fit->add_flag("--subtract-secondary", fit_subtract, "fit S - main - secondary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e); // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sieve) return cmd_sieve(sieve_limit, sieve_out, threads);
        if (*value) return cmd_value(value_n, value_table);
        if (*sum) return cmd_sum(sum_ell, sum_limit, sum_table, sum_grid, sum_csv);
        if (*smooth) return cmd_smooth(smooth_ell, smooth_scale, smooth_table);
        if (*verify)
            return cmd_verify(verify_suite, verify_limit, verify_table, verify_json, threads);
        if (*fit) return cmd_fit(fit_ell, fit_table, fit_grid, fit_subtract);
    } catch (const hcn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
