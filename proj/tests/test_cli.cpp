// End-to-end checks of the hcn binary: output formats, exit-code contract,
// determinism across thread counts. The binary path comes from HCN_CLI
// (set by ctest) with a build-tree fallback.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    if (const char* env = std::getenv("HCN_CLI")) return env;
    return "./tools/hcn";
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("hcn_cli_" + name);
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("value prints the exact class number") {
    const RunResult r = run("value 23");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "H(23) = 3 (36/12)\n");
    const RunResult r16 = run("value 16");
    CHECK(r16.output == "H(16) = 3/2 (18/12)\n");
    const RunResult r0 = run("value 0");
    CHECK(r0.output == "H(0) = -1/12 (-1/12)\n");
}

TEST_CASE("sieve, sum, verify pipeline with exit codes") {
    const fs::path table = temp_file("pipeline.hcn");
    const fs::path csv = temp_file("pipeline.csv");

    REQUIRE(run("sieve --limit 42000 --out " + table.string()).exit_code == 0);

    // sum at X = 23 reproduces the hand-enumerated 27/2
    const RunResult sum = run("sum --ell 1 --limit 23 --table " + table.string());
    CHECK(sum.exit_code == 0);
    CHECK(sum.output.find("23,27,2,") != std::string::npos);

    // lookup through the table matches the direct path
    const RunResult val = run("value 23 --table " + table.string());
    CHECK(val.output == "H(23) = 3 (36/12)\n");

    // all suites pass on a healthy table
    CHECK(run("verify --suite vanishing --limit 1000 --table " + table.string()).exit_code == 0);
    CHECK(run("verify --suite kronecker-hurwitz --limit 800 --table " + table.string())
              .exit_code == 0);
    CHECK(run("verify --suite r3 --limit 900 --table " + table.string()).exit_code == 0);
    CHECK(run("verify --suite r1-divisor --limit 50 --table " + table.string()).exit_code == 0);

    // CSV determinism across thread counts
    const fs::path csv1 = temp_file("t1.csv");
    const fs::path csv4 = temp_file("t4.csv");
    const std::string grid = " --grid geometric:100:3.1623:5";
    REQUIRE(run("--threads 1 sum --ell 3 --limit 40000 --table " + table.string() + grid +
                " --csv " + csv1.string())
                .exit_code == 0);
    REQUIRE(run("--threads 4 sum --ell 3 --limit 40000 --table " + table.string() + grid +
                " --csv " + csv4.string())
                .exit_code == 0);
    CHECK(slurp(csv1) == slurp(csv4));

    // JSON report lands on disk
    const fs::path json = temp_file("verify.json");
    CHECK(run("verify --suite vanishing --limit 1000 --table " + table.string() +
              " --json " + json.string())
              .exit_code == 0);
    CHECK(fs::exists(json));

    fs::remove(table);
    fs::remove(csv);
    fs::remove(csv1);
    fs::remove(csv4);
    fs::remove(json);
}

TEST_CASE("failure injection: corrupted payload fails verification, truncation is a usage error") {
    const fs::path table = temp_file("inject.hcn");
    REQUIRE(run("sieve --limit 5000 --out " + table.string()).exit_code == 0);

    // flip one payload cell (file size intact): identities must break -> exit 1
    {
        std::fstream f(table, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(16 + 4 * 99); // cell of n = 100
        const char bump[4] = {77, 0, 0, 0};
        f.write(bump, 4);
    }
    const RunResult bad = run("verify --suite kronecker-hurwitz --limit 1000 --table " +
                              table.string());
    CHECK(bad.exit_code == 1);

    // truncate the file: load error -> exit 2
    fs::resize_file(table, fs::file_size(table) - 4);
    const RunResult trunc = run("verify --suite kronecker-hurwitz --limit 1000 --table " +
                                table.string());
    CHECK(trunc.exit_code == 2);
    fs::remove(table);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("sum --ell 1 --limit 10").exit_code == 2);      // missing --table
    CHECK(run("value 10 --table /nonexistent.hcn").exit_code == 2);
    CHECK(run("verify --suite nosuch --limit 10").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("smooth and fit commands run") {
    const fs::path table = temp_file("smooth.hcn");
    REQUIRE(run("sieve --limit 45000 --out " + table.string()).exit_code == 0);
    const RunResult sm = run("smooth --ell 1 --scale 100 --table " + table.string());
    CHECK(sm.exit_code == 0);
    CHECK(sm.output.find("smooth_sum(l=1") != std::string::npos);

    const RunResult fit = run("fit --ell 1 --table " + table.string() +
                              " --grid geometric:100:2.3714:7");
    CHECK(fit.exit_code == 0);
    CHECK(fit.output.find("slope = ") != std::string::npos);

    const RunResult fit2 = run("fit --ell 2 --table " + table.string() +
                               " --grid geometric:100:2.3714:7");
    CHECK(fit2.exit_code == 0);
    CHECK(fit2.output.find("all residuals vanish") != std::string::npos);
    fs::remove(table);
}
