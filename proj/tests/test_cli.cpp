#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end tests of the command-line binary: exit codes, output and
// report determinism. The binary path comes from the build system.

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

int invocation_counter = 0;

RunResult run_cli(const std::string& args) {
    const fs::path out_path =
        fs::temp_directory_path() / ("eppo_cli_test_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(invocation_counter++) + ".out");
    const std::string cmd =
        std::string(EPPO_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    fs::remove(out_path);
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.output = buf.str();
    return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check: catalog group with prime-power element orders exits 0") {
    auto r = run_cli("check catalog:A5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "{1, 2, 3, 5}"));
    CHECK(contains(r.output, "EPPO"));
    CHECK(contains(r.output, "seed:"));
}

TEST_CASE("check: metacyclic negative control exits 1 with an order-10 witness") {
    auto r = run_cli("check metacyclic p=5 a=1 q=2 b=2 r=4");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "not EPPO"));
    CHECK(contains(r.output, "order 10"));
}

TEST_CASE("check: group file with a composite order exits 1") {
    auto p = write_temp("c6.grp", "6\n(1 2 3 4 5 6)\n");
    auto r = run_cli("check file:" + p.string());
    CHECK(r.exit_code == 1);
    fs::remove(p);
}

TEST_CASE("check: constructor shorthand") {
    CHECK(run_cli("check cyclic n=6").exit_code == 1);
    CHECK(run_cli("check genquat n=3").exit_code == 0);
    CHECK(run_cli("check dihedral n=9").exit_code == 0);
    CHECK(run_cli("check semidirect q=3 m=2 H=Q8").exit_code == 0);
}

TEST_CASE("spectrum: catalog and file sources") {
    auto r = run_cli("spectrum 'catalog:PSL3(4)'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "{1, 2, 3, 4, 5, 7}"));

    auto p = write_temp("trivial.grp", "1\n");
    auto r2 = run_cli("spectrum file:" + p.string());
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "{1}"));
    fs::remove(p);
}

TEST_CASE("spectrum: sampled mode is labeled and deterministic") {
    const std::string args = "spectrum catalog:Sz32 --sample-n 2000 --seed 7 --format records";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.output, "sampled: true"));
    CHECK(contains(r1.output, "seed: 7"));
    CHECK(r1.output == r2.output);  // byte-identical reports
}

TEST_CASE("check: records format is byte-identical across runs") {
    const std::string args = "check 'catalog:PSL2(9)' --format records --seed 11";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(contains(r1.output, "record: eppo-check"));
    CHECK(contains(r1.output, "verdict-exhaustive: eppo"));
    CHECK(contains(r1.output, "verdict-centralizer: eppo"));
}

TEST_CASE("classify verdicts") {
    auto r = run_cli("classify catalog:A5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "a5-recognized"));

    auto r2 = run_cli("classify 'catalog:PSL2(17)'");
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "simple-eppo PSL2(17)"));

    auto p = write_temp("s3.grp", "3\n(1 2 3)\n(1 2)\n");
    auto r3 = run_cli("classify file:" + p.string());
    CHECK(r3.exit_code == 0);
    CHECK(contains(r3.output, "solvable-eppo"));
    CHECK(contains(r3.output, "[2, 3]"));
    fs::remove(p);

    auto r4 = run_cli("classify cyclic n=30");
    CHECK(r4.exit_code == 1);
    CHECK(contains(r4.output, "not-eppo"));
}

TEST_CASE("catalog list and build") {
    auto r = run_cli("catalog list");
    CHECK(r.exit_code == 0);
    for (const char* name : {"A5", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(17)", "PSL3(4)",
                             "Sz(8)", "Sz(32)"})
        CHECK(contains(r.output, name));

    const fs::path out = fs::temp_directory_path() / "a5_exported.grp";
    auto r2 = run_cli("catalog build A5 --out " + out.string());
    CHECK(r2.exit_code == 0);
    auto r3 = run_cli("check file:" + out.string());
    CHECK(r3.exit_code == 0);
    CHECK(contains(r3.output, "{1, 2, 3, 5}"));
    fs::remove(out);
}

TEST_CASE("error paths exit 2 with distinct messages") {
    auto r = run_cli("check catalog:E8");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "parse error"));

    // Above the threshold the command falls back to sampling...
    auto sampled = run_cli("spectrum 'catalog:PSL3(4)' --threshold 1000");
    CHECK(sampled.exit_code == 0);
    CHECK(contains(sampled.output, "sampled"));
    // ... unless sampling is disabled, which is a refusal naming the limit.
    auto r2 = run_cli("spectrum 'catalog:PSL3(4)' --threshold 1000 --skip-sampled");
    CHECK(r2.exit_code == 2);
    CHECK(contains(r2.output, "threshold refusal"));
    CHECK(contains(r2.output, "1000"));

    auto r3 = run_cli("check wreath n=2");
    CHECK(r3.exit_code == 2);

    auto p = write_temp("bad.grp", "3\n(1 9)\n");
    auto r4 = run_cli("check file:" + p.string());
    CHECK(r4.exit_code == 2);
    fs::remove(p);
}

TEST_CASE("verify: single criterion passes; injected failure names the criterion") {
    auto r = run_cli("verify --only c10-extension-arithmetic");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS] c10-extension-arithmetic"));

    auto r2 = run_cli(
        "verify --only c10-extension-arithmetic --inject-failure c10-extension-arithmetic");
    CHECK(r2.exit_code == 1);
    CHECK(contains(r2.output, "[FAIL] c10-extension-arithmetic"));
    CHECK(contains(r2.output, "failed criterion: c10-extension-arithmetic"));
}

TEST_CASE("catalog verify respects --skip-sampled") {
    auto r = run_cli("catalog verify --skip-sampled");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[PASS] c01-catalog"));
}
