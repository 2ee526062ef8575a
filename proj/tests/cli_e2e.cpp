#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary through the shell, capturing stdout; stderr is
// routed to /dev/null so diagnostics don't pollute assertions.
RunResult run(const std::string& args, const std::string& stdin_doc = "") {
    std::string cmd;
    if (!stdin_doc.empty()) {
        // stdin docs in these tests never contain single quotes
        cmd += "printf '%s' '" + stdin_doc + "' | ";
    }
    cmd += std::string(TORFIX_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_dir() {
    char tmpl[] = "/tmp/torfix_e2e_XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return d;
}

} // namespace

TEST_CASE("selfcheck passes") {
    const RunResult r = run("selfcheck");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selfcheck passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("examples round-trip through classify") {
    const std::string dir = temp_dir();
    const RunResult gen = run("examples --out-dir " + dir);
    REQUIRE(gen.exit_code == 0);

    const RunResult gauss = run("classify --input " + dir + "/endo_gaussian3.json");
    REQUIRE(gauss.exit_code == 0);
    const json gj = json::parse(gauss.out);
    CHECK(gj["classification"]["kind"] == "Exponential");
    CHECK(gj["classification"]["formal_input"] == false);
    CHECK(gj["spectral"]["unit_circle_distinct"] == 2);
    CHECK(gj["spectral"]["cyclotomic"].empty());
    CHECK(gj["input"]["chi_r"] == json::parse(R"(["1","4","4","0","4","4","1"])"));
    CHECK(gj["ergodicity"]["ergodic_automorphism"] == true);

    const RunResult mixed = run("classify --input " + dir + "/endo_mixed.json");
    REQUIRE(mixed.exit_code == 0);
    const json mj = json::parse(mixed.out);
    CHECK(mj["classification"]["kind"] == "Mixed");
    CHECK(mj["classification"]["period"] == 2);
    CHECK(mj["classification"]["forbidden_residues"] == json::array({2}));
    CHECK(mj["classification"]["non_simple_implied"] == true);

    const RunResult dbl = run("classify --input " + dir + "/endo_doubling.json");
    REQUIRE(dbl.exit_code == 0);
    const json dj = json::parse(dbl.out);
    CHECK(dj["classification"]["kind"] == "Exponential");
    CHECK(dj["classification"]["formal_input"] == true);
}

TEST_CASE("sequence emits the exact CSV bytes") {
    const RunResult r = run("sequence --input - --n-max 4 --format csv",
                            R"({"kind":"polynomial","coeffs":[4,4,-3,-2,1]})");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,F,periodic_factor,wild_factor\n"
          "1,4,4,1\n"
          "2,0,0,9\n"
          "3,196,4,49\n"
          "4,0,0,225\n");
}

TEST_CASE("mahler table on stdin input") {
    const RunResult r = run("mahler --input - --n-max 64 --format csv", R"([-1,-1,1])");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,log_abs_delta_over_n\n") == 0);
    CHECK(r.out.find("# m(q) = 0.48121182506") != std::string::npos);
}

TEST_CASE("exit code contract") {
    CHECK(run("classify --input -", "this is not json").exit_code == 2);
    CHECK(run("classify --input /nonexistent/file.json").exit_code == 2);
    CHECK(run("classify --input -", "[1,2]").exit_code == 3); // non-monic
    CHECK(run("mahler --input -", "[1,1]").exit_code == 3);   // cyclotomic factor
    CHECK(run("scan-family --g-min 2 --g-max 3").exit_code == 3);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("classify").exit_code == 2); // missing --input
    CHECK(run("classify --input -", "[1,0,1]").exit_code == 0);
    CHECK(run("--version").exit_code == 0);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("classify --help").exit_code == 0);
    CHECK(run("").exit_code == 2); // a subcommand is required
}

TEST_CASE("scan output is byte-identical across job counts") {
    const RunResult a = run("scan-family --g-min 3 --g-max 8 --jobs 1 --format csv");
    const RunResult b = run("scan-family --g-min 3 --g-max 8 --jobs 4 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("g,cyclotomic_free,unit_circle_distinct,witness_prime,mahler_log,mahler_error\n") == 0);
}

TEST_CASE("precision env var feeds the default") {
    std::string cmd = "printf '%s' '[-1,-1,1]' | TORFIX_PRECISION_BITS=64 " +
                      std::string(TORFIX_CLI_PATH) + " classify --input - 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    const json j = json::parse(out);
    CHECK(j["entropy"]["full"]["method"] == "aberth-128bit");
}
