#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// End-to-end tests against the installed binary. GRASSTRANS_CLI_PATH is
// injected by the build system.

namespace {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    std::string err_path = "cli_stderr_" + std::to_string(counter++) + ".tmp";
    std::string cmd = env_prefix + " " + std::string(GRASSTRANS_CLI_PATH) + " " + args +
                      " 2>" + err_path;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, got);
    int rc = pclose(p);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.err = slurp(err_path);
    std::remove(err_path.c_str());
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

int line_count(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("spectrum emits one csv row per even dominant weight") {
    auto res = run_cli("spectrum --field R --n 4 --r 2 --nu 1 --deg 4");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("m,value,ratio,exact_zero\n", 0) == 0);
    CHECK(line_count(res.out) == 5);  // header + (0,0),(2,0),(2,2),(4,0)
    CHECK(contains(res.out, "0 0,"));
    CHECK(contains(res.out, "2 2,"));
}

TEST_CASE("identical invocations produce byte-identical output") {
    std::string args = "spectrum --field C --n 5 --r 2 --kind sine --nu 3/2 --deg 6";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    // thread cap must not influence the bytes
    auto c = run_cli(args, "GRASSTRANS_THREADS=4");
    CHECK(c.status == 0);
    CHECK(c.out == a.out);
}

TEST_CASE("--output writes the same bytes to a file") {
    std::string args = "spectrum --field R --n 4 --r 2 --nu 1 --deg 4";
    auto direct = run_cli(args);
    auto filed = run_cli(args + " --output cli_out.tmp");
    CHECK(filed.status == 0);
    CHECK(filed.out.empty());
    CHECK(slurp("cli_out.tmp") == direct.out);
    std::remove("cli_out.tmp");
}

TEST_CASE("malformed preset is rejected with a diagnostic") {
    auto res = run_cli("spectrum --field R --n 3 --r 2");
    CHECK(res.status == 3);
    CHECK(contains(res.err, "2r <= n"));
    auto j = nlohmann::json::parse(res.err);
    CHECK(j.at("status") == "error");
}

TEST_CASE("bad thread cap is rejected") {
    auto res = run_cli("spectrum --field R --n 4 --r 2 --deg 2",
                       "GRASSTRANS_THREADS=abc");
    CHECK(res.status == 3);
    CHECK(contains(res.err, "GRASSTRANS_THREADS"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("spectrum --bogus-flag 1").status == 2);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("spectrum --verify quad cross-checks every row") {
    auto res = run_cli(
        "spectrum --field R --n 4 --r 2 --nu 1 --deg 2 --verify quad --order 16");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("m,value,ratio,exact_zero,quad,rel_err,agree\n", 0) == 0);
    std::istringstream is(res.out);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        CHECK(line.size() > 2);
        CHECK(line.substr(line.size() - 2) == ",1");
    }
}

TEST_CASE("verify eigen passes on a small preset") {
    auto res = run_cli("verify eigen --field R --n 4 --r 2 --deg 4 --nu 1");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "PASS eigen"));
    CHECK(!contains(res.out, "FAIL"));
}

TEST_CASE("verify bs-cos passes on a rank-1 system") {
    auto res =
        run_cli("verify bs-cos --rank 1 --a 0 --b2 1 --iota 0 --delta 2 --trials 5");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "PASS bs-cos"));
}

TEST_CASE("verify factors passes on a complex preset") {
    auto res = run_cli("verify factors --field C --n 4 --r 2 --delta 3.5 --trials 4");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "PASS factors"));
}

TEST_CASE("unknown suite is an error") {
    auto res = run_cli("verify nope");
    CHECK(res.status == 3);
    CHECK(contains(res.err, "unknown suite"));
}

TEST_CASE("stein scan reports sign changes past one half without failing") {
    auto res = run_cli("stein --field C --r 2 --deg 8 --grid 4");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("t,min_ratio,min_ratio_exact,argmin_m,positive,claim\n", 0) == 0);
    CHECK(contains(res.out, "1/5,"));
    CHECK(contains(res.out, ",1,positive-required"));
    CHECK(contains(res.out, ",0,report-only"));  // negative eigenvalue beyond 1/2
    CHECK(!contains(res.out, ",0,positive-required"));
}

TEST_CASE("stein accepts explicit rational t values") {
    auto res = run_cli("stein --field R --r 1 --deg 8 --t 1/4");
    CHECK(res.status == 0);
    CHECK(line_count(res.out) == 2);
    CHECK(contains(res.out, "1/4,"));
    CHECK(contains(res.out, ",1,positive-required"));

    auto bad = run_cli("stein --field R --r 1 --t 5/4");
    CHECK(bad.status == 3);
}

TEST_CASE("branching rejects the complex field") {
    auto res = run_cli("branching --field C --rank 1 --alpha 2");
    CHECK(res.status == 3);
    auto j = nlohmann::json::parse(res.err);
    CHECK(j.at("status") == "error");
}

TEST_CASE("branching lists the admissible weights") {
    auto res = run_cli("branching --field R --rank 1 --alpha 2 --deg 12");
    CHECK(res.status == 0);
    CHECK(res.out == "m,total_degree\n0,0\n2,2\n");
}

TEST_CASE("json output parses") {
    auto res = run_cli("spectrum --field C --n 4 --r 2 --nu 1/2 --deg 4 --format json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("command") == "spectrum");
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("rows")[0].contains("ratio"));
    CHECK(j.at("root_system").contains("preset"));

    auto s = run_cli("stein --field R --r 2 --deg 6 --grid 3 --format json");
    CHECK(s.status == 0);
    auto sj = nlohmann::json::parse(s.out);
    CHECK(sj.at("rows").size() == 3);
}
