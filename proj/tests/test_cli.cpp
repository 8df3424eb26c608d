#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(UMBRA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CmdResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("expand: closed forms in ascending-degree text") {
    auto r = run_cli("expand --family abel --n 2 --param b=1");
    CHECK(r.code == 0);
    CHECK(r.out == "-2*x + x^2\n");
    r = run_cli("expand --family exponential --n 3");
    CHECK(r.code == 0);
    CHECK(r.out == "x + 3*x^2 + x^3\n");
    r = run_cli("expand --family bernoulli --n 2");  // not a family name
    CHECK(r.code == 2);
}

TEST_CASE("expand: json wire format and rational params") {
    auto r = run_cli("expand --family abel --n 2 --param b=1 --format json");
    CHECK(r.code == 0);
    CHECK(r.out == "[\"0\",\"-2\",\"1\"]\n");
    r = run_cli("expand --family narumi --n 1 --param a=1/2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out == "[\"-1/4\",\"1\"]\n");
}

TEST_CASE("expand: usage errors exit 2") {
    CHECK(run_cli("expand --family abel --n 2 --param b=0").code == 2);
    CHECK(run_cli("expand --family abel --n 2").code == 2);     // missing b
    CHECK(run_cli("expand --family abel").code == 2);           // missing n
    CHECK(run_cli("expand --family abel --n 2 --param b").code == 2);
}

TEST_CASE("check: pass, fail domain, unknown id") {
    auto r = run_cli("check --id T9a --param n=1");
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(run_cli("check --id NOSUCH --param n=1").code == 2);
    CHECK(run_cli("check --id T1b --param n=2 --param m=1").code == 2);
    r = run_cli("check --id T8 --param n=1 --format json --deterministic");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("\"elapsed_ms\": 0.0") != std::string::npos);
}

TEST_CASE("suite: exit codes and filters") {
    auto r = run_cli("suite --nmax 2 --id T8 --id L11");
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("suite: deterministic runs are byte-identical and match the golden file") {
    const std::string args = "suite --nmax 2 --deterministic --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == read_file(std::string(UMBRA_GOLDEN_DIR) + "/report_nmax2.json"));
}

TEST_CASE("suite: --out writes the report to a file") {
    std::string path = "/tmp/umbra_cli_report.json";
    std::remove(path.c_str());
    auto r = run_cli("suite --nmax 1 --id X22 --deterministic --format json --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::string body = read_file(path);
    CHECK(body.find("\"failed\": 0") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("suite: serial runner matches default") {
    const std::string base = "suite --nmax 2 --id GF61 --deterministic --format json";
    auto a = run_cli(base);
    auto b = run_cli(base + " --serial");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}
