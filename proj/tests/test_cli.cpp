#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#ifndef SYMSCHEME_CLI
#error "SYMSCHEME_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "")
{
    std::string outfile = "cli_out.tmp";
    std::string cmd = env + " " + std::string(SYMSCHEME_CLI) + " " + args + " > " + outfile +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(status);
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(outfile.c_str());
    return r;
}

} // namespace

TEST_CASE("bounds subcommand prints the additive bound")
{
    RunResult r = run_cli("bounds --m 4 --q 3 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out == "6561\n");
}

TEST_CASE("lp subcommand prints the exact optimum")
{
    RunResult r = run_cli("lp --m 2 --q 3 --d 2 --certificate");
    CHECK(r.code == 0);
    CHECK(r.out == "9\n");
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("bounds --m 4").code == 2);
    CHECK(run_cli("qnumbers --m 2 --q 3 --method bogus").code == 2);
}

TEST_CASE("budget violations exit with code 3")
{
    RunResult r = run_cli("construct --s 1 --t 1 --m 4 --q 3 --dist",
                          "SYMSCHEME_BUDGET=10");
    CHECK(r.code == 3);
}

TEST_CASE("qnumbers output is identical across exact methods")
{
    RunResult a = run_cli("qnumbers --m 2 --q 3 --method explicit --json");
    RunResult b = run_cli("qnumbers --m 2 --q 3 --method recurrence --json");
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
}

TEST_CASE("construct --dist reproduces the reference row")
{
    RunResult r = run_cli("construct --s 1 --t 1 --m 4 --q 3 --dist");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"num\": \"2340\"") != std::string::npos);
    CHECK(r.out.find("\"num\": \"1800\"") != std::string::npos);
}

TEST_CASE("form sets round-trip through the dist subcommand")
{
    RunResult e = run_cli("construct --s 1 --t 0 --m 3 --q 3 --emit cli_forms.tmp");
    REQUIRE(e.code == 0);
    RunResult d = run_cli("dist --input cli_forms.tmp --dual --csv");
    CHECK(d.code == 0);
    CHECK(d.out.find("3,1,13") != std::string::npos);
    CHECK(d.out.find("3,-1,13") != std::string::npos);
    std::remove("cli_forms.tmp");
}

TEST_CASE("code subcommand reports matching enumerators")
{
    RunResult r = run_cli(
        "code --construct 1,0,3,3 --which c1 --enumerator both --mindist --zeros");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"enumerators_agree\": true") != std::string::npos);
    CHECK(r.out.find("\"min_distance\": \"18\"") != std::string::npos);
}

TEST_CASE("verify runs a single criterion")
{
    RunResult r = run_cli("verify --only 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("criterion 3: PASS") != std::string::npos);
}
