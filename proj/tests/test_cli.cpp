#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RECENTERS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip_timing(std::string s) {
    return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9]+"), "\"elapsed_ms\": X");
}

}  // namespace

TEST_CASE("catalog lists the built-in symmetries") {
    const auto r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"dj:2:2\"") != std::string::npos);
    CHECK(r.out.find("\"superflip:1|1\"") != std::string::npos);
    CHECK(r.out.find("\"critical_charge_trig\": \"16\"") != std::string::npos);
}

TEST_CASE("check-symmetry passes on a catalog braiding") {
    const auto r = run_cli("check-symmetry --symmetry dj:2:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"overall\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("ogievetsky_identity") != std::string::npos);
}

TEST_CASE("birank reports dims and (m|n)") {
    const auto r = run_cli("birank --symmetry 'superflip:1|1'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"m\": 1") != std::string::npos);
    CHECK(r.out.find("\"n\": 1") != std::string::npos);
    CHECK(r.out.find("\"status\": \"confirmed\"") != std::string::npos);

    const auto r2 = run_cli("birank --symmetry flip:2 --kmax 4");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("\"dims\": [") != std::string::npos);
}

TEST_CASE("baxterize-check runs both flavors") {
    const auto r = run_cli("baxterize-check --symmetry dj:2:2 --flavor trig --samples 2 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"qybe\"") != std::string::npos);
    CHECK(r.out.find("\"equal_denominator\"") != std::string::npos);

    const auto r2 = run_cli("baxterize-check --symmetry flip:2 --flavor rational --samples 2 --seed 7");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("centrality exit codes distinguish central and non-central") {
    const auto crit = run_cli("centrality --symmetry dj:2:2 --flavor trig --charge critical --k 1 --samples 2 --seed 5");
    CHECK(crit.exit_code == 0);
    CHECK(crit.out.find("\"residual_zero\": true") != std::string::npos);

    const auto one = run_cli("centrality --symmetry dj:2:2 --flavor trig --charge one --k 1 --samples 2 --seed 5");
    CHECK(one.exit_code == 1);
    CHECK(one.out.find("\"residual_zero\": false") != std::string::npos);
    CHECK(one.out.find("condition agrees") != std::string::npos);

    // higher sums at non-(m|m): reported, not asserted -> exit 0
    const auto rep = run_cli("centrality --symmetry dj:2:2 --flavor trig --charge critical --k 2 --samples 1 --seed 5");
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("reported only") != std::string::npos);

    // (m|m) at critical: asserted and zero
    const auto mm = run_cli("centrality --symmetry 'qsuper:1|1:2' --flavor trig --charge critical --k 2 --samples 1 --seed 5");
    CHECK(mm.exit_code == 0);
    CHECK(mm.out.find("\"residual_zero\": true") != std::string::npos);
}

TEST_CASE("identity-4-3 and push-through") {
    const auto id43 = run_cli("identity-4-3 --symmetry dj:2:2 --k 2 --samples 1 --seed 3");
    CHECK(id43.exit_code == 0);
    CHECK(id43.out.find("power sums non-central") != std::string::npos);

    const auto id43s = run_cli("identity-4-3 --symmetry 'qsuper:1|1:2' --k 2 --samples 1 --seed 3");
    CHECK(id43s.exit_code == 0);
    CHECK(id43s.out.find("power sums central") != std::string::npos);

    const auto push = run_cli("push-through --symmetry dj:2:2 --charge critical --k 2 --samples 1 --seed 3");
    CHECK(push.exit_code == 0);
}

TEST_CASE("reports are deterministic per seed, modulo timing") {
    const std::string args = "centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 2 --seed 11";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(strip_timing(a.out) == strip_timing(b.out));

    const auto c = run_cli("centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 2 --seed 12");
    CHECK(strip_timing(a.out) != strip_timing(c.out));
}

TEST_CASE("record count scales with --samples") {
    const auto r2 = run_cli("centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 2 --seed 4");
    const auto r5 = run_cli("centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 5 --seed 4");
    auto count = [](const std::string& s) {
        size_t n = 0, pos = 0;
        while ((pos = s.find("\"first_central\"", pos)) != std::string::npos) { ++n; pos += 10; }
        return n;
    };
    CHECK(count(r2.out) == 2);
    CHECK(count(r5.out) == 5);
}

TEST_CASE("csv output") {
    const auto r = run_cli("centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 1 --seed 2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check,braiding,birank,charge,points,residual_zero") != std::string::npos);
    CHECK(r.out.find("first_central,flip:2,2|0,-2,") != std::string::npos);
}

TEST_CASE("errors: unknown symmetry and malformed matrix file") {
    const auto bad = run_cli("check-symmetry --symmetry nope:9");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("unknown symmetry") != std::string::npos);

    const std::string path = "cli_bad_matrix.txt";
    {
        std::ofstream f(path);
        f << "N 2 LEGS 2\n1 2 3\n";
    }
    const auto mal = run_cli("check-symmetry --matrix-file " + path + " --kind hecke --q 2");
    CHECK(mal.exit_code == 1);
    std::remove(path.c_str());

    const auto nong = run_cli("check-symmetry --symmetry dj:2:1");
    CHECK(nong.exit_code == 1);
    CHECK(nong.out.find("non-generic") != std::string::npos);
}

TEST_CASE("RE_CENTERS_SEED env sets the default seed") {
    const auto r = run_cli("centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 1 --seed 33");
    // same run via env
    const std::string cmd = std::string("RE_CENTERS_SEED=33 ") + RECENTERS_CLI_PATH +
                            " centrality --symmetry flip:2 --flavor rational --charge critical --k 1 --samples 1 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    CHECK(strip_timing(out) == strip_timing(r.out));
}
