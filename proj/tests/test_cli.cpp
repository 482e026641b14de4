// End-to-end checks of the command line tool: exit codes, printed
// expansions, and byte-identical machine-readable output across runs and
// worker counts.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QGENUS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("expand prints the exact modular form expansions") {
    RunResult r = run("expand delta2 --order 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-1/8 - 3*q^(1/2) - 3*q"));

    r = run("expand eps2 --order 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1*q^(1/2) + 8*q"));

    r = run("expand delta1 --order 4");
    CHECK(contains(r.out, "1/4 + 6*q + 6*q^2"));

    r = run("expand nosuchtarget");
    CHECK(r.exit_code == 2);
}

TEST_CASE("expand P2 leading coefficient is the A-hat top") {
    RunResult r = run("expand P2 --dim 12 --order 1");
    CHECK(r.exit_code == 0);
    // {A-hat}^{(12)} = (-31 p1^3 + 44 p1 p2 - 16 p3)/967680
    CHECK(contains(r.out, "q^(0/2):"));
    CHECK(contains(r.out, "-1/60480*p3"));
    CHECK(contains(r.out, "+ 11/241920*p1*p2"));
    CHECK(contains(r.out, "- 31/967680*p1^3"));

    r = run("expand P2 --order 2"); // missing --dim
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify single theorem case shows the right hand side") {
    RunResult r = run("verify --theorem 2.1 --dim 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "[PASS] theorem-2.1-dim12"));
    // rhs = -2^14 {A-hat}^{(12)}
    CHECK(contains(r.out, "256/945*p3"));
    CHECK(contains(r.out, "- 704/945*p1*p2"));
    CHECK(contains(r.out, "+ 496/945*p1^3"));
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run("verify --dim 6").exit_code == 2);
    CHECK(run("verify --theorem 9.9").exit_code == 2);
    CHECK(run("verify --degree 4 --dim 4").exit_code == 2);
    CHECK(run("manifold Klein").exit_code == 2);
    CHECK(run("nonsense").exit_code != 0);
}

TEST_CASE("manifold tables") {
    RunResult r = run("manifold K3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Sig = -16"));
    CHECK(contains(r.out, "Sig(.,T) = -256"));
    CHECK(contains(r.out, "quotient -1"));

    r = run("manifold K3xBott8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Sig(.,TxT) = -1802240"));

    r = run("manifold \"HP2*HP2\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Sig = 1"));
    CHECK(contains(r.out, "Sig(.,T) = 0"));
}

TEST_CASE("machine-readable output is byte-identical across runs and jobs") {
    RunResult a = run("--format json verify --dim 4");
    RunResult b = run("--format json verify --dim 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("--format json verify --dim 4 --jobs 3");
    CHECK(c.exit_code == 0);
    CHECK(a.out == c.out);
    CHECK(contains(a.out, "\"status\": \"pass\""));
    CHECK(contains(a.out, "\"case\": \"theorem-2.1-dim04\""));

    // cases come out sorted by id
    std::vector<std::string> ids;
    std::size_t pos = 0;
    const std::string key = "\"case\": \"";
    while ((pos = a.out.find(key, pos)) != std::string::npos) {
        pos += key.size();
        ids.push_back(a.out.substr(pos, a.out.find('"', pos) - pos));
    }
    CHECK(ids.size() > 5);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("verify exits zero on a passing slice") {
    RunResult r = run("verify --dim 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "all checks passed"));
}

TEST_CASE("full suite passes end to end") {
    RunResult r = run("verify --all --max-dim 28 --jobs 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "all checks passed"));
    CHECK(contains(r.out, "theorem-2.2-dim28"));
    CHECK(contains(r.out, "corollary-2.12-dim24"));
    CHECK(contains(r.out, "divisibility-dim28"));
}
