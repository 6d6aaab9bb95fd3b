#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <set>
#include <string>

#include "satjac/constructions.hpp"
#include "satjac/json_io.hpp"

using namespace satjac;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SATJAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string torus_sextic_text() {
    WeightedHomogData w = diagonal_weighted_homog({2, 3});
    return construct_composite(w, 1, 1729).F.to_string();
}

}  // namespace

TEST_CASE("cli: analyze emits a full JSON report") {
    CliResult r = run_cli("analyze --n 2 --poly " + quoted(torus_sextic_text()) +
                          " --assert-irreducible --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("spec_version") == "1");
    CHECK(j.at("xi") == 12);
    CHECK(j.at("t_smooth") == "T-smooth");
    CHECK(j.at("root_exclusions").at("6").at("verdict") == "exceptional-triple");
    CHECK(j.at("root_exclusions").at("2").at("verdict") == "excluded-prime-power");
    CHECK(j.at("spectrum_bounds").at("entries").at("7/6") == 1);

    AnalysisReport back = analysis_report_from_json(j);
    CHECK(json_of(back).dump() == j.dump());  // round trip through the wire format
}

TEST_CASE("cli: analyze text rendering") {
    CliResult smooth = run_cli("analyze --n 2 --poly 'x0^3 + x1^3 + x2^3'");
    REQUIRE(smooth.exit_code == 0);
    CHECK(smooth.out == "smooth hypersurface; analysis trivial\n");

    CliResult torus = run_cli("analyze --n 2 --poly " + quoted(torus_sextic_text()) +
                              " --assert-irreducible");
    REQUIRE(torus.exit_code == 0);
    CHECK(torus.out.find("xi (total Tjurina number): 12") != std::string::npos);
    CHECK(torus.out.find("verdict: T-smooth (defect in degree 6 = 0)") != std::string::npos);
}

TEST_CASE("cli: classify") {
    CliResult r = run_cli("classify --n 2 --d 6 --k 6");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("exceptional case 1") != std::string::npos);

    CliResult j = run_cli("classify --n 4 --d 4 --k 1 --json");
    REQUIRE(j.exit_code == 0);
    CHECK(Json::parse(j.out).at("verdict").at("exceptional_case") == 6);
}

TEST_CASE("cli: sweep finds exactly the six families") {
    CliResult r = run_cli("sweep --n-max 12 --d-max 48 --json --failing-only");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    std::set<std::array<int, 3>> failing;
    for (const auto& v : j.at("failing")) {
        if (v.at("n") == 2 && (v.at("k") == 1 || v.at("zariski_prime_power") == true)) continue;
        failing.insert({v.at("n").get<int>(), v.at("d").get<int>(), v.at("k").get<int>()});
    }
    CHECK(failing.size() == 12);
    CHECK(failing.count({2, 6, 6}) == 1);
    CHECK(failing.count({2, 12, 6}) == 1);
    CHECK(failing.count({4, 4, 1}) == 1);
}

TEST_CASE("cli: hilbert oracle and ideal modes") {
    CliResult ci = run_cli("hilbert --n 2 --ci 3,4 --json");
    REQUIRE(ci.exit_code == 0);
    Json j = Json::parse(ci.out);
    CHECK(j.at("length") == 12);
    CHECK(j.at("last_defect_degree") == 4);
    CHECK(j.at("table")[4].at("h") == 11);

    CliResult ideal = run_cli("hilbert --n 2 --gen x0 --gen x1 --json");
    REQUIRE(ideal.exit_code == 0);
    Json k = Json::parse(ideal.out);
    CHECK(k.at("krull_dimension") == 1);
    CHECK(k.at("xi") == 1);
}

TEST_CASE("cli: construct with verification") {
    CliResult r = run_cli("construct --family composite --weights 1/2,1/3 --m 1 --verify --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("seed") == "1729");  // documented default
    CHECK(j.at("predicted_tjurina_total") == 12);
    CHECK(j.at("verification").at("status") == "confirmed");
    CHECK(j.at("verification").at("analysis").at("xi") == 12);

    CliResult cusps = run_cli("construct --family cusps --m 6 --a1 2 --b1 3 --json");
    REQUIRE(cusps.exit_code == 0);
    CHECK(Json::parse(cusps.out).at("tsmooth_prediction") == "not-T-smooth");
}

TEST_CASE("cli: exit code contract") {
    // 0: success
    CHECK(run_cli("alpha --n 2 --d 6 --k 6").exit_code == 0);
    // 2: input/parse errors
    CHECK(run_cli("analyze --n 2 --poly 'x9 + x0'").exit_code == 2);
    CHECK(run_cli("analyze --n 2 --poly '2x0'").exit_code == 2);
    CHECK(run_cli("classify --n 2 --d 6 --k 5").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    // 3: budget exceeded
    CHECK(run_cli("analyze --n 2 --poly " + quoted(torus_sextic_text()) +
                  " --max-spairs-budget 1")
              .exit_code == 3);
    // 4: hypothesis violations
    CHECK(run_cli("analyze --n 2 --poly 'x0^2 + x1'").exit_code == 4);
    CHECK(run_cli("analyze --n 2 --poly 'x0^3'").exit_code == 4);
}

TEST_CASE("cli: machine-readable errors with --json") {
    CliResult r = run_cli("analyze --n 2 --poly 'x9 + x0' --json");
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.out);
    CHECK(j.at("error").at("kind") == "parse");
    CHECK(j.at("error").at("position") == 0);

    CliResult h = run_cli("analyze --n 2 --poly 'x0^3' --json");
    CHECK(h.exit_code == 4);
    CHECK(Json::parse(h.out).at("error").at("kind") == "hypothesis");
}

TEST_CASE("cli: byte-identical output across runs") {
    std::vector<std::string> commands = {
        "analyze --n 2 --poly " + quoted(torus_sextic_text()) + " --assert-irreducible --json",
        "sweep --n-max 6 --d-max 12 --json",
        "construct --family composite --weights 1/2,1/3 --m 1 --json",
        "construct --family rfold --ell 2 --r 2 --m 2 --seed 42 --json",
        "hilbert --n 2 --ci 3,4 --json",
        "alpha --n 2 --d 6 --k 6 --json",
    };
    for (const auto& cmd : commands) {
        CliResult a = run_cli(cmd);
        CliResult b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
