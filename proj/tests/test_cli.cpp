#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "nlohmann/json.hpp"

#ifndef ORBIWEIGHT_CLI_PATH
#error "ORBIWEIGHT_CLI_PATH must point at the built binary"
#endif

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run `args` through the shell, capturing stdout; `prefix` lets tests pipe
// into stdin or set environment variables
RunResult run_cli(const std::string& args, const std::string& prefix = "",
                  bool merge_stderr = false) {
    std::string cmd = prefix + "\"" ORBIWEIGHT_CLI_PATH "\" " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json envelope(const RunResult& r) {
    const json j = json::parse(r.out);
    REQUIRE(j.is_object());
    REQUIRE(j.size() == 3);
    REQUIRE(j.contains("status"));
    REQUIRE(j.contains("payload"));
    REQUIRE(j.contains("diagnostics"));
    return j;
}

} // namespace

TEST_CASE("torus surgery example") {
    const RunResult r = run_cli("torus-surgery --p 3 --q 2 --json");
    CHECK(r.exit_code == 0);
    const json j = envelope(r);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["base"] == "S2(2,3,6)");
    CHECK(j["payload"]["euler"] == "0");
    CHECK(j["payload"]["pairs"] == json::array({json::array({3, 2}), json::array({2, 3}),
                                                json::array({6, -13})}));
    CHECK(j["payload"]["connected_sum"] == false);
}

TEST_CASE("witness search example: a class where no witness exists") {
    const RunResult r = run_cli("lemma2 --a 3 --b 4 --c 5 --d 1 --e 1 --f 3 --brute --json");
    CHECK(r.exit_code == 0);
    const json j = envelope(r);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["witness"].is_null());
    CHECK(j["payload"]["method"] == "exhaustive");
}

TEST_CASE("odd parameter is a precondition failure") {
    const RunResult r = run_cli("theorem10 --e 3 --json");
    CHECK(r.exit_code == 2);
    const json j = envelope(r);
    CHECK(j["status"] == "precondition");
    CHECK(j["payload"].is_null());
    // human mode reports on stderr with the same exit code
    const RunResult h = run_cli("theorem10 --e 3", "", /*merge_stderr=*/true);
    CHECK(h.exit_code == 2);
    CHECK(h.out.find("precondition") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("no-such-subcommand", "", true).exit_code == 1);
    CHECK(run_cli("", "", true).exit_code == 1);
    CHECK(run_cli("torus-surgery --p 3", "", true).exit_code == 1); // missing --q
}

TEST_CASE("parse failures surface as errors") {
    const RunResult r = run_cli("classify-base \"T2(3)\" --json");
    CHECK(r.exit_code == 1);
    const json j = envelope(r);
    CHECK(j["status"] == "error");
    CHECK(j["payload"].is_null());
    REQUIRE(j["diagnostics"].size() == 1);
}

TEST_CASE("lattice knot payload schema") {
    const RunResult r = run_cli("theorem10 --e 2 --json");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    REQUIRE(p.is_object());
    REQUIRE(p.size() == 6);
    for (const char* key : {"e", "presentation", "abelianization", "theta",
                            "smith_of_theta_minus_I", "centrality"})
        CHECK(p.contains(key));
    CHECK(p["e"] == 2);
    CHECK(p["abelianization"]["is_infinite_cyclic"] == true);
    CHECK(p["theta"] == json::array({json::array({0, -1}), json::array({-1, 0})}));
    CHECK(p["smith_of_theta_minus_I"] == json::array({1, 0}));
    CHECK(p["centrality"]["square"]["element"] == "(t^3 x)^2");
    CHECK(p["centrality"]["square"]["central"] == false);
    CHECK(p["centrality"]["first_power"]["central"] == false);
    CHECK(p["centrality"]["observed_generator"]["element"] == "(t^3 u^2)^2");
    CHECK(p["centrality"]["observed_generator"]["central"] == true);
}

TEST_CASE("certificate payload carries witness and trace angles") {
    const RunResult r = run_cli("weight-cert --a 3 --b 5 --c 7 --eu 1 --ex 0 --ey 0 --ez 0 --json");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    CHECK(p["verdict"]["kind"] == "ObstructedByGoodTriple");
    CHECK(p["verdict"]["reason"] == "constructive case (u,1,1)");
    CHECK(p["residues"] == json({{"d", 1}, {"e", 1}, {"f", 1}}));
    CHECK(p["witness"] == json({{"r", 1}, {"s", 1}, {"t", 1}}));
    REQUIRE(p["angles"].is_object());
    CHECK(p["angles"]["alpha"] == "71/210");
    CHECK(p["angles"]["delta"] == "-1/210");
    CHECK(p["angles"]["distinct_parities"] == true);
}

TEST_CASE("divisibility gates in the certificate") {
    const RunResult r = run_cli("weight-cert --a 3 --b 5 --c 7 --eu 1 --ex 1 --ey 0 --ez 0 --json");
    const json p = envelope(r)["payload"];
    CHECK(p["verdict"]["kind"] == "KilledByDivisibility");
    CHECK(p["verdict"]["reason"] == "a divides d");
    CHECK(p["witness"].is_null());
    CHECK(p["angles"].is_null());
}

TEST_CASE("presentations read from stdin") {
    const RunResult r =
        run_cli("abelianize - --json", "printf 'x y\\nx^2 = y^3\\n' | ");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    CHECK(p["abelianization"]["is_infinite_cyclic"] == true);
    CHECK(p["criteria_agree"] == true);
}

TEST_CASE("sweep results do not depend on the worker count") {
    const RunResult one = run_cli("lemma2 --sweep-max 11 --json", "ORBIWEIGHT_THREADS=1 ");
    const RunResult two = run_cli("lemma2 --sweep-max 11 --json", "ORBIWEIGHT_THREADS=2 ");
    CHECK(one.exit_code == 0);
    CHECK(two.exit_code == 0);
    // diagnostics mention the worker count, so compare payloads
    CHECK(envelope(one)["payload"] == envelope(two)["payload"]);
}

TEST_CASE("seeded runs are byte-identical") {
    const std::string args = "theorem9 --case s2 --sweep 60 --seed 7 --json";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(envelope(a)["payload"]["disagreements"] == 0);
    // a different seed samples different instances but stays schema-valid
    const RunResult c = run_cli("theorem9 --case disk --sweep 40 --seed 11 --json");
    CHECK(c.exit_code == 0);
    const json p = envelope(c)["payload"];
    CHECK(p.contains("reading_a_mismatches"));
    CHECK(p.contains("reading_b_mismatches"));
    CHECK(p.contains("discrepancies"));
}

TEST_CASE("classifier and presentation subcommands round-trip") {
    const RunResult r = run_cli("classify-base \"S2(2,3,6)\" --json");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    CHECK(p["base"] == "S2(2,3,6)");
    CHECK(p["admissible"] == true);

    const RunResult pres = run_cli("orbifold-pres \"P2(2,3)\" --json");
    CHECK(pres.exit_code == 0);
    const json pp = envelope(pres)["payload"];
    CHECK(pp["presentation"]["generators"] == json::array({"u", "v1", "v2"}));

    const RunResult bad = run_cli("classify-base \"P2(3,5,7)\" --json");
    CHECK(bad.exit_code == 0); // inadmissible is a verdict, not an error
    CHECK(envelope(bad)["payload"]["admissible"] == false);
}

TEST_CASE("fibration check accepts the polynomial option") {
    const RunResult r = run_cli("theorem5 \"S2(2,3,6) ; (3,2) (2,3) (6,-13)\" --alexander 3 2 --json");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    CHECK(p["overall"] == true);
    CHECK(p["conditions"]["5"] == true);
    CHECK(p["conditions"]["4"].is_string());
}

TEST_CASE("good-triple and lemma1 in human mode") {
    const RunResult g = run_cli("good-triple --xi 1/6 --eta 1/4 --zeta 1/3");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("the triple is good") != std::string::npos);

    const RunResult l = run_cli("lemma1 --xi 1/6 --eta 1/4 --zeta 1/3 --json");
    CHECK(l.exit_code == 0);
    const json p = envelope(l)["payload"];
    CHECK(p["theta"] == json({{"at_plus", "+1"}, {"at_minus", "-1"}}));
    CHECK(p["phi"] == json({{"at_plus", "+1"}, {"at_minus", "+1"}}));
    CHECK(p["theta_bijection"] == true);
    CHECK(p["phi_bijection"] == false);

    const RunResult bad = run_cli("lemma1 --xi 1/4 --eta 1/4 --zeta 1/2 --json");
    CHECK(bad.exit_code == 2);
    CHECK(envelope(bad)["status"] == "precondition");
}

TEST_CASE("alexander subcommand") {
    const RunResult r = run_cli("alexander --p 3 --q 2 --json");
    CHECK(r.exit_code == 0);
    const json p = envelope(r)["payload"];
    CHECK(p["delta"] == "1 - t + t^2");
    CHECK(p["degree"] == 2);
    CHECK(p["squarefree"] == true);
    CHECK(p["cyclotomic_factors"] == json::array({6}));
}
