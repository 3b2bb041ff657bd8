#include <doctest.h>

#include "z2tk/commands.hpp"

using namespace z2tk;
using nlohmann::json;

TEST_SUITE("commands") {

TEST_CASE("exit codes") {
    CHECK(run_command({{"command", "verify-relations"}, {"rep", "DEl"}}).exit_code == 0);
    CHECK(run_command({{"command", "verify-relations"}, {"rep", "bogus"}}).exit_code == 64);
    CHECK(run_command({{"command", "frobnicate"}}).exit_code == 64);
    CHECK(run_command({{"command", "probe"}, {"bogus_key", 1}}).exit_code == 64);
    CHECK(run_command(json::array()).exit_code == 64);
    CHECK(run_command(json::parse(R"({"command": "probe", "block": "D1", "points": [["0", "0"]]})")).exit_code == 64);
    CHECK(run_command(json::parse(R"({"command": "probe", "block": "D1", "points": [["1/2", "1"]]})")).exit_code == 0);
    CHECK(run_command(json::parse(R"({"command": "probe", "block": "D1", "points": [["0.5", "1"]]})")).exit_code == 64);
    CHECK(run_command({{"command", "mechanics"}, {"lagrangian", "L0"}}).exit_code == 0);
    CHECK(run_command({{"command", "mechanics"}, {"action1", true}, {"g", "mu*x*xbar"}}).exit_code == 2);
}

TEST_CASE("envelope") {
    CommandResult r = run_command({{"command", "verify-relations"}, {"rep", "DE"}});
    const json& j = r.report;
    CHECK(j["tool"] == "z2tk");
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "verify-relations");
    CHECK(j["status"] == "ok");
    CHECK(j["exit_code"] == 0);
    CHECK(j["summary"].is_array());
    CHECK(j["findings"].is_array());
    CHECK(j["data"].is_object());
    CHECK(render_text(j).find("verify-relations") != std::string::npos);
}

TEST_CASE("probe on the locus") {
    CommandResult r = run_command(
        json::parse(R"({"command": "probe", "block": "D2", "points": [["2", "4"]], "seed": ["1", "0"]})"));
    CHECK(r.exit_code == 0);
    CHECK(r.report.dump().find("\"closure_dim\":4") != std::string::npos);
}

TEST_CASE("deterministic reports") {
    json cfg{{"command", "decompose"}, {"rep", "DE"}};
    CHECK(run_command(cfg).report.dump() == run_command(cfg).report.dump());
}

} // TEST_SUITE
