#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mactc/cli.hpp"
#include "mactc/json_io.hpp"

using namespace mactc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mactc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "mactc_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("maximize fixed phases") {
    auto r = run({"maximize", "--objective", "sum", "--alpha1", "0.2", "--alpha2", "0.2", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = json::parse(r.out);
    CHECK(j["rate"].get<double>() == doctest::Approx(2.812580).epsilon(1e-6));
    CHECK(j["case_id"] == "BothPdf");
    CHECK(j["baseline_rate"].get<double>() == doctest::Approx(std::log2(5.0)));

    r = run({"maximize", "--objective", "individual", "--alpha1", "0.5"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("2.664781") != std::string::npos);
    CHECK(r.out.find("DecodeForward") != std::string::npos);
}

TEST_CASE("gains") {
    for (auto [p, v] : {std::pair{"2", 0.848}, {"4", 0.918}, {"10", 0.965}}) {
        const auto r = run({"gains", "--g12", "5", "--p1", p, "--p2", p, "--json"});
        REQUIRE(r.code == kExitOk);
        const auto j = json::parse(r.out);
        CHECK(j["finite_sum"].get<double>() == doctest::Approx(v).epsilon(1e-3));
        CHECK(j["delta_r1"].get<double>() == doctest::Approx(2.0));
    }
}

TEST_CASE("scenario file overrides flags") {
    const auto path = tmp("scenario.json");
    write_text_file(path, json{{"gains", {{"g12", 0.5}, {"g10", 1.0}}}, {"p1", 2.0}, {"p2", 2.0}}.dump());
    const auto r = run({"maximize", "--scenario", path, "--g12", "5", "--objective", "individual", "--alpha1",
                        "0.5", "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out)["case_id"] == "Direct");
}

TEST_CASE("region and map outputs") {
    const auto prefix = tmp("reg");
    auto r = run({"region", "--alpha-step", "0.25", "--power-points", "3", "--out", prefix});
    REQUIRE(r.code == kExitOk);
    CHECK(std::filesystem::exists(prefix + "_envelope.csv"));
    CHECK(std::filesystem::exists(prefix + "_outer.csv"));
    CHECK(std::filesystem::exists(prefix + "_mac.csv"));

    const auto csv = tmp("m.csv"), summary = tmp("m.json");
    r = run({"map", "--objective", "individual", "--alpha1", "0.5", "--resolution", "11", "--out", csv,
             "--summary", summary});
    REQUIRE(r.code == kExitOk);
    const auto s = read_json_file(summary);
    int total = 0;
    for (const auto& [k, v] : s["histogram"].items()) total += v.get<int>();
    CHECK(total == 121);
}

TEST_CASE("oracle subcommand and golden verification") {
    auto r = run({"oracle", "--objective", "individual", "--alpha1", "0.5", "--points", "24", "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out)["pass"] == true);
    r = run({"oracle", "--verify", std::string(MACTC_GOLDEN_DIR) + "/oracle_individual.json"});
    CHECK(r.code == kExitOk);
    // a coarse oracle cannot meet a tiny tolerance
    r = run({"oracle", "--objective", "sum", "--alpha1", "0.2", "--alpha2", "0.2", "--points", "3",
             "--refine-rounds", "0", "--tolerance", "1e-9"});
    CHECK(r.code == kExitNumerical);
}

TEST_CASE("invalid input exits with 2") {
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"bogus"}).code == kExitInvalid);
    CHECK(run({"maximize", "--g12", "-1"}).code == kExitInvalid);
    CHECK(run({"maximize", "--objective", "nope"}).code == kExitInvalid);
    CHECK(run({"maximize", "--alpha1", "0.7", "--alpha2", "0.6", "--objective", "sum"}).code == kExitInvalid);
    CHECK(run({"gains", "--g10", "0"}).code == kExitInvalid);
    CHECK(run({"map", "--g12", "2"}).code == kExitInvalid);
    CHECK(run({"map", "--resolution", "1"}).code == kExitInvalid);
    CHECK(run({"maximize", "--scenario", "/nonexistent/file.json"}).code == kExitInvalid);
    const auto path = tmp("both.json");
    write_text_file(path, json{{"gains", {{"g12", 5}}}, {"topology", json::object()}}.dump());
    CHECK(run({"maximize", "--scenario", path}).code == kExitInvalid);
    write_text_file(path, "{not json");
    CHECK(run({"maximize", "--scenario", path}).code == kExitInvalid);
    CHECK(run({"--help"}).code == kExitOk);
}

}
