#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bbsp/cli.hpp"
#include "bbsp/spec_io.hpp"

using namespace bbsp;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bbsp");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/bbsp_test_" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("prepare from a spec file") {
    std::string path = write_temp("lin.json", R"({"d": 2, "n": 4, "form": "real", "values": [0.75, 0.25]})");
    Run r = run({"prepare", "--input", path});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["problem"] == "linear");
    CHECK(j["fidelity"].get<double>() == 1.0);
    CHECK(j["counts"]["toffoli"].get<long long>() > 0);
    CHECK(j["qubits"] == 14);

    Run zero = run({"prepare", "--input", path, "--rounds", "0"});
    auto z = nlohmann::json::parse(zero.out);
    const double a2 = (0.5625 + 0.0625) / 2;
    CHECK(z["success_probability"].get<double>() == doctest::Approx(a2).epsilon(1e-11));

    // deterministic output
    CHECK(run({"prepare", "--input", path}).out == r.out);
}

TEST_CASE("exact decimal parsing") {
    AmplitudeSpec s = parse_spec(R"({"d": 1, "n": 4, "form": "real", "values": [0.0625]})");
    CHECK(s.decimals[0][0] == "0.0625");
    CHECK(quantize_spec(s).first[0].magnitude == 1);
    AmplitudeSpec c = parse_spec(R"({"d": 1, "n": 2, "form": "cartesian", "values": [[-0.5, 0.25]]})");
    CHECK(quantize_spec(c).first[0].negative);
    CHECK_THROWS_AS(parse_spec(R"({"d": 1, "n": 2, "form": "real"})"), ArgumentError);
    CHECK_THROWS_AS(parse_spec(R"({"d": 1, "n": 2, "form": "real", "values": [0.5,)"), ArgumentError);
    CHECK_THROWS_AS(parse_spec(R"({"d": 1.5, "n": 2, "form": "real", "values": [0.5]})"), ArgumentError);
}

TEST_CASE("exit codes") {
    std::string lin = write_temp("lin2.json", R"({"d": 2, "n": 4, "form": "real", "values": [0.75, 0.25]})");
    std::string zero = write_temp("zero.json", R"({"d": 2, "n": 2, "form": "real", "values": [0.1, 0.2]})");
    std::string bad = write_temp("bad.json", R"({"d": 2, "n": 2, "form": "real", "values": [0.1]})");

    Run missing_eps = run({"prepare", "--problem", "root", "--input", lin});
    CHECK(missing_eps.code == 2);
    CHECK(missing_eps.err.find("eps") != std::string::npos);
    CHECK(std::count(missing_eps.err.begin(), missing_eps.err.end(), '\n') == 1);
    CHECK(run({"prepare", "--eps", "0.01", "--input", lin}).code == 2);
    CHECK(run({"prepare", "--input", bad}).code == 2);
    CHECK(run({"prepare", "--input", "/nonexistent.json"}).code == 2);
    CHECK(run({"prepare", "--bogus"}).code == 2);
    CHECK(run({"prepare", "--problem", "cartesian-linear", "--input", lin}).code == 2);
    CHECK(run({"prepare", "--input", zero}).code == 3);
    CHECK(run({"prepare", "--problem", "root", "--eps", "1e-9", "--input", lin}).code == 4);
    CHECK(run({}).code == 2);
}

TEST_CASE("table") {
    Run r = run({"table"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,comp_toffolis,arcsine_toffolis,factor\n17,17,4872,286\n23,23,7784,338\n30,30,11264,375\n");
}

TEST_CASE("sweep") {
    Run r = run({"sweep", "--dim", "4", "--min-bits", "3", "--bits", "6", "--seed", "2"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,infidelity");
    std::vector<double> inf;
    while (std::getline(in, line)) inf.push_back(std::stod(line.substr(line.find(',') + 1)));
    CHECK(inf.size() == 4);
    CHECK(inf.back() <= inf.front());

    std::string exact = write_temp("dyadic.json", R"({"d": 2, "n": 2, "form": "real", "values": [0.5, 0.25]})");
    Run d = run({"sweep", "--input", exact, "--min-bits", "2", "--bits", "4"});
    CHECK(d.out == "n,infidelity\n2,0\n3,0\n4,0\n");
}

TEST_CASE("output file") {
    std::string out = "/tmp/bbsp_test_table.csv";
    std::remove(out.c_str());
    CHECK(run({"table", "--output", out}).code == 0);
    std::ifstream f(out);
    std::string first;
    std::getline(f, first);
    CHECK(first == "n,comp_toffolis,arcsine_toffolis,factor");
}
