#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/config.hpp"
#include "doctest.h"
#include "json.hpp"
#include "ssz/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ssz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("ssz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d / name;
}

} // namespace

TEST_CASE("eval F") {
    const auto r = run({"eval", "F", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "12\n");
    const auto j = json::parse(run({"eval", "F", "6", "--format", "json"}).out);
    CHECK(j["F"]["value"] == 12);
    CHECK(j["F"]["exact"] == true);
}

TEST_CASE("apps R") {
    CHECK(run({"apps", "R", "--x", "5"}).out == "31/30 {2,3,5}\n");
    CHECK(run({"apps", "R", "--x", "11"}).out == "4699/4620 {3,4,5,7,11}\n");
    const auto refused = run({"apps", "R", "--x", "60"});
    CHECK(refused.code == ssz::cli::kExitResource);
    CHECK(run({"--exact-limit", "10", "apps", "R", "--x", "11"}).code == ssz::cli::kExitResource);
    const auto h = run({"apps", "R", "--x", "60", "--heuristic", "--format", "json"});
    CHECK(h.code == 0);
    CHECK(json::parse(h.out)["optimal"] == false);
}

TEST_CASE("apps H, Hstar, f and recipB") {
    CHECK(run({"apps", "H", "--x", "6"}).out.rfind("2 ", 0) == 0);
    const auto hs = json::parse(run({"apps", "Hstar", "--x", "30", "--format", "json"}).out);
    CHECK(hs["feasible"] == true);
    CHECK(hs["Hstar"]["exact"] == true);
    CHECK(run({"apps", "f", "--n", "4"}).out.rfind("4 ", 0) == 0);
    CHECK(run({"apps", "f", "--n", "30"}).code == ssz::cli::kExitResource);
    const auto rb = json::parse(run({"apps", "recipB", "--x", "4", "--format", "json"}).out);
    CHECK(rb["sum_recip_B"]["value"] == "7/12");
    CHECK(rb["frac_sum_B"]["value"] == "1/3");
}

TEST_CASE("count and enum") {
    CHECK(run({"count", "A", "--x", "10"}).out == "4\n");
    CHECK(run({"count", "phi", "--x", "100", "--z", "3"}).code == 0);
    const auto b = run({"enum", "B", "--x", "4", "--format", "csv"});
    CHECK(b.out == "n,spf\n3,3\n4,2\n");
    const auto m = json::parse(run({"enum", "members", "--x", "30", "--y", "2", "--format", "json"}).out);
    CHECK(m["set"]["exact"] == true);
    CHECK(m["set"]["members"].front() == 1);
}

TEST_CASE("density grid output") {
    const auto r = run({"density", "omega", "--h", "0.001", "--umax", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("u,value\n", 0) == 0);
    CHECK(run({"density", "d", "--h", "0.5"}).code == ssz::cli::kExitInvalid);
}

TEST_CASE("const a JSON carries an enclosure") {
    const auto r = run({"const", "a", "--y", "1", "--z", "1", "--N", "4194304", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["lo"].get<double>() <= 1.53796);
    CHECK(j["hi"].get<double>() >= 1.53796);
    CHECK(j["width"].get<double>() > 0);
    for (const auto& s : j["sub_terms"]) {
        CHECK(s.contains("lo"));
        CHECK(s.contains("hi"));
    }
    CHECK_FALSE(j["params"]["eta_anchors"].empty());
}

TEST_CASE("reruns with equal manifests give identical bytes") {
    const fs::path out = scratch("c.json");
    REQUIRE(run({"--out", out.string(), "const", "c", "--y", "2", "--N", "65536", "--format", "json"}).code == 0);
    const std::string first = slurp(out);
    const json m1 = json::parse(slurp(out.string() + ".manifest.json"));
    REQUIRE(run({"--out", out.string(), "const", "c", "--y", "2", "--N", "65536", "--format", "json", "--jobs", "3"}).code == 0);
    CHECK(slurp(out) == first);
    CHECK(json::parse(first)["manifest"] == "c.json.manifest.json");
    CHECK(m1["sieve_limit"].get<std::uint64_t>() >= 65536);
    CHECK(m1.contains("timings"));
    CHECK(m1["outputs"].front() == out.string());
}

TEST_CASE("configuration errors and overrides") {
    const fs::path bad = scratch("bad.cfg");
    std::ofstream(bad) << "eta_default_anchors = false\neta_anchor = 99999999999 : 0.001\n";
    CHECK(run({"--config", bad.string(), "const", "a", "--N", "65536"}).code == ssz::cli::kExitConfig);

    const fs::path prec = scratch("prec.cfg");
    std::ofstream(prec) << "precision_bits = 113\n";
    CHECK(run({"--config", prec.string(), "eval", "F", "6"}).code == ssz::cli::kExitConfig);
    CHECK(run({"--config", scratch("missing.cfg").string(), "eval", "F", "6"}).code == ssz::cli::kExitConfig);

    const auto cfg = ssz::cli::parse_config("sieve_limit = 1000 # small\n\neta_anchor = 100 : 0.5\n");
    CHECK(cfg.sieve_limit == 1000u);
    CHECK(cfg.eta.anchors.size() == 3);
    CHECK(cfg.eta.anchors.back().from == 100);
    CHECK_THROWS_AS(ssz::cli::parse_config("nonsense = 1\n"), ssz::ConfigError);
    CHECK_THROWS_AS(ssz::cli::parse_config("eta_anchor = 2.5 : 1\n"), ssz::ConfigError);
    CHECK_THROWS_AS(ssz::cli::parse_config("no equals sign\n"), ssz::ConfigError);
}

TEST_CASE("invalid arguments") {
    CHECK(run({}).code == ssz::cli::kExitInvalid);
    CHECK(run({"eval", "G", "6"}).code == ssz::cli::kExitInvalid);
    CHECK(run({"count", "A", "--x", "1/0"}).code == ssz::cli::kExitInvalid);
    CHECK(run({"count", "A", "--x", "10", "--z", "4-0"}).code == ssz::cli::kExitInvalid);
    CHECK(run({"--format", "xml", "eval", "F", "6"}).code == ssz::cli::kExitInvalid);
    CHECK(run({"--help"}).code == 0);
}
