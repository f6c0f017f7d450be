#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "kloc/cli/app.hpp"
#include "kloc/cli/cache.hpp"
#include "kloc/cli/report.hpp"

using namespace kloc;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "kloc");
    std::vector<char const *> argv;
    for (auto const & a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str() + err.str()};
}

fs::path temp_dir(std::string const & tag)
{
    auto d = fs::temp_directory_path() / ("kloc-test-" + tag + "-" + std::to_string(std::random_device{}()));
    fs::remove_all(d);
    return d;
}

} // namespace

TEST_CASE("sha256 digests")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("reports round trip through json")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        AnalysisReport r;
        r.field = "x^2+" + std::to_string(rng() % 100);
        r.p = rng() % 50;
        r.i = rng() % 20 + 1;
        r.verdict_kind = t % 3 == 0 ? "does_not_split" : t % 3 == 1 ? "splits_certified" : "no_obstruction_up_to";
        r.verdict_level = rng() % 3;
        for (unsigned n = 1; n <= rng() % 3; ++n) r.obstructions.push_back({n, {static_cast<std::int64_t>(rng() % 9)}, "nakayama"});
        for (auto & h : r.hypotheses) h = rng() % 2;
        r.conclusion = rng() % 2;
        if (t % 2) r.caveats.push_back("note " + std::to_string(t));
        r.timing_ms = rng() % 10000;
        auto j = to_json(r);
        CHECK(report_from_json(json::parse(j.dump())) == r);
    }
    CHECK_THROWS(report_from_json(json{{"field", "x"}}));
}

TEST_CASE("analyze command")
{
    auto r = run({"analyze", "--field", "x^6-793*x^3+226981", "--p", "3", "--i", "1"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verdict"]["kind"] == "does_not_split");
    CHECK(j["verdict"]["level"] == 1);
    CHECK(j["jaulent"]["conclusion"] == true);
    CHECK(j["obstructions"][0]["invariants"] == json::array({3}));
    std::set<std::string> keys;
    for (auto const & [k, v] : j.items()) keys.insert(k);
    CHECK(keys == std::set<std::string>{"field", "p", "i", "verdict", "obstructions", "jaulent", "caveats", "timing_ms"});

    auto qi = run({"analyze", "--field", "x^2+1", "--p", "2", "--i", "1", "--max-level", "1"});
    CHECK(qi.code == 0);
    auto jq = json::parse(qi.out);
    CHECK(jq["obstructions"][0]["invariants"].empty());

    auto bad = run({"analyze", "--field", "x", "--p", "3", "--i", "1"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out).contains("error"));
    CHECK(run({"analyze", "--field", "x^2+", "--p", "3"}).code == 1);
    CHECK(run({"analyze", "--field", "x^2-1", "--p", "3"}).code == 1);
    CHECK(run({"analyze", "--field", "x^2+1", "--p", "4"}).code == 1);
    CHECK(run({"analyze", "--field", "x^2-2", "--p", "2"}).code == 1);
    CHECK(run({"analyze", "--p", "3"}).code == 1);
}

TEST_CASE("effort exhaustion exits with 2")
{
    auto r = run({"analyze", "--field", "x^6-793*x^3+226981", "--p", "3", "--max-candidates", "3"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["error"]["kind"] == "EffortExceeded");
}

TEST_CASE("analyze-q command")
{
    auto r = run({"analyze-q", "--p", "37"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["rows"].size() == 36);
    for (auto const & row : j["rows"]) CHECK(row["splits"] == (row["i"] != 31));
    auto five = json::parse(run({"analyze-q", "--p", "5"}).out);
    for (auto const & row : five["rows"]) CHECK(row["splits"] == true);
    auto two = run({"analyze-q", "--p", "2"});
    CHECK(two.code == 1);
    CHECK(json::parse(two.out)["error"]["kind"] == "OutOfTheoremScope");
}

TEST_CASE("reproduce command")
{
    auto r = run({"reproduce", "example-4-3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS: (Cl^S)_3 = Z/3") != std::string::npos);
    auto q = run({"reproduce", "example-Q", "--p", "3"});
    CHECK(q.code == 0);
    CHECK(q.out.find("PASS: splits for all i") != std::string::npos);
    CHECK(run({"reproduce", "bogus"}).code == 1);
}

TEST_CASE("cache entries are written, reused and repaired")
{
    auto dir = temp_dir("cache");
    std::vector<std::string> args{"analyze", "--field", "x^2+23", "--p", "3", "--max-level", "1", "--cache-dir", dir.string(), "--seed", "7"};
    auto first = run(args);
    CHECK(first.code == 0);
    std::vector<fs::path> entries;
    for (auto const & e : fs::directory_iterator(dir)) entries.push_back(e.path());
    REQUIRE(!entries.empty());
    for (auto const & e : entries) {
        std::ifstream in(e);
        auto j = json::parse(in);
        CHECK(j["format_version"] == ClassGroupCache::format_version);
        CHECK(e.extension() == ".json");
    }
    auto again = run(args);
    CHECK(json::parse(again.out)["verdict"] == json::parse(first.out)["verdict"]);
    /* corrupt every entry */
    for (auto const & e : entries) std::ofstream(e, std::ios::trunc) << "{not json";
    auto repaired = run(args);
    CHECK(repaired.code == 0);
    CHECK(json::parse(repaired.out)["obstructions"] == json::parse(first.out)["obstructions"]);
    for (auto const & e : entries) {
        std::ifstream in(e);
        CHECK_NOTHROW(json::parse(in));
    }
    /* wrong elements are ignored, not trusted */
    auto k = NumberField::create(parse_polynomial("x^2+23"));
    ClassGroupCache cache(dir);
    auto path = cache.entry_path(k, 3);
    {
        std::ifstream in(path);
        auto j = json::parse(in);
        j["relations"] = json::array({json::array({"1", "1"}), json::array({"5", "0"})});
        j["certificates"] = json::array({json::array({"2", "7"})});
        std::ofstream(path, std::ios::trunc) << j.dump();
    }
    ClassGroupConfig cfg;
    cfg.focus = 3;
    CHECK(cache.get(k, cfg)->structure().invariants() == std::vector<Integer>{Integer(3)});
    CHECK(cache.hits() == 1);
    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment")
{
    auto dir = temp_dir("env");
    setenv("KLOC_CACHE", dir.string().c_str(), 1);
    CHECK(run({"analyze", "--field", "x^2+5", "--p", "5", "--max-level", "1"}).code == 0);
    unsetenv("KLOC_CACHE");
    CHECK(fs::exists(dir));
    CHECK(!fs::is_empty(dir));
    fs::remove_all(dir);
}
