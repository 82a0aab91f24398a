#include <doctest.h>

#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = jetcalc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect_code)
{
    args.insert(args.begin(), {"--format", "json", "--no-timing"});
    Run r = run(args);
    CHECK(r.code == expect_code);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("report schema")
{
    json j = run_json({"verify", "rel1"}, 0);
    for (const char* k : {"command", "inputs", "expected", "computed", "match", "tags", "elapsed_ms"})
        CHECK(j.contains(k));
    CHECK(j["match"] == true);
    CHECK(j["elapsed_ms"] == 0);
    CHECK(j["command"] == "verify rel1");
    CHECK(j["tags"]["convention"] == "printed-ch-truncation");
}

TEST_CASE("keys come out sorted and the output is deterministic")
{
    Run a = run({"--format", "json", "--no-timing", "dims"});
    Run b = run({"dims", "--format", "json", "--no-timing"});
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("verify targets")
{
    for (const char* t : {"rel1", "rel2", "rel3", "chern-v1", "whitney", "z2"})
        CHECK(run_json({"verify", t}, 0)["match"] == true);
    json z = run_json({"verify", "z2", "--d", "7"}, 0);
    CHECK(z["computed"]["z2"] == "-d1 - a1 - 2*h");
    json full = run_json({"verify", "chern-v1", "--convention", "full"}, 1);
    CHECK(full["tags"]["convention"] == "full-ch");
}

TEST_CASE("mismatches exit with 1 and name the closest ordering")
{
    json m = run_json({"morse"}, 1);
    CHECK(m["tags"]["ordering_used"] == "none");
    CHECK(m["tags"]["closest_ordering"] == "per-level");
    CHECK(m["computed"]["per-level"]["threshold"] == 30);
    CHECK(m["computed"]["reversed"]["threshold"].is_null());
    json r = run_json({"morse", "--ordering", "reversed"}, 1);
    CHECK_FALSE(r["computed"].contains("per-level"));
}

TEST_CASE("threshold on explicit coefficients")
{
    json printed = run_json({"threshold", "--printed"}, 0);
    CHECK(printed["computed"]["threshold"] == 19);
    CHECK(printed["computed"]["value_at_threshold_minus_1"] == "-3441987360");
    json custom = run_json({"threshold", "--coeffs", "1,-5,-13,-5,-14"}, 1);
    CHECK(custom["computed"]["threshold"] == 8);
    CHECK(run({"threshold", "--coeffs", "1,x"}).code == 2);
}

TEST_CASE("bound report carries the exact evaluations")
{
    json b = run_json({"bound93"}, 1);
    CHECK(b["computed"]["printed_alpha_bound"] == 93);
    CHECK(b["computed"]["printed_alpha(93,84/88)"] == "287648256000");
    CHECK(b["computed"]["bound"] == 161);
}

TEST_CASE("combinatorial commands")
{
    CHECK(run_json({"ranks"}, 0)["match"] == true);
    json one = run_json({"ranks", "--p", "2", "--k", "2", "--m", "2", "--n", "2"}, 0);
    CHECK(one["computed"]["graded"][0][4] == 36);
    CHECK(run_json({"vanishing"}, 0)["match"] == true);
    json e = run_json({"euler-char", "--d", "6"}, 1);
    CHECK(e["computed"]["leading"] == "-13/2");
    CHECK(e["computed"]["routes_agree"] == true);
    CHECK(run_json({"dims"}, 0)["computed"]["dim_Xk"] == 9);
}

TEST_CASE("jet-space commands")
{
    json t = run_json({"tangency", "--d", "3"}, 0);
    CHECK(t["computed"]["fields"]["210"] == 12);
    json p = run_json({"pole-audit"}, 0);
    CHECK(p["computed"]["order"] == 7);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"verify", "rel9"}).code == 2);
    CHECK(run({"morse", "--ordering", "sideways"}).code == 2);
    CHECK(run({"--format", "yaml", "dims"}).code == 2);
    CHECK(run({"tangency", "--d", "9"}).code == 2);
    CHECK(run({"morse", "--weights", "1,2,3"}).code == 2);
    Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("text output and --out")
{
    auto path = std::filesystem::temp_directory_path() / "jetcalc_cli_test.txt";
    Run r = run({"--no-timing", "--out", path.string(), "vanishing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("match: yes") != std::string::npos);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == r.out);
    std::filesystem::remove(path);
}

TEST_CASE("the installed binary")
{
    std::string cmd = std::string(JETCALC_BIN) + " --no-timing verify rel1 > /dev/null";
    int status = std::system(cmd.c_str());
    CHECK(status == 0);
    std::string bad = std::string(JETCALC_BIN) + " bogus > /dev/null 2>&1";
    int code = std::system(bad.c_str());
    CHECK(WEXITSTATUS(code) == 2);
}
