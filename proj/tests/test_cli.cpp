#include "doctest.h"

#include "tq/cli/claims.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <set>

using namespace tq;

namespace {

nlohmann::json sample_json() {
    std::ifstream in(std::string(TQ_DATA_DIR) + "/reference_sample.json");
    return nlohmann::json::parse(in);
}

std::map<std::string, ClaimRecord> by_id(const std::vector<ClaimRecord>& claims) {
    std::map<std::string, ClaimRecord> m;
    for (const auto& c : claims)
        m.emplace(c.claim_id, c);
    return m;
}

}  // namespace

TEST_CASE("parsing coefficient files") {
    auto j = sample_json();
    QuarticCoefficients c = parse_input_json(j);
    CHECK(c.values() == reference_sample().values());
    CHECK(c.delta == 1);

    j["a1"] = "3/7";
    CHECK(parse_input_json(j).a1 == make_rational(3, 7));
    j["a1"] = " -6/14 ";
    CHECK(parse_input_json(j).a1 == make_rational(-3, 7));
    j["a1"] = 4;
    CHECK(parse_input_json(j).a1 == 4);
    j["delta"] = "2";
    CHECK(parse_input_json(j).delta == 2);

    auto zero = sample_json();
    zero["a0"] = "0";
    QuarticCoefficients z = parse_input_json(zero);
    CHECK(z.a0 == 0);
    CHECK_FALSE(genericity(z).all_nonzero);

    auto missing = sample_json();
    missing.erase("d3");
    try {
        parse_input_json(missing);
        FAIL("missing field accepted");
    } catch (const InputParseError& e) {
        CHECK(e.field == "d3");
        CHECK(std::string(e.what()).find("d3") != std::string::npos);
    }

    for (const char* bad : {"1.5", "x", "1/0", ""}) {
        auto b = sample_json();
        b["b1"] = bad;
        CHECK_THROWS_AS(parse_input_json(b), NonRational);
    }
    auto flt = sample_json();
    flt["c2"] = 0.25;
    CHECK_THROWS_AS(parse_input_json(flt), NonRational);
    CHECK_THROWS_AS(parse_input_json(nlohmann::json::array()), InputParseError);
    CHECK_THROWS_AS(parse_input("/nonexistent/input.json"), InputParseError);
}

TEST_CASE("worker count resolution") {
    ::unsetenv("TETRAQUARTIC_JOBS");
    CHECK(resolve_jobs(std::nullopt) == 0);
    CHECK(resolve_jobs(3) == 3);
    ::setenv("TETRAQUARTIC_JOBS", "2", 1);
    CHECK(resolve_jobs(std::nullopt) == 2);
    CHECK(resolve_jobs(5) == 5);
    ::setenv("TETRAQUARTIC_JOBS", "many", 1);
    CHECK_THROWS_AS(resolve_jobs(std::nullopt), InputParseError);
    ::unsetenv("TETRAQUARTIC_JOBS");
}

TEST_CASE("module claims on the reference sample") {
    RunConfig cfg;
    cfg.parallelism = 1;
    for (Subcommand s : {Subcommand::Lattice, Subcommand::Discform, Subcommand::Isometry}) {
        cfg.subcommand = s;
        auto claims = run_report(cfg);
        for (const auto& c : claims)
            if (c.claim_id != "isometry.alpha-beta-noncyclotomic-factor")
                CHECK_MESSAGE(c.status == ClaimStatus::Pass, c.claim_id);
    }

    cfg.subcommand = Subcommand::Report;
    auto claims = run_report(cfg);
    auto m = by_id(claims);
    // sorted by id, ids unique
    CHECK(std::is_sorted(claims.begin(), claims.end(),
                         [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; }));
    CHECK(m.size() == claims.size());
    for (const auto& c : claims) {
        CHECK(c.criterion >= 1);
        CHECK(c.criterion <= 12);
        if (c.status == ClaimStatus::Pass)
            CHECK(c.expected == c.computed);
        else
            CHECK(c.expected != c.computed);
    }
    CHECK(m.at("quartic.line-count").computed == "10");
    CHECK(m.at("fibration.L12").computed == "2xI4 + 16 nodal, euler 24");
    CHECK(m.at("fibration.R3").computed == "I2 + I6 + 16 nodal, euler 24");
    CHECK(m.at("fibration.six-nodal-model").status == ClaimStatus::Unverified);
    CHECK(m.at("isometry.alpha-beta-order").computed == "infinite");

    std::ifstream mf(std::string(TQ_DATA_DIR) + "/claims_manifest.json");
    auto manifest = nlohmann::json::parse(mf);
    CHECK(manifest_mismatch(claims, manifest, true).empty());
    for (const auto& entry : manifest.at("claims"))
        CHECK(entry.at("topic") == m.at(entry.at("id").get<std::string>()).topic);
    std::vector<ClaimRecord> extra = claims;
    extra.push_back({"zz.unlisted", "x", 1, "1", "1", ClaimStatus::Pass});
    CHECK(manifest_mismatch(extra, manifest, false) == std::vector<std::string>{"zz.unlisted"});
    claims.pop_back();
    CHECK(manifest_mismatch(claims, manifest, true).size() == 1);
    CHECK(manifest_mismatch(claims, manifest, false).empty());
}

TEST_CASE("degenerate input fails the geometry claims") {
    QuarticCoefficients c = reference_sample();
    c.a0 = 0;
    auto claims = quartic_claims(c, 1);
    CHECK_FALSE(all_pass(claims));
    auto m = by_id(claims);
    CHECK(m.at("crossratio.oracle-input").computed.rfind("error: DegenerateCoefficient", 0) == 0);
    CHECK(m.at("quartic.genericity").status == ClaimStatus::Fail);
    CHECK(m.at("quartic.vertex-nodes").computed == "3/4");
}

TEST_CASE("output is deterministic and exact") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::Quartic;
    cfg.parallelism = 1;
    auto one = run_report(cfg);
    cfg.parallelism = 3;
    auto three = run_report(cfg);
    std::string a = to_json(one, reference_sample()).dump(2), b = to_json(three, reference_sample()).dump(2);
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["input"]["a1"] == "-3");
    CHECK(j["genericity"]["all_nonzero"] == true);
    for (const auto& c : j["claims"])
        for (const auto& [k, v] : c.items())
            CHECK(v.is_string());
    for (const auto& [k, v] : j["summary"].items())
        CHECK(v.is_string());
    std::string text = render_text(one, reference_sample());
    CHECK(text.find("a0=2 a1=-3") != std::string::npos);
    CHECK_FALSE(std::regex_search(text, std::regex("[0-9]\\.[0-9]")));  // never decimals

    CHECK(all_pass({{"x", "t", 1, "1", "1", ClaimStatus::Pass}, {"y", "t", 1, "a", "b", ClaimStatus::Unverified}}));
    CHECK_FALSE(all_pass({{"x", "t", 1, "1", "2", ClaimStatus::Fail}}));
}
