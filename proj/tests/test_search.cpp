#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cycloperm/search.hpp"

using namespace cycloperm;

TEST_CASE("binomial sweep finds nothing over F_7, F_13, F_19") {
    SweepSpec spec;
    spec.fields = {"7", "13", "19"};
    spec.l_values = {3};
    auto records = sweep_binomials(spec);
    CHECK(!records.empty());
    for (const auto& rec : records) {
        CHECK(!rec.is_pp);
        CHECK(rec.verdict.consistent);
    }
}

TEST_CASE("binomial sweep finds permutations over F_31") {
    SweepSpec spec;
    spec.fields = {"31"};
    spec.l_values = {3};
    spec.e_min = 1;
    spec.e_max = 1;
    auto records = sweep_binomials(spec);
    CHECK(records.size() == 29);  // r = 1..29
    u64 hits = 0;
    for (const auto& rec : records) {
        CHECK(rec.verdict.consistent);
        if (rec.is_pp) {
            ++hits;
            // every hit satisfies all three necessary clauses
            for (const char* name : {"bn.gcd", "bn.two_power", "bn.residue"})
                CHECK(rec.verdict.find(name)->holds);
        }
    }
    CHECK(hits > 0);
    // r = 3 passes all clauses
    auto it = std::find_if(records.begin(), records.end(),
                           [](const FindingRecord& rec) { return rec.r == 3; });
    REQUIRE(it != records.end());
    CHECK(it->is_pp);
}

TEST_CASE("empty r range yields an empty stream") {
    SweepSpec spec;
    spec.fields = {"31"};
    spec.l_values = {3};
    spec.r_min = 5;
    spec.r_max = 4;
    CHECK(sweep_binomials(spec).empty());
}

TEST_CASE("e values are deduplicated mod l") {
    SweepSpec spec;
    spec.fields = {"31"};
    spec.l_values = {3};
    spec.e_min = 1;
    spec.e_max = 7;  // 1,2,4,5,7 coprime to 3, but only residues 1 and 2 matter
    spec.r_max = 1;
    auto records = sweep_binomials(spec);
    CHECK(records.size() == 2);
    CHECK(records[0].e == u64{1});
    CHECK(records[1].e == u64{2});
}

TEST_CASE("fields beyond the budget are skipped with a marker") {
    SweepSpec spec;
    spec.fields = {"31"};
    spec.l_values = {3};
    spec.max_q = 16;
    auto records = sweep_binomials(spec);
    REQUIRE(records.size() == 1);
    CHECK(records[0].skipped == std::string("SkippedBudget"));
    auto j = records[0].to_json();
    CHECK(j["skipped"] == "SkippedBudget");
}

TEST_CASE("trinomial sweep reproduces the r = {1,3,7,9} family") {
    auto records = sweep_trinomials_f13();
    CHECK(records.size() == 11);
    std::vector<u64> pp;
    for (const auto& rec : records) {
        CHECK(rec.verdict.consistent);
        if (rec.is_pp) pp.push_back(rec.r);
    }
    CHECK(pp == std::vector<u64>{1, 3, 7, 9});
    CHECK(!records[10].is_pp);  // r = 11: 3 | 15
    CHECK(!records[3].is_pp);   // r = 4: gcd(4,4) = 4
}

TEST_CASE("cross-validation reports zero disagreements") {
    SweepSpec spec;
    spec.mode = SweepSpec::Mode::GeneralCrossval;
    spec.fields = {"13", "31", "3^2", "2^4", "101", "5^2", "127"};
    spec.sample_count = 500;
    spec.seed = 42;
    auto summary = crossval_random(spec);
    CHECK(summary.instances == 500);
    CHECK(summary.disagreements == 0);
    CHECK(summary.bad.empty());

    SweepSpec empty = spec;
    empty.sample_count = 0;
    CHECK(crossval_random(empty).instances == 0);
}

TEST_CASE("sweeps are deterministic and worker-count independent") {
    SweepSpec spec;
    spec.fields = {"31", "13"};
    spec.e_max = 4;
    auto dump = [&](unsigned workers) {
        SweepSpec s = spec;
        s.worker_count = workers;
        std::ostringstream os;
        write_jsonl(os, sweep_binomials(s));
        return os.str();
    };
    std::string once = dump(1);
    CHECK(once == dump(1));
    CHECK(once == dump(4));
    CHECK(!once.empty());

    SweepSpec cv;
    cv.mode = SweepSpec::Mode::GeneralCrossval;
    cv.fields = {"13", "31", "3^2"};
    cv.sample_count = 200;
    cv.seed = 7;
    auto s1 = crossval_random(cv);
    cv.worker_count = 4;
    auto s2 = crossval_random(cv);
    CHECK(s1.instances == s2.instances);
    CHECK(s1.disagreements == s2.disagreements);
}

TEST_CASE("JSON lines output has fixed keys and a trailing summary") {
    SweepSpec spec;
    spec.fields = {"31"};
    spec.l_values = {3};
    spec.r_max = 3;
    std::ostringstream os;
    write_jsonl(os, sweep_binomials(spec));
    std::istringstream is(os.str());
    std::string line;
    std::vector<nlohmann::json> lines;
    while (std::getline(is, line)) lines.push_back(nlohmann::json::parse(line));
    REQUIRE(lines.size() == 7);  // 3 r * 2 e + summary
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        auto keys = {"field", "l", "s", "r", "e", "polynomial", "is_pp", "conditions", "oracle",
                     "consistent"};
        for (const char* k : keys) CHECK(lines[i].contains(k));
    }
    CHECK(lines.back()["summary"] == true);
    CHECK(lines.back()["records"] == 6);
}

TEST_CASE("default cross-validation field list covers prime powers") {
    auto fields = default_crossval_fields(128);
    // q = 3..128: includes primes and proper prime powers
    auto has = [&](const std::string& want) {
        return std::any_of(fields.begin(), fields.end(), [&](const std::string& s) {
            return s == want || s.rfind(want + "/", 0) == 0;
        });
    };
    CHECK(has("3"));
    CHECK(has("127"));
    CHECK(has("2^7"));
    CHECK(has("11^2"));
    CHECK(!has("131"));
}
