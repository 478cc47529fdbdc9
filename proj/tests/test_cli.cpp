#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "mzv/export.hpp"
#include "mzv/report.hpp"
#include "mzv/suites.hpp"

using namespace mzv;

TEST_CASE("weight-4 relation line is byte-stable") {
    std::vector<std::string> lines = relations_jsonl(4);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] ==
          "{\"a\":[2],\"b\":[2],\"terms\":[{\"index\":[4],\"num\":1,\"den\":1},"
          "{\"index\":[1,3],\"num\":-4,\"den\":1}]}");
    CHECK(relations_jsonl(4) == lines);  // identical bytes across runs
}

TEST_CASE("weight-5 relations follow the canonical pair order") {
    std::vector<std::string> lines = relations_jsonl(5);
    REQUIRE(lines.size() == 4);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{2}, {3}}, {{2}, {1, 2}}, {{3}, {2}}, {{1, 2}, {2}}};
    for (size_t i = 0; i < lines.size(); ++i) {
        auto j = nlohmann::json::parse(lines[i]);
        CHECK(j["a"].get<std::vector<int>>() == expected[i].first);
        CHECK(j["b"].get<std::vector<int>>() == expected[i].second);
    }
}

TEST_CASE("serialized terms reproduce the relation exactly") {
    for (int w : {4, 5, 6}) {
        for (const std::string& line : relations_jsonl(w)) {
            auto j = nlohmann::json::parse(line);
            Index a(j["a"].get<std::vector<int>>());
            Index b(j["b"].get<std::vector<int>>());
            LinComb<Index> rebuilt;
            for (const auto& term : j["terms"])
                rebuilt.add_term(Index(term["index"].get<std::vector<int>>()),
                                 Rational(Integer(term["num"].get<long long>()),
                                          Integer(term["den"].get<long long>())));
            CHECK(rebuilt == double_shuffle_relation(a, b));
        }
    }
}

TEST_CASE("csv export pins the column order") {
    std::vector<std::string> lines = relations_csv(4);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "\"a\",\"b\",\"4\",\"1,3\",\"2,2\",\"1,1,2\"");
    CHECK(lines[1] == "\"2\",\"2\",\"1\",\"-4\",\"0\",\"0\"");
    CHECK(detail::csv_rational(Rational(3, 2)) == "3/2");
    CHECK(detail::csv_rational(Rational(-4)) == "-4");
}

TEST_CASE("exports reject weights without admissible pairs") {
    CHECK_THROWS_AS(relations_jsonl(3), std::invalid_argument);
    CHECK_THROWS_AS(relations_csv(2), std::invalid_argument);
}

TEST_CASE("report renderings agree on status") {
    RunReport pass{"mzv verify --suite charts", {{"charts", 58, 0, 0.4, ""}}};
    CHECK(pass.ok());
    CHECK(pass.text().find("status: PASS") != std::string::npos);
    CHECK(pass.json_text().find("\"status\":\"pass\"") != std::string::npos);

    RunReport fail{"mzv verify --suite ode",
                   {{"ode", 100, 2, 1.0, "first failure: two-var ODE d/dx (1;1)"}}};
    CHECK_FALSE(fail.ok());
    CHECK(fail.text().find("status: FAIL") != std::string::npos);
    CHECK(fail.text().find("first failure: two-var ODE d/dx (1;1)") != std::string::npos);
    CHECK(fail.json_text().find("\"status\":\"fail\"") != std::string::npos);
}

TEST_CASE("check runner keeps item order and captures exceptions") {
    std::vector<CheckItem> items;
    for (int i = 0; i < 40; ++i)
        items.push_back({"item " + std::to_string(i), [i] { return i % 7 != 3; }});
    items.push_back({"thrower", []() -> bool { throw std::runtime_error("boom"); }});
    std::vector<CheckResult> results = run_checks(items);
    REQUIRE(results.size() == 41);
    for (int i = 0; i < 40; ++i) {
        CHECK(results[static_cast<size_t>(i)].label == "item " + std::to_string(i));
        CHECK(results[static_cast<size_t>(i)].ok == (i % 7 != 3));
    }
    CHECK_FALSE(results[40].ok);
    CHECK(results[40].label.find("exception: boom") != std::string::npos);

    ReportEntry entry = run_suite_entry("demo", items);
    CHECK(entry.checked == 41);
    CHECK(entry.failed == 6 + 1);
    CHECK(entry.detail == "first failure: item 3");
}

TEST_CASE("suite builders enumerate the documented sweeps") {
    // 129 ordered index pairs of total weight up to six.
    CHECK(composition_pairs(6).size() == 129);
    CHECK(stuffle_series_suite(6, 25).size() == 129);
    // 17 ordered admissible pairs plus the pinned expansion check.
    CHECK(admissible_pairs(6).size() == 17);
    CHECK(shuffle_series_suite(6, 25).size() == 18);
    // 49 pairs of total weight up to five, 9 point pairs per prime.
    CHECK(composition_pairs(5).size() == 49);
    CHECK(padic_suite({3, 5, 7}, 5, 12).size() == 3 * 49 * 9);
    CHECK(padic_suite({5}, 3, 8).size() == 5 * 9);
    CHECK(truncated_suite(6, 30).size() == 130);
    CHECK(numeric_suite(1000, 1e-3).size() == 3);
}

TEST_CASE("small sweeps pass end to end") {
    for (const CheckResult& r : run_checks(truncated_suite(4, 6))) CHECK(r.ok);
    for (const CheckResult& r : run_checks(stuffle_series_suite(3, 12))) CHECK(r.ok);
    ReportEntry charts = run_suite_entry("charts", charts_suite());
    CHECK(charts.failed == 0);
    CHECK(charts.checked >= 50);
}
