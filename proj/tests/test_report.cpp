#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "prodeq/report.hpp"

using namespace prodeq;

TEST_CASE("12-significant-digit float formatting") {
    CHECK(format_g12(1.0) == "1");
    CHECK(format_g12(0.5113174470) == "0.511317447");
    CHECK(format_g12(123456789.123456) == "123456789.123");
    CHECK(format_g12(-2.5e-10) == "-2.5e-10");
}

TEST_CASE("CSV quoting") {
    json rows = json::array();
    json row;
    row["name"] = "plain";
    row["with,comma"] = "a,b";
    row["quoted"] = "say \"hi\"";
    rows.push_back(row);
    std::string csv = to_csv(rows);
    CHECK(csv == "name,\"with,comma\",quoted\nplain,\"a,b\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("CSV columns union missing values") {
    json rows = json::array();
    json a, b;
    a["x"] = 1;
    a["y"] = "only-a";
    b["x"] = 2;
    b["z"] = 3.5;
    rows.push_back(a);
    rows.push_back(b);
    CHECK(to_csv(rows) == "x,y,z\n1,only-a,\n2,,3.5\n");
}

TEST_CASE("count report row carries the decimal string and optional fields") {
    CountReport r;
    r.k = 1;
    r.B = 100000;
    r.value = checked_pow(10, 21);
    r.method = "fast";
    r.gap = 0.25;
    r.wall_time_s = 1.5;
    json row = count_report_row(r, false);
    CHECK(row["value"] == "1000000000000000000000");
    CHECK(row["method"] == "fast");
    CHECK(row["gap"] == 0.25);
    CHECK(!row.contains("wall_time_s"));
    CHECK(!row.contains("main_term"));
    json timed = count_report_row(r, true);
    CHECK(timed["wall_time_s"] == 1.5);
}

TEST_CASE("JSON output round-trips") {
    CountReport r;
    r.k = 2;
    r.B = 64;
    r.value = ExactCount(13064056);
    r.method = "coprime";
    r.ratio_lower = 0.16657;
    json rows = json::array({count_report_row(r, false)});
    std::string text = to_json_text(rows);
    json parsed = json::parse(text);
    CHECK(parsed[0]["value"] == "13064056");
    CHECK(parsed[0]["B"] == 64);
    CHECK(parsed[0]["ratio_lower"].get<double>() == doctest::Approx(0.16657));
}

TEST_CASE("emission is deterministic") {
    auto make_rows = [] {
        json rows = json::array();
        CountReport r;
        r.k = 1;
        r.B = 1000;
        r.value = ExactCount(7899760);
        r.method = "fast";
        r.main_term = 7887515.853;
        r.gap = 12244.147;
        rows.push_back(count_report_row(r, false));
        return rows;
    };
    CHECK(to_csv(make_rows()) == to_csv(make_rows()));
    CHECK(to_json_text(make_rows()) == to_json_text(make_rows()));
}

TEST_CASE("emit_table writes files and rejects bad paths") {
    json rows = json::array();
    json row;
    row["v"] = 1;
    rows.push_back(row);
    std::string path = "emit_test_tmp.csv";
    emit_table(rows, "csv", path);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == "v\n1\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_table(rows, "csv", "/nonexistent-dir/x.csv"), std::runtime_error);
}
