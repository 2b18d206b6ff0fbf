#include <doctest.h>

#include "lcdbch/report.hpp"

using namespace lcdbch;

TEST_CASE("report JSON carries the full schema") {
    const auto spec = make_spec(Family::LcdAEvenN, CosetParams::make(5, 2), 6);
    ReportOptions opt;
    opt.with_generator = true;
    opt.distance = DistanceMode::Auto;
    const CodeReport r = build_report(spec, opt);
    const auto j = report_to_json(r);
    for (const char* key : {"family", "q", "m", "n", "delta", "b", "k", "lcd",
                            "designed_distance", "bch_lower", "distance", "generator",
                            "field", "witnesses", "prediction"})
        CHECK(j.contains(key));
    CHECK(j["family"] == "lcd-a-even-n");
    CHECK(j["n"] == 24);
    CHECK(j["k"] == 9);
    CHECK(j["lcd"] == true);
    CHECK(j["distance"].contains("exact"));
    CHECK(j["prediction"]["kind"] == "exact");
    CHECK(j["prediction"]["k"] == 9);
    // field definition: exact digits only
    CHECK(j["field"]["p"] == 5);
    CHECK(j["field"]["e"] == 2);
    CHECK(j["field"]["modulus"].size() == 3);
    // generator: label array, lowest degree first, monic
    CHECK(j["generator"].size() == 16);
    CHECK(j["generator"].back() == 1);
}

TEST_CASE("csv row shape matches the header") {
    const auto spec = make_spec(Family::Narrow, CosetParams::make(2, 4), 5);
    const CodeReport r = build_report(spec, {});
    const std::string header = report_csv_header();
    const std::string row = report_csv_row(r);
    const auto commas = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',');
    };
    CHECK(commas(header) == commas(row));
}

TEST_CASE("distance modes in build_report") {
    const auto spec = make_spec(Family::LcdB, CosetParams::make(3, 4), 4);
    ReportOptions opt;
    opt.distance = DistanceMode::Witness;
    const CodeReport r = build_report(spec, opt);
    CHECK(r.distance.exact == 8);
    CHECK(r.distance.witness.has_value());
    opt.distance = DistanceMode::None;
    const CodeReport r2 = build_report(spec, opt);
    CHECK_FALSE(r2.distance.exact.has_value());
    CHECK(r2.distance.lower == 8);
}
