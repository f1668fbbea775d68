#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dea/case_study.hpp"
#include "dea/dataset.hpp"
#include "dea/error.hpp"

using namespace dea;

namespace {

const std::string kDataDir = DEA_DATA_DIR;

template <class F>
Error catch_error(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "expected dea::Error";
    return Error(ErrorCode::domain_error, "none");
}

template <class F>
ParseError catch_parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected dea::ParseError";
    return ParseError("none", 0, 0);
}

}  // namespace

TEST(Decimal, AcceptsPlainAndExponentForms) {
    EXPECT_EQ(parse_decimal("42"), 42.0);
    EXPECT_EQ(parse_decimal("-0.5"), -0.5);
    EXPECT_EQ(parse_decimal("+3.25"), 3.25);
    EXPECT_EQ(parse_decimal(".5"), 0.5);
    EXPECT_EQ(parse_decimal("5."), 5.0);
    EXPECT_EQ(parse_decimal("1e3"), 1000.0);
    EXPECT_EQ(parse_decimal("2.5E-2"), 0.025);
}

TEST(Decimal, RejectsLocaleAndJunk) {
    for (const char* bad : {"", "1,5", "1 000", "0x10", "nan", "inf", "1e", "--1", "1.2.3", "."}) {
        EXPECT_EQ(catch_error([&] { parse_decimal(bad); }).code(), ErrorCode::parse_error) << bad;
    }
}

TEST(Decimal, FormatRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678, 0.005, 3000.0}) EXPECT_EQ(parse_decimal(format_decimal(v)), v);
}

TEST(Csv, ShippedTable1) {
    const auto d = parse_dataset(read_text_file(kDataDir + "/table1.csv"), DataFormat::csv);
    ASSERT_EQ(d.dmus.size(), 6u);
    ASSERT_EQ(d.metrics.size(), 6u);
    EXPECT_EQ(d.dmus[2].id, "RoF");
    EXPECT_EQ(d.value(2, "bandwidth"), 1000.0);
    EXPECT_EQ(d.value(0, "cost"), 1000.0);
    EXPECT_EQ(d.value(2, "handover_delay"), 0.005);
}

TEST(Csv, CrlfBomQuotesAndBlanks) {
    const std::string text = "\xEF\xBB\xBF" "dmu, a ,\"b,c\"\r\n\"x, y\", 1 ,2.5\r\nz,3,4\r\n\r\n";
    const auto d = parse_dataset(text, DataFormat::csv);
    ASSERT_EQ(d.metrics.size(), 2u);
    EXPECT_EQ(d.metrics[0].id, "a");
    EXPECT_EQ(d.metrics[1].id, "b,c");
    EXPECT_EQ(d.dmus[0].id, "x, y");
    EXPECT_EQ(d.dmus[0].values, (std::vector<double>{1, 2.5}));
    EXPECT_EQ(d.dmus[1].values, (std::vector<double>{3, 4}));
}

TEST(Csv, NegativeValue) {
    const auto e = catch_error([] { parse_dataset("dmu,power\nA,1\nB,-2\n", DataFormat::csv); });
    EXPECT_EQ(e.code(), ErrorCode::negative_value);
    EXPECT_NE(std::string(e.what()).find("'B'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("power"), std::string::npos);
}

TEST(Csv, MissingCellNamesDmuAndMetric) {
    auto e = catch_error([] { parse_dataset("dmu,power,delay\nA,1,2\nB,,3\n", DataFormat::csv); });
    EXPECT_EQ(e.code(), ErrorCode::missing_value);
    EXPECT_NE(std::string(e.what()).find("'B'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'power'"), std::string::npos);

    e = catch_error([] { parse_dataset("dmu,power,delay\nA,1\n", DataFormat::csv); });
    EXPECT_EQ(e.code(), ErrorCode::missing_value);
    EXPECT_NE(std::string(e.what()).find("'delay'"), std::string::npos);
}

TEST(Csv, ParseErrorsCarryPosition) {
    auto e = catch_parse_error([] { parse_dataset("dmu,a\nA,1\nB,1x\n", DataFormat::csv); });
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);

    e = catch_parse_error([] { parse_dataset("dmu,a\nA,1,2\n", DataFormat::csv); });
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);

    e = catch_parse_error([] { parse_dataset("name,a\nA,1\n", DataFormat::csv); });
    EXPECT_EQ(e.line(), 1u);

    e = catch_parse_error([] { parse_dataset("dmu,a\n\"A,1\n", DataFormat::csv); });
    EXPECT_EQ(e.line(), 2u);

    EXPECT_EQ(catch_error([] { parse_dataset("dmu,a\nA,1\nA,2\n", DataFormat::csv); }).code(), ErrorCode::parse_error);
    EXPECT_EQ(catch_error([] { parse_dataset("", DataFormat::csv); }).code(), ErrorCode::parse_error);
}

TEST(Json, ArrayAndObjectValues) {
    const std::string text = R"({
      "provenance": "unit test",
      "metrics": [{"id": "x", "unit": "W", "hint": "input"}, {"id": "y", "hint": "output-like"}],
      "dmus": [{"id": "A", "values": [1, 2]}, {"id": "B", "values": {"y": 4, "x": 3}}]
    })";
    const auto d = parse_dataset(text, DataFormat::json);
    EXPECT_EQ(d.provenance, "unit test");
    EXPECT_EQ(d.metrics[0].hint, MetricHint::input_like);
    EXPECT_EQ(d.metrics[1].hint, MetricHint::output_like);
    EXPECT_EQ(d.metrics[0].unit, "W");
    EXPECT_EQ(d.dmus[1].values, (std::vector<double>{3, 4}));
}

TEST(Json, Errors) {
    auto e = catch_parse_error([] { parse_dataset("{\n  \"metrics\": [,]\n}", DataFormat::json); });
    EXPECT_EQ(e.line(), 2u);

    EXPECT_EQ(catch_error([] { parse_dataset(R"({"metrics": [{"id": "x"}], "dmus": [{"id": "A", "values": []}]})",
                                             DataFormat::json); })
                  .code(),
              ErrorCode::missing_value);
    EXPECT_EQ(catch_error([] { parse_dataset(R"({"metrics": [{"id": "x"}], "dmus": [{"id": "A", "values": [-1]}]})",
                                             DataFormat::json); })
                  .code(),
              ErrorCode::negative_value);
    EXPECT_EQ(catch_error([] { parse_dataset(R"({"metrics": [{"id": "x"}], "dmus": [{"id": "A", "values": {"z": 1, "x": 1}}]})",
                                             DataFormat::json); })
                  .code(),
              ErrorCode::unknown_metric);
    EXPECT_EQ(catch_error([] { parse_dataset(R"({"metrics": {}, "dmus": []})", DataFormat::json); }).code(),
              ErrorCode::parse_error);
}

TEST(Json, ShippedBundleMatchesBuiltin) {
    const auto bundle = load_data_file(kDataDir + "/case_study.json");
    const auto cs = case_study::builtin_case_study();
    ASSERT_EQ(bundle.dataset.dmus.size(), cs.dataset.dmus.size());
    for (std::size_t j = 0; j < cs.dataset.dmus.size(); ++j) {
        EXPECT_EQ(bundle.dataset.dmus[j].id, cs.dataset.dmus[j].id);
        EXPECT_EQ(bundle.dataset.dmus[j].values, cs.dataset.dmus[j].values);
    }
    ASSERT_EQ(bundle.scenarios.size(), 3u);
    EXPECT_EQ(bundle.scenarios[2].inputs, cs.scenarios[2].inputs);
}

TEST(Scenarios, ParseAndValidate) {
    const auto list = parse_scenarios(read_text_file(kDataDir + "/scenarios.json"));
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[0].id, case_study::kTechnicalOnly);
    EXPECT_EQ(list[1].inputs, (std::vector<std::string>{"cost", "power", "handover_delay"}));

    const auto bare = parse_scenarios(R"([{"id": "s", "inputs": ["a"], "outputs": ["b"], "prices": [2]}])");
    ASSERT_TRUE(bare[0].prices);
    EXPECT_EQ(*bare[0].prices, std::vector<double>{2});
    EXPECT_EQ(parse_scenarios(serialize_scenarios(bare))[0].prices, bare[0].prices);

    EXPECT_EQ(catch_error([] { parse_scenarios(R"([{"id": "s", "inputs": [], "outputs": ["b"]}])"); }).code(),
              ErrorCode::empty_scenario);
    EXPECT_EQ(catch_error([] { parse_scenarios(R"([{"id": "s", "inputs": ["a"], "outputs": ["a"]}])"); }).code(),
              ErrorCode::invalid_scenario);
    EXPECT_EQ(catch_error([] { parse_scenarios(R"([{"id": "s", "inputs": ["a"], "outputs": ["b"], "prices": [0]}])"); })
                  .code(),
              ErrorCode::non_positive_price);
    EXPECT_EQ(catch_error([] { parse_scenarios(R"([{"id": "s", "inputs": ["a"], "outputs": ["b"], "prices": [1, 2]}])"); })
                  .code(),
              ErrorCode::invalid_scenario);
}

TEST(ApplyScenario, CaseStudyShapes) {
    const auto cs = case_study::builtin_case_study();
    const auto tech = apply_scenario(cs.dataset, cs.scenario(case_study::kTechnicalOnly));
    EXPECT_EQ(tech.inputs.rows(), 2);
    EXPECT_EQ(tech.inputs.cols(), 6);
    EXPECT_EQ(tech.outputs.rows(), 3);
    EXPECT_EQ(tech.inputs(0, 0), 30.0);     // Satellite power
    EXPECT_EQ(tech.outputs(0, 2), 1000.0);  // RoF bandwidth
    const auto cost = apply_scenario(cs.dataset, cs.scenario(case_study::kCost));
    EXPECT_EQ(cost.inputs.rows(), 3);
    EXPECT_EQ(cost.inputs(0, 0), 1000.0);
    EXPECT_EQ(tech.dmu_ids, (std::vector<std::string>{"Satellite", "LCX", "RoF", "RS-assisted", "SFN", "Dual-soft"}));
}

TEST(ApplyScenario, PureFunction) {
    const auto cs = case_study::builtin_case_study();
    const auto a = apply_scenario(cs.dataset, cs.scenarios[1]);
    const auto b = apply_scenario(cs.dataset, cs.scenarios[1]);
    EXPECT_EQ(a.inputs, b.inputs);
    EXPECT_EQ(a.outputs, b.outputs);
}

TEST(ApplyScenario, Errors) {
    const auto cs = case_study::builtin_case_study();
    Scenario s{"latency", {"latency"}, {"bandwidth"}, std::nullopt, ""};
    EXPECT_EQ(catch_error([&] { apply_scenario(cs.dataset, s); }).code(), ErrorCode::unknown_metric);

    const auto d = parse_dataset("dmu,x,y\nA,1,1\nB,0,2\n", DataFormat::csv);
    EXPECT_EQ(catch_error([&] { apply_scenario(d, Scenario{"s", {"x"}, {"y"}, std::nullopt, ""}); }).code(),
              ErrorCode::all_zero_profile);
    const auto e = parse_dataset("dmu,x,y\nA,1,1\nB,2,0\n", DataFormat::csv);
    EXPECT_EQ(catch_error([&] { apply_scenario(e, Scenario{"s", {"x"}, {"y"}, std::nullopt, ""}); }).code(),
              ErrorCode::all_zero_profile);
}

TEST(AverageCost, Division) {
    EXPECT_EQ(average_cost(1000, 250), 4.0);
    EXPECT_NEAR(average_cost(30, 0.3), 100.0, 1e-12);
    EXPECT_NEAR(average_cost(6, 0.1), 60.0, 1e-12);
    EXPECT_EQ(catch_error([] { average_cost(1, 0); }).code(), ErrorCode::zero_coverage);
    EXPECT_EQ(catch_error([] { average_cost(1, -2); }).code(), ErrorCode::zero_coverage);
}

TEST(JoinColumns, Table1PlusTable2) {
    const auto t1 = parse_dataset(read_text_file(kDataDir + "/table1.csv"), DataFormat::csv);
    const auto t2 = parse_dataset(read_text_file(kDataDir + "/table2.csv"), DataFormat::csv);
    const auto joined = join_columns(t1, t2);
    EXPECT_EQ(joined.metrics.size(), 8u);
    EXPECT_EQ(joined.value(5, "cost_per_km"), 0.1);
    EXPECT_EQ(catch_error([&] { join_columns(t1, t1); }).code(), ErrorCode::dimension_mismatch);
}

TEST(CaseStudy, GoldenValues) {
    const auto cs = case_study::builtin_case_study();
    const auto& d = cs.dataset;
    ASSERT_EQ(d.dmus.size(), 6u);
    const std::vector<std::string> ids{"Satellite", "LCX", "RoF", "RS-assisted", "SFN", "Dual-soft"};
    const std::vector<std::vector<double>> table1{
        {1000, 4, 30, 3000, 4, 0.95}, {30, 2, 0.5, 2.5, 0.1, 0.95}, {6, 1000, 1, 300, 0.005, 1},
        {10, 1, 42, 30, 0.1, 0.95},   {1, 10, 40, 40, 0.5, 0.97},   {1, 4, 80, 15, 0.4, 1},
    };
    const std::vector<std::string> columns{"cost", "bandwidth", "power", "handover_rate", "handover_delay",
                                           "success_probability"};
    const std::vector<double> cost_per_km{4, 100, 50, 2, 0.2, 0.1};
    const std::vector<double> coverage{250, 0.3, 0.1, 4.8, 4.8, 1.4};
    for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_EQ(d.dmus[j].id, ids[j]);
        for (std::size_t k = 0; k < columns.size(); ++k) EXPECT_EQ(d.value(j, columns[k]), table1[j][k]) << ids[j];
        EXPECT_EQ(d.value(j, "cost_per_km"), cost_per_km[j]);
        EXPECT_EQ(cs.cost_rows[j].coverage_km, coverage[j]);
        EXPECT_EQ(cs.cost_rows[j].printed_cost_per_km, cost_per_km[j]);
    }
    EXPECT_EQ(cs.scenarios[0].inputs, (std::vector<std::string>{"power", "handover_delay"}));
    EXPECT_EQ(cs.scenarios[0].outputs, (std::vector<std::string>{"bandwidth", "handover_rate", "success_probability"}));
    EXPECT_EQ(cs.scenarios[2].inputs[0], "cost_per_km");
}

TEST(CaseStudy, RecomputedCostPerKm) {
    const auto cs = case_study::builtin_case_study(case_study::CostPerKm::recomputed);
    EXPECT_NEAR(cs.dataset.value(2, "cost_per_km"), 60.0, 1e-12);
    EXPECT_NEAR(cs.dataset.value(5, "cost_per_km"), 1.0 / 1.4, 1e-12);
}

TEST(CaseStudy, ReferenceFileMatchesPublishedTable) {
    std::istringstream in(read_text_file(kDataDir + "/table3_reference.csv"));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "dmu,scenario,output_score,te,ae,ce");
    const auto cs = case_study::builtin_case_study();
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
        ASSERT_EQ(f.size(), 6u) << line;
        const auto& order = case_study::scenario_order();
        const auto k = static_cast<std::size_t>(std::find(order.begin(), order.end(), f[1]) - order.begin());
        ASSERT_LT(k, 3u) << line;
        const auto row = std::find_if(cs.published_results.begin(), cs.published_results.end(),
                                      [&](const auto& r) { return r.dmu == f[0]; });
        ASSERT_NE(row, cs.published_results.end()) << line;
        EXPECT_EQ(parse_decimal(f[2]), row->output_score[k]);
        EXPECT_EQ(parse_decimal(f[3]), row->input[k].te);
        EXPECT_EQ(parse_decimal(f[4]), row->input[k].ae);
        EXPECT_EQ(parse_decimal(f[5]), row->input[k].ce);
        ++rows;
    }
    EXPECT_EQ(rows, 18u);
}

TEST(DatasetProperty, SerializeRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mantissa(0, 999999);
    std::uniform_int_distribution<int> exponent(-6, 6);
    std::uniform_int_distribution<int> count(1, 8);
    for (int k = 0; k < 200; ++k) {
        Dataset d;
        const int metrics = count(rng);
        const int dmus = count(rng);
        for (int i = 0; i < metrics; ++i) d.metrics.push_back({"m" + std::to_string(i), "", "", MetricHint::neutral});
        for (int j = 0; j < dmus; ++j) {
            DmuRecord r{"dmu " + std::to_string(j) + (j % 3 == 0 ? ",x" : ""), "", {}};
            for (int i = 0; i < metrics; ++i) {
                // Up to six significant digits written as decimal text.
                const std::string text = std::to_string(mantissa(rng)) + "e" + std::to_string(exponent(rng));
                r.values.push_back(parse_decimal(text));
            }
            d.dmus.push_back(std::move(r));
        }
        for (auto format : {DataFormat::csv, DataFormat::json}) {
            const auto back = parse_dataset(serialize_dataset(d, format), format);
            ASSERT_EQ(back.dmus.size(), d.dmus.size());
            ASSERT_EQ(back.metrics.size(), d.metrics.size());
            for (std::size_t j = 0; j < d.dmus.size(); ++j) {
                EXPECT_EQ(back.dmus[j].id, d.dmus[j].id);
                EXPECT_EQ(back.dmus[j].values, d.dmus[j].values);  // bit-for-bit
            }
        }
    }
}
