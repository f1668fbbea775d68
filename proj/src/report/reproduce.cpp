#include <algorithm>
#include <chrono>
#include <cmath>

#include "dea/error.hpp"
#include "dea/report.hpp"

namespace dea::report {

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::output_score: return "output_score";
        case Measure::te: return "te";
        case Measure::ae: return "ae";
        case Measure::ce: return "ce";
    }
    return "?";
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::paper_inconsistent: return "paper-inconsistent";
    }
    return "?";
}

bool ComparisonReport::has_mismatch() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const ComparisonCell& c) { return !c.informational && c.verdict == Verdict::mismatch; });
}

const ComparisonCell& ComparisonReport::cell(std::string_view dmu_id, std::string_view scenario_id,
                                             Measure measure) const {
    for (const auto& c : cells) {
        if (c.dmu_id == dmu_id && c.scenario_id == scenario_id && c.measure == measure) return c;
    }
    throw Error(ErrorCode::unknown_dmu, "no comparison cell for '" + std::string(dmu_id) + "' in '" +
                                            std::string(scenario_id) + "' (" + to_string(measure) + ")");
}

namespace {

double relative_deviation(double computed, double published) {
    return std::abs(computed - published) / std::max(std::abs(published), 1e-300);
}

ComparisonCell make_cell(const std::string& dmu, const std::string& scenario, Measure measure, double computed,
                         double published, double tolerance, bool informational) {
    ComparisonCell c{dmu, scenario, measure, computed, published, relative_deviation(computed, published),
                     Verdict::match, informational};
    c.verdict = c.relative_deviation <= tolerance ? Verdict::match : Verdict::mismatch;
    return c;
}

}  // namespace

ComparisonReport reproduce_table3(double tolerance, const EngineOptions& options) {
    if (!(tolerance >= 0.0)) throw Error(ErrorCode::domain_error, "tolerance must be nonnegative");
    const auto start = std::chrono::steady_clock::now();
    const auto cs = case_study::builtin_case_study();
    const auto& order = case_study::scenario_order();

    ComparisonReport report;
    report.tolerance = tolerance;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& scenario = cs.scenario(order[k]);
        const std::vector<double> unit_prices(scenario.inputs.size(), 1.0);
        const auto outputs = evaluate_all(cs.dataset, scenario, Orientation::output, std::nullopt, options);
        const auto inputs = evaluate_all(cs.dataset, scenario, Orientation::input, unit_prices, options);

        for (const auto& row : cs.published_results) {
            const auto& pub = row.input[k];
            const double sigma = outputs.entry(row.dmu).radial.score;
            const auto& breakdown = *inputs.entry(row.dmu).breakdown;

            auto sigma_cell = make_cell(row.dmu, scenario.id, Measure::output_score, sigma, row.output_score[k], tolerance, false);
            auto te_cell = make_cell(row.dmu, scenario.id, Measure::te, breakdown.te, pub.te, tolerance, false);
            // The published pair must itself satisfy sigma * TE = 1 under constant returns to scale.
            if (std::abs(row.output_score[k] * pub.te - 1.0) > tolerance) {
                sigma_cell.verdict = Verdict::paper_inconsistent;
                te_cell.verdict = Verdict::paper_inconsistent;
            }
            report.cells.push_back(std::move(sigma_cell));
            report.cells.push_back(std::move(te_cell));
            report.cells.push_back(make_cell(row.dmu, scenario.id, Measure::ae, breakdown.ae, pub.ae, tolerance, true));
            report.cells.push_back(make_cell(row.dmu, scenario.id, Measure::ce, breakdown.ce, pub.ce, tolerance, true));
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CostAuditRow> reproduce_table2(double tolerance) {
    std::vector<CostAuditRow> rows;
    for (const auto& r : case_study::builtin_case_study().cost_rows) {
        CostAuditRow a;
        a.dmu_id = r.dmu;
        a.total_cost = r.total_cost;
        a.coverage_km = r.coverage_km;
        a.printed = r.printed_cost_per_km;
        a.computed = average_cost(r.total_cost, r.coverage_km);
        a.relative_deviation = relative_deviation(a.computed, a.printed);
        a.agrees = a.relative_deviation <= tolerance;
        rows.push_back(a);
    }
    return rows;
}

}  // namespace dea::report
