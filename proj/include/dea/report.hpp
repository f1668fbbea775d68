#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dea/case_study.hpp"
#include "dea/dataset.hpp"
#include "dea/engine.hpp"

namespace dea::report {

// ---- ranking ------------------------------------------------------------

struct RankedDmu {
    std::string dmu_id;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based; tied DMUs share a rank
};

/// Best first: descending theta for input orientation, ascending sigma for
/// output orientation. Scores within `tie_eps` of each other tie and are
/// listed by DMU id.
std::vector<RankedDmu> rank_dmus(const ScoreTable& table, double tie_eps = 1e-6);

enum class Direction { smaller_better, larger_better };

/// rank_dmus, then DMUs tied at score 1 are ordered by one metric.
std::vector<RankedDmu> tiebreak_rank(const ScoreTable& table, const Dataset& dataset, std::string_view metric_id,
                                     Direction direction, double tie_eps = 1e-6);

// ---- comparison against the published table --------------------------------

enum class Measure { output_score, te, ae, ce };
enum class Verdict { match, mismatch, paper_inconsistent };

const char* to_string(Measure measure);
const char* to_string(Verdict verdict);

struct ComparisonCell {
    std::string dmu_id;
    std::string scenario_id;
    Measure measure = Measure::output_score;
    double computed = 0.0;
    double published = 0.0;
    double relative_deviation = 0.0;
    Verdict verdict = Verdict::match;
    // AE/CE depend on input prices that were never published; never fails a run.
    bool informational = false;
};

struct ComparisonReport {
    double tolerance = 0.05;
    std::vector<ComparisonCell> cells;
    double elapsed_ms = 0.0;

    bool has_mismatch() const;
    const ComparisonCell& cell(std::string_view dmu_id, std::string_view scenario_id, Measure measure) const;
};

/// Runs all case-study scenarios in both orientations plus cost efficiency
/// at unit prices and compares each cell with the published value. Where the
/// published (sigma, TE) pair itself breaks sigma * TE = 1 by more than the
/// tolerance, both cells are marked paper_inconsistent.
ComparisonReport reproduce_table3(double tolerance = 0.05, const EngineOptions& options = {});

struct CostAuditRow {
    std::string dmu_id;
    double total_cost = 0.0;
    double coverage_km = 0.0;
    double printed = 0.0;
    double computed = 0.0;
    double relative_deviation = 0.0;
    bool agrees = true;
};

/// Printed cost/km against total cost / coverage.
std::vector<CostAuditRow> reproduce_table2(double tolerance = 0.05);

// ---- emission -----------------------------------------------------------

enum class Format { text, csv, json, svg };

/// Throws Error(unsupported_format).
Format parse_format(std::string_view name);

struct EmitOptions {
    // Row order for text output; dataset order when empty.
    std::vector<RankedDmu> ranking;
};

std::string emit_report(const ScoreTable& table, Format format, const EmitOptions& options = {});
std::string emit_report(const ComparisonReport& report, Format format);
std::string emit_report(const std::vector<CostAuditRow>& audit, Format format);

/// Reads back the csv or json emitted for a ScoreTable. Timing metadata is not carried by csv.
ScoreTable parse_score_table(std::string_view text, Format format);

/// Equality of everything but timing metadata.
bool same_results(const ScoreTable& a, const ScoreTable& b);

}  // namespace dea::report
