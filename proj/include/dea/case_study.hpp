#pragma once

// Six high-speed-train handover models with their published performance and
// cost figures, the three evaluation scenarios, and the published score table
// kept verbatim for comparison.

#include <string>
#include <vector>

#include "dea/dataset.hpp"

namespace dea::case_study {

inline constexpr const char* kTechnicalOnly = "technical_only";
inline constexpr const char* kCost = "cost";
inline constexpr const char* kAverageCost = "average_cost";

/// Coverage-normalized cost as printed, with the inputs used to derive it.
struct CostRow {
    std::string dmu;
    double total_cost = 0.0;   // 10000 RMB
    double coverage_km = 0.0;  // coverage per cell
    double printed_cost_per_km = 0.0;
};

struct PrintedTriple {
    double te = 0.0;
    double ae = 0.0;
    double ce = 0.0;
};

/// One published result row: output-oriented scores and input-oriented
/// TE/AE/CE for each scenario, in scenario order technical_only, cost, average_cost.
struct ResultRow {
    std::string dmu;
    double output_score[3] = {};
    PrintedTriple input[3] = {};
};

enum class CostPerKm { printed, recomputed };

struct CaseStudy {
    Dataset dataset;
    std::vector<Scenario> scenarios;  // technical_only, cost, average_cost
    std::vector<CostRow> cost_rows;
    std::vector<ResultRow> published_results;

    const Scenario& scenario(std::string_view id) const;
};

/// `recomputed` replaces the printed cost/km column with total_cost / coverage.
CaseStudy builtin_case_study(CostPerKm cost_per_km = CostPerKm::printed);

const std::vector<std::string>& scenario_order();

}  // namespace dea::case_study
