#pragma once

// CCR (constant returns to scale) efficiency models: envelopment scores in
// both orientations, the multiplier form, the max-slack second stage, cost
// efficiency and the technical/allocative/cost decomposition.
//
// Every LP is built on data whose metric rows are divided by their largest
// entry across DMUs. CCR scores are invariant to that rescaling; slacks and
// weights are converted back to the caller's units before they are returned.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/lp.hpp"

namespace dea {

enum class Orientation { input, output };
enum class Classification { strongly_efficient, weakly_efficient, inefficient };

const char* to_string(Orientation orientation);
const char* to_string(Classification classification);

struct EngineOptions {
    lp::SolverOptions solver{};
    double efficiency_eps = 1e-6;  // |score - 1| and relative slack threshold
    double peer_threshold = 1e-7;  // lambda above which a DMU counts as a peer
    unsigned threads = 1;          // evaluate_all worker count
};

struct RadialResult {
    std::string dmu_id;
    Orientation orientation = Orientation::input;
    // theta <= 1 for input orientation, sigma >= 1 for output orientation.
    double score = 0.0;
    std::vector<double> lambdas;  // one per DMU, from the max-slack stage
    std::vector<std::string> peers;
    std::vector<double> input_slacks;   // input units
    std::vector<double> output_slacks;  // output units
    // Slack divided by the metric's largest value across DMUs; unit free.
    std::vector<double> relative_input_slacks;
    std::vector<double> relative_output_slacks;
    // Multiplier-form weights read off the radial stage's shadow prices.
    std::vector<double> input_weights;
    std::vector<double> output_weights;
    Classification classification = Classification::inefficient;
};

struct MultiplierResult {
    std::string dmu_id;
    double score = 0.0;
    std::vector<double> output_weights;  // u
    std::vector<double> input_weights;   // v, normalized so v . X_o = 1
};

struct SlackSolution {
    std::vector<double> input_slacks;
    std::vector<double> output_slacks;
    std::vector<double> relative_input_slacks;
    std::vector<double> relative_output_slacks;
    std::vector<double> lambdas;
};

struct EfficiencyBreakdown {
    std::string dmu_id;
    double te = 1.0;
    double ae = 1.0;
    double ce = 1.0;
};

// ---- scenario-matrix entry points (dmu is a column index) -------------------

RadialResult radial_score(const ScenarioData& data, std::size_t dmu, Orientation orientation,
                          const EngineOptions& options = {});
MultiplierResult multiplier_score(const ScenarioData& data, std::size_t dmu, const EngineOptions& options = {});
SlackSolution max_slack_phase(const ScenarioData& data, std::size_t dmu, double radial_score, Orientation orientation,
                              const EngineOptions& options = {});
double cost_efficiency(const ScenarioData& data, std::span<const double> prices, std::size_t dmu,
                       const EngineOptions& options = {});

// ---- dataset entry points ---------------------------------------------------

RadialResult input_oriented_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                  const EngineOptions& options = {});
RadialResult output_oriented_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                   const EngineOptions& options = {});
MultiplierResult multiplier_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                  const EngineOptions& options = {});
SlackSolution max_slack_phase(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                              double radial_score, Orientation orientation, const EngineOptions& options = {});
/// Minimum attainable cost over the CRS technology divided by the DMU's actual cost.
double cost_efficiency(const Dataset& dataset, const Scenario& scenario, std::span<const double> prices,
                       std::string_view dmu_id, const EngineOptions& options = {});

Classification classify_efficiency(const RadialResult& radial, double eps = 1e-6);

/// ae = ce / te. Throws Error(domain_error) when ce exceeds te beyond the gap tolerance.
EfficiencyBreakdown decompose_efficiency(double te, double ce, std::string dmu_id = {}, double gap_tolerance = 1e-6);

struct ScoreEntry {
    RadialResult radial;
    std::optional<EfficiencyBreakdown> breakdown;
};

struct SolverMetadata {
    lp::Tolerances tolerances{};
    double efficiency_eps = 1e-6;
    double peer_threshold = 1e-7;
    double elapsed_ms = 0.0;
};

/// One entry per DMU, in dataset order.
struct ScoreTable {
    std::string scenario_id;
    Orientation orientation = Orientation::input;
    std::vector<ScoreEntry> entries;
    SolverMetadata metadata;

    const ScoreEntry& entry(std::string_view dmu_id) const;
};

/// Scores every DMU. With prices (argument, else the scenario's own), each entry
/// also carries its TE/AE/CE breakdown.
ScoreTable evaluate_all(const Dataset& dataset, const Scenario& scenario, Orientation orientation,
                        const std::optional<std::vector<double>>& prices = std::nullopt,
                        const EngineOptions& options = {});

}  // namespace dea
