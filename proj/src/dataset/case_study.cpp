#include "dea/case_study.hpp"

#include "dea/error.hpp"

namespace dea::case_study {

namespace {

struct Row {
    const char* id;
    const char* name;
    double cost, bandwidth, power, rate, delay, success;
};

// Performance metrics and costs per handover model.
constexpr Row kModels[] = {
    {"Satellite", "Satellite to train", 1000, 4, 30, 3000, 4, 0.95},
    {"LCX", "Leaky coaxial cable", 30, 2, 0.5, 2.5, 0.1, 0.95},
    {"RoF", "Radio over fiber", 6, 1000, 1, 300, 0.005, 1},
    {"RS-assisted", "Relay-station assisted", 10, 1, 42, 30, 0.1, 0.95},
    {"SFN", "Single frequency network (CoMP)", 1, 10, 40, 40, 0.5, 0.97},
    {"Dual-soft", "Dual-antenna soft handover", 1, 4, 80, 15, 0.4, 1},
};

// Coverage per cell (km) and the printed cost/km.
constexpr double kCoverage[] = {250, 0.3, 0.1, 4.8, 4.8, 1.4};
constexpr double kPrintedCostPerKm[] = {4, 100, 50, 2, 0.2, 0.1};

}  // namespace

const std::vector<std::string>& scenario_order() {
    static const std::vector<std::string> order{kTechnicalOnly, kCost, kAverageCost};
    return order;
}

const Scenario& CaseStudy::scenario(std::string_view id) const {
    for (const auto& s : scenarios) {
        if (s.id == id) return s;
    }
    throw Error(ErrorCode::invalid_scenario, "unknown scenario '" + std::string(id) + "'");
}

CaseStudy builtin_case_study(CostPerKm cost_per_km) {
    CaseStudy cs;
    auto& d = cs.dataset;
    d.provenance = cost_per_km == CostPerKm::printed
                       ? "handover model case study; cost_per_km as printed"
                       : "handover model case study; cost_per_km recomputed as cost / coverage";
    d.metrics = {
        {"cost", "Cost", "10000 RMB", MetricHint::input_like},
        {"bandwidth", "Channel bandwidth", "MB", MetricHint::output_like},
        {"power", "Transmission power", "W", MetricHint::input_like},
        {"handover_rate", "Handover rate (time between triggers)", "s", MetricHint::output_like},
        {"handover_delay", "Handover delay", "s", MetricHint::input_like},
        {"success_probability", "Success probability", "probability", MetricHint::output_like},
        {"cost_per_km", "Average cost", "10000 RMB/km", MetricHint::input_like},
    };
    for (std::size_t j = 0; j < std::size(kModels); ++j) {
        const auto& m = kModels[j];
        const double per_km =
            cost_per_km == CostPerKm::printed ? kPrintedCostPerKm[j] : average_cost(m.cost, kCoverage[j]);
        d.dmus.push_back({m.id, m.name, {m.cost, m.bandwidth, m.power, m.rate, m.delay, m.success, per_km}});
        cs.cost_rows.push_back({m.id, m.cost, kCoverage[j], kPrintedCostPerKm[j]});
    }

    const std::vector<std::string> outputs{"bandwidth", "handover_rate", "success_probability"};
    cs.scenarios = {
        {kTechnicalOnly, {"power", "handover_delay"}, outputs, std::nullopt, "technical metrics only, no cost"},
        {kCost, {"cost", "power", "handover_delay"}, outputs, std::nullopt, "total cost with technical metrics"},
        {kAverageCost, {"cost_per_km", "power", "handover_delay"}, outputs, std::nullopt,
         "coverage-averaged cost with technical metrics"},
    };

    // Published scores, verbatim.
    cs.published_results = {
        {"Satellite", {3, 3, 1}, {{0.333, 0.084, 0.028}, {0.333, 0.152, 0.051}, {1, 1, 1}}},
        {"LCX", {1, 1, 1}, {{1, 0.396, 0.396}, {1, 0.194, 0.194}, {1, 0.104, 0.104}}},
        {"RoF", {1, 1, 1}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}},
        {"RS-assisted", {21.1, 1.96, 1}, {{0.095, 0.556, 0.053}, {0.516, 0.27, 0.139}, {1, 0.268, 0.2681}}},
        {"SFN", {42.7, 1, 1}, {{0.024, 0.911, 0.022}, {1, 1, 1}, {1, 1, 1}}},
        {"Dual-soft", {80, 1, 1}, {{0.025, 0.579, 0.014}, {1, 0.904, 0.904}, {1, 0.885, 0.885}}},
    };
    d.validate();
    return cs;
}

}  // namespace dea::case_study
