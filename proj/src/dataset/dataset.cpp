#include "dea/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dea/error.hpp"

namespace dea {

const char* to_string(MetricHint hint) {
    switch (hint) {
        case MetricHint::input_like: return "input";
        case MetricHint::output_like: return "output";
        case MetricHint::neutral: return "neutral";
    }
    return "neutral";
}

void Dataset::validate() const {
    if (dmus.empty()) throw Error(ErrorCode::missing_value, "dataset has no DMUs");
    std::set<std::string_view> seen;
    for (const auto& m : metrics) {
        if (m.id.empty()) throw Error(ErrorCode::parse_error, "metric with empty id");
        if (!seen.insert(m.id).second) throw Error(ErrorCode::parse_error, "duplicate metric id '" + m.id + "'");
    }
    seen.clear();
    for (const auto& d : dmus) {
        if (d.id.empty()) throw Error(ErrorCode::parse_error, "DMU with empty id");
        if (!seen.insert(d.id).second) throw Error(ErrorCode::parse_error, "duplicate DMU id '" + d.id + "'");
        if (d.values.size() < metrics.size()) {
            throw Error(ErrorCode::missing_value,
                        "DMU '" + d.id + "' has no value for metric '" + metrics[d.values.size()].id + "'");
        }
        if (d.values.size() > metrics.size()) {
            throw Error(ErrorCode::parse_error, "DMU '" + d.id + "' has more values than metrics");
        }
        for (std::size_t k = 0; k < metrics.size(); ++k) {
            const double v = d.values[k];
            if (std::isnan(v)) {
                throw Error(ErrorCode::missing_value, "DMU '" + d.id + "' has no value for metric '" + metrics[k].id + "'");
            }
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::parse_error, "DMU '" + d.id + "' metric '" + metrics[k].id + "' is not finite");
            }
            if (v < 0.0) {
                throw Error(ErrorCode::negative_value,
                            "DMU '" + d.id + "' metric '" + metrics[k].id + "' is negative (" + format_decimal(v) + ")");
            }
        }
    }
}

std::optional<std::size_t> Dataset::metric_index(std::string_view id) const {
    for (std::size_t k = 0; k < metrics.size(); ++k) {
        if (metrics[k].id == id) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> Dataset::dmu_index(std::string_view id) const {
    for (std::size_t j = 0; j < dmus.size(); ++j) {
        if (dmus[j].id == id) return j;
    }
    return std::nullopt;
}

std::size_t Dataset::require_metric(std::string_view id) const {
    if (auto k = metric_index(id)) return *k;
    throw Error(ErrorCode::unknown_metric, "unknown metric '" + std::string(id) + "'");
}

std::size_t Dataset::require_dmu(std::string_view id) const {
    if (auto j = dmu_index(id)) return *j;
    throw Error(ErrorCode::unknown_dmu, "unknown DMU '" + std::string(id) + "'");
}

Dataset join_columns(const Dataset& a, const Dataset& b) {
    if (a.dmus.size() != b.dmus.size()) {
        throw Error(ErrorCode::dimension_mismatch, "cannot join datasets with " + std::to_string(a.dmus.size()) +
                                                       " and " + std::to_string(b.dmus.size()) + " DMUs");
    }
    Dataset out = a;
    for (const auto& m : b.metrics) {
        if (out.metric_index(m.id)) {
            throw Error(ErrorCode::dimension_mismatch, "metric '" + m.id + "' appears in both datasets");
        }
        out.metrics.push_back(m);
    }
    for (auto& d : out.dmus) {
        const auto& extra = b.dmus[b.require_dmu(d.id)].values;
        d.values.insert(d.values.end(), extra.begin(), extra.end());
    }
    if (!b.provenance.empty()) out.provenance += (out.provenance.empty() ? "" : "; ") + b.provenance;
    return out;
}

void Scenario::validate() const {
    if (inputs.empty() || outputs.empty()) {
        throw Error(ErrorCode::empty_scenario, "scenario '" + id + "' needs at least one input and one output");
    }
    std::set<std::string_view> seen;
    for (const auto& m : inputs) {
        if (!seen.insert(m).second) throw Error(ErrorCode::invalid_scenario, "scenario '" + id + "' repeats metric '" + m + "'");
    }
    for (const auto& m : outputs) {
        if (!seen.insert(m).second) {
            throw Error(ErrorCode::invalid_scenario, "scenario '" + id + "' uses metric '" + m + "' more than once");
        }
    }
    if (prices) {
        if (prices->size() != inputs.size()) {
            throw Error(ErrorCode::invalid_scenario, "scenario '" + id + "' has " + std::to_string(prices->size()) +
                                                         " prices for " + std::to_string(inputs.size()) + " inputs");
        }
        for (double p : *prices) {
            if (!(p > 0.0) || !std::isfinite(p)) {
                throw Error(ErrorCode::non_positive_price, "scenario '" + id + "' has a non-positive price");
            }
        }
    }
}

ScenarioData apply_scenario(const Dataset& dataset, const Scenario& scenario) {
    scenario.validate();
    std::vector<std::size_t> in_idx;
    std::vector<std::size_t> out_idx;
    for (const auto& m : scenario.inputs) in_idx.push_back(dataset.require_metric(m));
    for (const auto& m : scenario.outputs) out_idx.push_back(dataset.require_metric(m));

    const auto n = static_cast<Eigen::Index>(dataset.dmus.size());
    ScenarioData data;
    data.inputs.resize(static_cast<Eigen::Index>(in_idx.size()), n);
    data.outputs.resize(static_cast<Eigen::Index>(out_idx.size()), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& dmu = dataset.dmus[static_cast<std::size_t>(j)];
        data.dmu_ids.push_back(dmu.id);
        for (std::size_t i = 0; i < in_idx.size(); ++i) data.inputs(static_cast<Eigen::Index>(i), j) = dmu.values[in_idx[i]];
        for (std::size_t r = 0; r < out_idx.size(); ++r) data.outputs(static_cast<Eigen::Index>(r), j) = dmu.values[out_idx[r]];
        if (!(data.inputs.col(j).array() > 0.0).any()) {
            throw Error(ErrorCode::all_zero_profile, "DMU '" + dmu.id + "' has no positive input in scenario '" + scenario.id + "'");
        }
        if (!(data.outputs.col(j).array() > 0.0).any()) {
            throw Error(ErrorCode::all_zero_profile, "DMU '" + dmu.id + "' has no positive output in scenario '" + scenario.id + "'");
        }
    }
    return data;
}

double average_cost(double total_cost, double coverage_km) {
    if (!(coverage_km > 0.0)) throw Error(ErrorCode::zero_coverage, "coverage per cell must be positive");
    return total_cost / coverage_km;
}

}  // namespace dea
