#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dea {

enum class MetricHint { input_like, output_like, neutral };

const char* to_string(MetricHint hint);

struct MetricSpec {
    std::string id;
    std::string name;
    std::string unit;  // free text, e.g. "10000 RMB", "MB", "s"
    MetricHint hint = MetricHint::neutral;
};

struct DmuRecord {
    std::string id;
    std::string name;
    std::vector<double> values;  // one per metric, in metric order
};

/// Named DMUs sharing one set of metrics. Immutable once validated.
struct Dataset {
    std::vector<MetricSpec> metrics;
    std::vector<DmuRecord> dmus;
    std::string provenance;

    /// Unique ids, at least one DMU, one finite nonnegative value per metric.
    void validate() const;

    std::optional<std::size_t> metric_index(std::string_view id) const;
    std::optional<std::size_t> dmu_index(std::string_view id) const;
    /// Throws Error(unknown_metric).
    std::size_t require_metric(std::string_view id) const;
    /// Throws Error(unknown_dmu).
    std::size_t require_dmu(std::string_view id) const;

    double value(std::size_t dmu, std::string_view metric) const { return dmus[dmu].values[require_metric(metric)]; }
};

/// Which metrics act as inputs and which as outputs, plus optional input prices.
struct Scenario {
    std::string id;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::optional<std::vector<double>> prices;  // one per input, all > 0
    std::string description;

    void validate() const;
};

/// Column j of each matrix belongs to dmu_ids[j].
struct ScenarioData {
    Eigen::MatrixXd inputs;   // m x n
    Eigen::MatrixXd outputs;  // s x n
    std::vector<std::string> dmu_ids;

    std::size_t num_dmus() const { return dmu_ids.size(); }
    std::size_t num_inputs() const { return static_cast<std::size_t>(inputs.rows()); }
    std::size_t num_outputs() const { return static_cast<std::size_t>(outputs.rows()); }
};

/// Selects the scenario's metrics and enforces that every DMU has a positive
/// input and a positive output.
ScenarioData apply_scenario(const Dataset& dataset, const Scenario& scenario);

enum class DataFormat { csv, json };

/// Plain decimal: optional sign, digits with an optional period, optional exponent.
double parse_decimal(std::string_view text, std::size_t line = 0, std::size_t column = 0);
/// Shortest text that parses back to the identical double.
std::string format_decimal(double value);

Dataset parse_dataset(std::string_view text, DataFormat format);
std::string serialize_dataset(const Dataset& dataset, DataFormat format);

/// Accepts either {"scenarios": [...]} or a bare array.
std::vector<Scenario> parse_scenarios(std::string_view json_text);
std::string serialize_scenarios(const std::vector<Scenario>& scenarios);

struct DataBundle {
    Dataset dataset;
    std::vector<Scenario> scenarios;  // only present in JSON bundles
};

/// Reads a .csv or .json file; JSON files may carry scenarios alongside the data.
DataBundle load_data_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Appends b's metric columns to a, matching rows by DMU id. Both must hold
/// the same DMUs and no metric id may appear twice.
Dataset join_columns(const Dataset& a, const Dataset& b);

/// Cost per km of covered track. Throws Error(zero_coverage) when coverage <= 0.
double average_cost(double total_cost, double coverage_km);

}  // namespace dea
