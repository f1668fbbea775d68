// dea: evaluate scenarios, rank DMUs and check the built-in case study
// against its published score table.
//
// Exit status: 0 ok, 1 usage or input error, 2 reproduce found a mismatch.
// DEA_SEED is accepted and ignored; every computation is deterministic.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dea/case_study.hpp"
#include "dea/dataset.hpp"
#include "dea/engine.hpp"
#include "dea/error.hpp"
#include "dea/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Inputs {
    dea::Dataset dataset;
    std::vector<dea::Scenario> scenarios;
};

// Several --data files are joined column-wise on DMU id.
Inputs load_inputs(const std::vector<std::string>& data, const std::string& scenarios_file, bool recomputed,
                   bool default_scenarios = true) {
    Inputs in;
    for (std::size_t k = 0; k < data.size(); ++k) {
        dea::DataBundle bundle;
        if (data[k] == "builtin") {
            auto cs = dea::case_study::builtin_case_study(recomputed ? dea::case_study::CostPerKm::recomputed
                                                                     : dea::case_study::CostPerKm::printed);
            bundle.dataset = std::move(cs.dataset);
            bundle.scenarios = std::move(cs.scenarios);
        } else {
            bundle = dea::load_data_file(data[k]);
        }
        in.dataset = k == 0 ? std::move(bundle.dataset) : dea::join_columns(in.dataset, bundle.dataset);
        in.scenarios.insert(in.scenarios.end(), bundle.scenarios.begin(), bundle.scenarios.end());
    }
    if (!scenarios_file.empty()) in.scenarios = dea::parse_scenarios(dea::read_text_file(scenarios_file));
    // A bare CSV table carries no scenarios; the case-study ones apply when its metric ids match.
    if (in.scenarios.empty() && default_scenarios) in.scenarios = dea::case_study::builtin_case_study().scenarios;
    return in;
}

const dea::Scenario& find_scenario(const std::vector<dea::Scenario>& scenarios, const std::string& id) {
    for (const auto& s : scenarios) {
        if (s.id == id) return s;
    }
    std::string known;
    for (const auto& s : scenarios) known += (known.empty() ? "" : ", ") + s.id;
    throw dea::Error(dea::ErrorCode::invalid_scenario, "unknown scenario '" + id + "' (known: " + known + ")");
}

std::vector<double> parse_prices(const std::string& text) {
    std::vector<double> prices;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) prices.push_back(dea::parse_decimal(item));
    return prices;
}

std::pair<std::string, dea::report::Direction> parse_tiebreak(const std::string& text) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) {
        throw dea::Error(dea::ErrorCode::parse_error, "--tiebreak expects <metric>:asc or <metric>:desc");
    }
    const std::string dir = text.substr(colon + 1);
    if (dir != "asc" && dir != "desc") {
        throw dea::Error(dea::ErrorCode::parse_error, "--tiebreak direction must be asc or desc, got '" + dir + "'");
    }
    return {text.substr(0, colon),
            dir == "asc" ? dea::report::Direction::smaller_better : dea::report::Direction::larger_better};
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dea::Error(dea::ErrorCode::parse_error, "cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data envelopment analysis (CCR) engine"};
    app.require_subcommand(1);

    std::vector<std::string> data;
    std::string scenarios_file, scenario_id, orientation_name = "input", prices_text, format_name = "text",
                                                   out_path, tiebreak;
    bool trace_lp = false, recomputed = false;
    unsigned threads = 1;

    auto* eval = app.add_subcommand("eval", "score every DMU under one scenario");
    eval->add_option("--data", data, "dataset file (csv or json) or 'builtin'; repeat to join columns")->required();
    eval->add_option("--scenarios", scenarios_file, "scenario definitions (json)");
    eval->add_option("--scenario", scenario_id, "scenario id")->required();
    eval->add_option("--orientation", orientation_name, "input or output")
        ->check(CLI::IsMember({"input", "output"}));
    eval->add_option("--prices", prices_text, "input prices p1,p2,... for cost efficiency");
    eval->add_option("--format", format_name, "text, csv, json or svg");
    eval->add_option("--out", out_path, "write the report here instead of stdout");
    eval->add_option("--tiebreak", tiebreak, "order DMUs tied at score 1 by <metric>:asc|desc");
    eval->add_flag("--trace-lp", trace_lp, "dump every simplex tableau to stderr");
    eval->add_flag("--recomputed", recomputed, "builtin data: cost per km as total cost / coverage");
    eval->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

    auto* reproduce = app.add_subcommand("reproduce", "compare the case study with its published tables");
    reproduce->require_subcommand(1);
    double tolerance = 0.05;
    auto* table3 = reproduce->add_subcommand("table3", "score table comparison");
    table3->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::NonNegativeNumber);
    table3->add_option("--format", format_name, "text, csv or json");
    table3->add_option("--out", out_path, "write the report here instead of stdout");
    auto* table2 = reproduce->add_subcommand("table2", "cost per km audit");
    table2->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::NonNegativeNumber);
    table2->add_option("--format", format_name, "text, csv or json");
    table2->add_option("--out", out_path, "write the report here instead of stdout");

    auto* validate = app.add_subcommand("validate", "check a dataset file");
    validate->add_option("--data", data, "dataset file (csv or json) or 'builtin'; repeat to join columns")->required();
    validate->add_option("--scenarios", scenarios_file, "scenario definitions (json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed()) {
            const auto in = load_inputs(data, scenarios_file, recomputed);
            const auto& scenario = find_scenario(in.scenarios, scenario_id);
            const auto orientation = orientation_name == "output" ? dea::Orientation::output : dea::Orientation::input;
            const auto format = dea::report::parse_format(format_name);
            std::optional<std::vector<double>> prices;
            if (!prices_text.empty()) prices = parse_prices(prices_text);

            dea::EngineOptions options;
            options.threads = threads;
            if (trace_lp) {
                options.solver.trace = &std::cerr;
                options.threads = 1;
            }
            const auto table = dea::evaluate_all(in.dataset, scenario, orientation, prices, options);
            dea::report::EmitOptions emit;
            if (!tiebreak.empty()) {
                const auto [metric, direction] = parse_tiebreak(tiebreak);
                emit.ranking = dea::report::tiebreak_rank(table, in.dataset, metric, direction);
            } else {
                emit.ranking = dea::report::rank_dmus(table);
            }
            write_output(dea::report::emit_report(table, format, emit), out_path);
            return kOk;
        }
        if (table3->parsed()) {
            const auto report = dea::report::reproduce_table3(tolerance);
            write_output(dea::report::emit_report(report, dea::report::parse_format(format_name)), out_path);
            return report.has_mismatch() ? kMismatch : kOk;
        }
        if (table2->parsed()) {
            const auto audit = dea::report::reproduce_table2(tolerance);
            write_output(dea::report::emit_report(audit, dea::report::parse_format(format_name)), out_path);
            return kOk;
        }
        if (validate->parsed()) {
            const auto in = load_inputs(data, scenarios_file, false, false);
            in.dataset.validate();
            std::cout << "dataset ok: " << in.dataset.dmus.size() << " DMUs, " << in.dataset.metrics.size()
                      << " metrics\n";
            int status = kOk;
            for (const auto& s : in.scenarios) {
                try {
                    const auto d = apply_scenario(in.dataset, s);
                    std::cout << "scenario " << s.id << " ok: " << d.num_inputs() << " inputs, " << d.num_outputs()
                              << " outputs\n";
                } catch (const dea::Error& e) {
                    std::cout << "scenario " << s.id << ": " << dea::to_string(e.code()) << ": " << e.what() << '\n';
                    status = kUsage;
                }
            }
            return status;
        }
    } catch (const dea::Error& e) {
        std::cerr << "dea: " << dea::to_string(e.code()) << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "dea: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
