#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "dea/engine.hpp"
#include "dea/error.hpp"

namespace dea {

const ScoreEntry& ScoreTable::entry(std::string_view dmu_id) const {
    for (const auto& e : entries) {
        if (e.radial.dmu_id == dmu_id) return e;
    }
    throw Error(ErrorCode::unknown_dmu, "score table has no DMU '" + std::string(dmu_id) + "'");
}

namespace {

ScoreEntry evaluate_one(const ScenarioData& data, std::size_t j, Orientation orientation,
                        const std::optional<std::vector<double>>& prices, const EngineOptions& options) {
    ScoreEntry entry;
    entry.radial = radial_score(data, j, orientation, options);
    if (prices) {
        const double te = orientation == Orientation::input ? entry.radial.score
                                                            : radial_score(data, j, Orientation::input, options).score;
        const double ce = cost_efficiency(data, *prices, j, options);
        entry.breakdown = decompose_efficiency(te, ce, data.dmu_ids[j], options.solver.tolerances.gap);
    }
    return entry;
}

}  // namespace

ScoreTable evaluate_all(const Dataset& dataset, const Scenario& scenario, Orientation orientation,
                        const std::optional<std::vector<double>>& prices, const EngineOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    dataset.validate();
    const auto data = apply_scenario(dataset, scenario);
    const auto& effective_prices = prices ? prices : scenario.prices;
    if (effective_prices && effective_prices->size() != data.num_inputs()) {
        throw Error(ErrorCode::invalid_scenario, "scenario '" + scenario.id + "' has " +
                                                     std::to_string(data.num_inputs()) + " inputs but " +
                                                     std::to_string(effective_prices->size()) + " prices were given");
    }

    const std::size_t n = data.num_dmus();
    std::vector<ScoreEntry> entries(n);
    std::vector<std::exception_ptr> failures(n);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t j = first; j < n; j += stride) {
            try {
                entries[j] = evaluate_one(data, j, orientation, effective_prices, options);
            } catch (...) {
                failures[j] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, n));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!failures[j]) continue;
        try {
            std::rethrow_exception(failures[j]);
        } catch (const Error& e) {
            throw Error(e.code(), "DMU '" + data.dmu_ids[j] + "': " + e.what());
        }
    }

    ScoreTable table;
    table.scenario_id = scenario.id;
    table.orientation = orientation;
    table.entries = std::move(entries);
    table.metadata.tolerances = options.solver.tolerances;
    table.metadata.efficiency_eps = options.efficiency_eps;
    table.metadata.peer_threshold = options.peer_threshold;
    table.metadata.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return table;
}

}  // namespace dea
