#include <algorithm>
#include <cmath>

#include "dea/engine.hpp"
#include "normalized.hpp"

namespace dea {

const char* to_string(Orientation orientation) { return orientation == Orientation::input ? "input" : "output"; }

const char* to_string(Classification classification) {
    switch (classification) {
        case Classification::strongly_efficient: return "strongly_efficient";
        case Classification::weakly_efficient: return "weakly_efficient";
        case Classification::inefficient: return "inefficient";
    }
    return "inefficient";
}

namespace {

using detail::NormalizedData;

// Second stage: hold the radial score fixed and maximize the sum of
// normalized slacks.
SlackSolution slack_stage(const NormalizedData& nd, Eigen::Index o, double score, Orientation orientation,
                          const EngineOptions& options) {
    const Eigen::Index n = nd.n(), m = nd.m(), s = nd.s();
    const auto vars = static_cast<std::size_t>(n + m + s);
    lp::LpProblem p;
    p.sense = lp::Sense::maximize;
    p.objective.assign(vars, 0.0);
    std::fill(p.objective.begin() + n, p.objective.end(), 1.0);
    const double input_factor = orientation == Orientation::input ? score : 1.0;
    const double output_factor = orientation == Orientation::output ? score : 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = nd.x(i, j);
        row[static_cast<std::size_t>(n + i)] = 1.0;
        p.add_constraint(std::move(row), lp::Relation::equal, input_factor * nd.x(i, o));
    }
    for (Eigen::Index r = 0; r < s; ++r) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = nd.y(r, j);
        row[static_cast<std::size_t>(n + m + r)] = -1.0;
        p.add_constraint(std::move(row), lp::Relation::equal, output_factor * nd.y(r, o));
    }
    const auto sol = lp::solve_lp(p, options.solver);
    detail::require_optimal(sol, "max-slack");

    // Residues below the feasibility tolerance are solver noise.
    const auto clean = [&](double v) { return v > options.solver.tolerances.feasibility ? v : 0.0; };
    SlackSolution out;
    out.lambdas.assign(sol.primal.begin(), sol.primal.begin() + n);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double rel = clean(sol.primal[static_cast<std::size_t>(n + i)]);
        out.relative_input_slacks.push_back(rel);
        out.input_slacks.push_back(rel * nd.xscale(i));
    }
    for (Eigen::Index r = 0; r < s; ++r) {
        const double rel = clean(sol.primal[static_cast<std::size_t>(n + m + r)]);
        out.relative_output_slacks.push_back(rel);
        out.output_slacks.push_back(rel * nd.yscale(r));
    }
    return out;
}

}  // namespace

SlackSolution max_slack_phase(const ScenarioData& data, std::size_t dmu, double radial_score, Orientation orientation,
                              const EngineOptions& options) {
    detail::require_column(data, dmu);
    return slack_stage(detail::normalize(data), static_cast<Eigen::Index>(dmu), radial_score, orientation, options);
}

RadialResult radial_score(const ScenarioData& data, std::size_t dmu, Orientation orientation,
                          const EngineOptions& options) {
    detail::require_column(data, dmu);
    const auto nd = detail::normalize(data);
    const Eigen::Index n = nd.n(), m = nd.m(), s = nd.s();
    const auto o = static_cast<Eigen::Index>(dmu);
    const auto vars = static_cast<std::size_t>(1 + n);

    // Variable 0 is theta (input) or sigma (output); then one lambda per DMU.
    lp::LpProblem p;
    p.sense = orientation == Orientation::input ? lp::Sense::minimize : lp::Sense::maximize;
    p.objective.assign(vars, 0.0);
    p.objective[0] = 1.0;
    p.lower_bounds.assign(vars, 0.0);
    p.lower_bounds[0] = -lp::kInfinity;
    for (Eigen::Index i = 0; i < m; ++i) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(1 + j)] = nd.x(i, j);
        if (orientation == Orientation::input) {
            row[0] = -nd.x(i, o);
            p.add_constraint(std::move(row), lp::Relation::less_equal, 0.0);
        } else {
            p.add_constraint(std::move(row), lp::Relation::less_equal, nd.x(i, o));
        }
    }
    for (Eigen::Index r = 0; r < s; ++r) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(1 + j)] = nd.y(r, j);
        if (orientation == Orientation::input) {
            p.add_constraint(std::move(row), lp::Relation::greater_equal, nd.y(r, o));
        } else {
            row[0] = -nd.y(r, o);
            p.add_constraint(std::move(row), lp::Relation::greater_equal, 0.0);
        }
    }
    const auto sol = lp::solve_lp(p, options.solver);
    detail::require_optimal(sol, orientation == Orientation::input ? "input-oriented" : "output-oriented");

    RadialResult result;
    result.dmu_id = data.dmu_ids[dmu];
    result.orientation = orientation;
    result.score = sol.primal[0];

    // Shadow prices of the envelopment rows are the multiplier weights.
    const double in_sign = orientation == Orientation::input ? -1.0 : 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        result.input_weights.push_back(std::max(0.0, in_sign * sol.dual[static_cast<std::size_t>(i)]) / nd.xscale(i));
    }
    for (Eigen::Index r = 0; r < s; ++r) {
        result.output_weights.push_back(std::max(0.0, -in_sign * sol.dual[static_cast<std::size_t>(m + r)]) /
                                        nd.yscale(r));
    }

    auto slack = slack_stage(nd, o, result.score, orientation, options);
    result.lambdas = std::move(slack.lambdas);
    result.input_slacks = std::move(slack.input_slacks);
    result.output_slacks = std::move(slack.output_slacks);
    result.relative_input_slacks = std::move(slack.relative_input_slacks);
    result.relative_output_slacks = std::move(slack.relative_output_slacks);
    for (std::size_t j = 0; j < result.lambdas.size(); ++j) {
        if (result.lambdas[j] > options.peer_threshold) result.peers.push_back(data.dmu_ids[j]);
    }
    result.classification = classify_efficiency(result, options.efficiency_eps);
    return result;
}

Classification classify_efficiency(const RadialResult& radial, double eps) {
    if (std::abs(radial.score - 1.0) > eps) return Classification::inefficient;
    auto slack_free = [eps](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [eps](double x) { return x <= eps; });
    };
    // Fall back to raw slacks when relative ones were not filled in.
    const auto& in = radial.relative_input_slacks.empty() ? radial.input_slacks : radial.relative_input_slacks;
    const auto& out = radial.relative_output_slacks.empty() ? radial.output_slacks : radial.relative_output_slacks;
    return slack_free(in) && slack_free(out) ? Classification::strongly_efficient : Classification::weakly_efficient;
}

RadialResult input_oriented_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                  const EngineOptions& options) {
    const auto data = apply_scenario(dataset, scenario);
    return radial_score(data, detail::column_of(data, dmu_id), Orientation::input, options);
}

RadialResult output_oriented_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                   const EngineOptions& options) {
    const auto data = apply_scenario(dataset, scenario);
    return radial_score(data, detail::column_of(data, dmu_id), Orientation::output, options);
}

SlackSolution max_slack_phase(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                              double radial_score, Orientation orientation, const EngineOptions& options) {
    const auto data = apply_scenario(dataset, scenario);
    return max_slack_phase(data, detail::column_of(data, dmu_id), radial_score, orientation, options);
}

}  // namespace dea
