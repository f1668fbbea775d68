#include "dea/engine.hpp"
#include "normalized.hpp"

namespace dea {

// Charnes-Cooper linearization of the ratio model:
//   max u.Y_o  s.t.  v.X_o = 1,  u.Y_j - v.X_j <= 0 for all j,  u, v >= 0.
MultiplierResult multiplier_score(const ScenarioData& data, std::size_t dmu, const EngineOptions& options) {
    detail::require_column(data, dmu);
    const auto nd = detail::normalize(data);
    const Eigen::Index n = nd.n(), m = nd.m(), s = nd.s();
    const auto o = static_cast<Eigen::Index>(dmu);
    const auto vars = static_cast<std::size_t>(s + m);

    lp::LpProblem p;
    p.sense = lp::Sense::maximize;
    p.objective.assign(vars, 0.0);
    for (Eigen::Index r = 0; r < s; ++r) p.objective[static_cast<std::size_t>(r)] = nd.y(r, o);
    {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index i = 0; i < m; ++i) row[static_cast<std::size_t>(s + i)] = nd.x(i, o);
        p.add_constraint(std::move(row), lp::Relation::equal, 1.0);
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index r = 0; r < s; ++r) row[static_cast<std::size_t>(r)] = nd.y(r, j);
        for (Eigen::Index i = 0; i < m; ++i) row[static_cast<std::size_t>(s + i)] = -nd.x(i, j);
        p.add_constraint(std::move(row), lp::Relation::less_equal, 0.0);
    }
    const auto sol = lp::solve_lp(p, options.solver);
    detail::require_optimal(sol, "multiplier");

    MultiplierResult result;
    result.dmu_id = data.dmu_ids[dmu];
    result.score = *sol.objective_value;
    for (Eigen::Index r = 0; r < s; ++r) result.output_weights.push_back(sol.primal[static_cast<std::size_t>(r)] / nd.yscale(r));
    for (Eigen::Index i = 0; i < m; ++i) result.input_weights.push_back(sol.primal[static_cast<std::size_t>(s + i)] / nd.xscale(i));
    return result;
}

MultiplierResult multiplier_score(const Dataset& dataset, const Scenario& scenario, std::string_view dmu_id,
                                  const EngineOptions& options) {
    const auto data = apply_scenario(dataset, scenario);
    return multiplier_score(data, detail::column_of(data, dmu_id), options);
}

}  // namespace dea
