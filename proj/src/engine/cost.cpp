#include <algorithm>
#include <cmath>

#include "dea/engine.hpp"
#include "normalized.hpp"

namespace dea {

namespace {

void check_prices(std::span<const double> prices, std::size_t inputs) {
    if (prices.size() != inputs) {
        throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(inputs) + " prices, got " +
                                                       std::to_string(prices.size()));
    }
    for (double p : prices) {
        if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorCode::non_positive_price, "input prices must be positive");
    }
}

}  // namespace

// min p.x  s.t.  sum_j lambda_j X_j <= x,  sum_j lambda_j Y_j >= Y_o,  lambda, x >= 0
double cost_efficiency(const ScenarioData& data, std::span<const double> prices, std::size_t dmu,
                       const EngineOptions& options) {
    detail::require_column(data, dmu);
    const auto nd = detail::normalize(data);
    check_prices(prices, data.num_inputs());
    const Eigen::Index n = nd.n(), m = nd.m(), s = nd.s();
    const auto o = static_cast<Eigen::Index>(dmu);
    const auto vars = static_cast<std::size_t>(n + m);

    // Prices per normalized unit.
    std::vector<double> scaled_prices(static_cast<std::size_t>(m));
    double actual = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        scaled_prices[static_cast<std::size_t>(i)] = prices[static_cast<std::size_t>(i)] * nd.xscale(i);
        actual += scaled_prices[static_cast<std::size_t>(i)] * nd.x(i, o);
    }

    lp::LpProblem p;
    p.sense = lp::Sense::minimize;
    p.objective.assign(vars, 0.0);
    std::copy(scaled_prices.begin(), scaled_prices.end(), p.objective.begin() + n);
    for (Eigen::Index i = 0; i < m; ++i) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = nd.x(i, j);
        row[static_cast<std::size_t>(n + i)] = -1.0;
        p.add_constraint(std::move(row), lp::Relation::less_equal, 0.0);
    }
    for (Eigen::Index r = 0; r < s; ++r) {
        std::vector<double> row(vars, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = nd.y(r, j);
        p.add_constraint(std::move(row), lp::Relation::greater_equal, nd.y(r, o));
    }
    const auto sol = lp::solve_lp(p, options.solver);
    detail::require_optimal(sol, "cost-minimization");
    return *sol.objective_value / actual;
}

double cost_efficiency(const Dataset& dataset, const Scenario& scenario, std::span<const double> prices,
                       std::string_view dmu_id, const EngineOptions& options) {
    const auto data = apply_scenario(dataset, scenario);
    return cost_efficiency(data, prices, detail::column_of(data, dmu_id), options);
}

EfficiencyBreakdown decompose_efficiency(double te, double ce, std::string dmu_id, double gap_tolerance) {
    if (!(te > 0.0) || te > 1.0 + gap_tolerance) {
        throw Error(ErrorCode::domain_error, "technical efficiency " + format_decimal(te) + " is outside (0, 1]");
    }
    if (!(ce > 0.0)) throw Error(ErrorCode::domain_error, "cost efficiency " + format_decimal(ce) + " is not positive");
    if (ce > te + gap_tolerance) {
        throw Error(ErrorCode::domain_error, "cost efficiency " + format_decimal(ce) + " exceeds technical efficiency " +
                                                 format_decimal(te));
    }
    EfficiencyBreakdown b;
    b.dmu_id = std::move(dmu_id);
    b.te = std::min(te, 1.0);
    b.ce = std::min(ce, b.te);
    b.ae = std::min(1.0, b.ce / b.te);
    return b;
}

}  // namespace dea
