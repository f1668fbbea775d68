#include <algorithm>
#include <cmath>

#include "dea/error.hpp"
#include "dea/lp.hpp"

namespace dea::lp {

namespace {

enum class VarSign { nonnegative, nonpositive, free };

}  // namespace

LpProblem dual_of(const LpProblem& problem) {
    problem.validate();
    const std::size_t n = problem.num_variables();

    // Fold every bound that is not a plain sign restriction into a row.
    std::vector<Constraint> rows = problem.constraints;
    std::vector<VarSign> signs(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lo = problem.lower(j);
        const auto hi = problem.upper(j);
        auto unit_row = [&](Relation rel, double rhs) {
            std::vector<double> coeffs(n, 0.0);
            coeffs[j] = 1.0;
            rows.push_back({std::move(coeffs), rel, rhs});
        };
        if (lo == 0.0) {
            signs[j] = VarSign::nonnegative;
            if (hi) unit_row(Relation::less_equal, *hi);
        } else if (std::isinf(lo) && hi && *hi == 0.0) {
            signs[j] = VarSign::nonpositive;
        } else {
            signs[j] = VarSign::free;
            if (std::isfinite(lo)) unit_row(Relation::greater_equal, lo);
            if (hi) unit_row(Relation::less_equal, *hi);
        }
    }
    if (rows.empty()) {
        throw Error(ErrorCode::dimension_mismatch, "a problem without constraints has no representable dual");
    }

    const bool max_primal = problem.sense == Sense::maximize;
    LpProblem dual;
    dual.sense = max_primal ? Sense::minimize : Sense::maximize;
    dual.objective.reserve(rows.size());
    dual.lower_bounds.assign(rows.size(), 0.0);
    dual.upper_bounds.assign(rows.size(), std::nullopt);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        dual.objective.push_back(rows[i].rhs);
        // Shadow-price sign convention: "natural" rows carry nonnegative multipliers.
        const Relation natural = max_primal ? Relation::less_equal : Relation::greater_equal;
        if (rows[i].relation == Relation::equal) {
            dual.lower_bounds[i] = -kInfinity;
        } else if (rows[i].relation != natural) {
            dual.lower_bounds[i] = -kInfinity;
            dual.upper_bounds[i] = 0.0;
        }
    }
    if (std::none_of(dual.upper_bounds.begin(), dual.upper_bounds.end(), [](const auto& u) { return u.has_value(); })) {
        dual.upper_bounds.clear();
    }

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> column(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i].coefficients[j];
        Relation rel = Relation::equal;
        if (signs[j] == VarSign::nonnegative) rel = max_primal ? Relation::greater_equal : Relation::less_equal;
        if (signs[j] == VarSign::nonpositive) rel = max_primal ? Relation::less_equal : Relation::greater_equal;
        dual.add_constraint(std::move(column), rel, problem.objective[j]);
    }
    return dual;
}

double KktReport::gap() const { return std::abs(primal_objective - dual_objective); }

bool KktReport::satisfied(const Tolerances& tol) const {
    return primal_infeasibility <= tol.feasibility && dual_infeasibility <= tol.feasibility &&
           gap() <= tol.gap * std::max(1.0, std::abs(primal_objective));
}

KktReport check_kkt(const LpProblem& problem, const LpSolution& solution) {
    problem.validate();
    if (!solution.optimal()) throw Error(ErrorCode::domain_error, "KKT check requires an optimal solution");
    const std::size_t n = problem.num_variables();
    if (solution.primal.size() != n || solution.dual.size() != problem.constraints.size()) {
        throw Error(ErrorCode::dimension_mismatch, "solution does not match problem dimensions");
    }
    const double s = problem.sense == Sense::maximize ? 1.0 : -1.0;
    const auto& x = solution.primal;
    const auto& y = solution.dual;

    KktReport report;
    std::vector<double> reduced = problem.objective;
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        const auto& row = problem.constraints[i];
        double activity = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            activity += row.coefficients[j] * x[j];
            reduced[j] -= row.coefficients[j] * y[i];
        }
        double violation = 0.0;
        double sign_violation = 0.0;
        switch (row.relation) {
            case Relation::less_equal:
                violation = activity - row.rhs;
                sign_violation = -s * y[i];
                break;
            case Relation::greater_equal:
                violation = row.rhs - activity;
                sign_violation = s * y[i];
                break;
            case Relation::equal:
                violation = std::abs(activity - row.rhs);
                break;
        }
        report.primal_infeasibility = std::max(report.primal_infeasibility, violation);
        report.dual_infeasibility = std::max(report.dual_infeasibility, sign_violation);
        report.dual_objective += row.rhs * y[i];
    }

    for (std::size_t j = 0; j < n; ++j) {
        const double lo = problem.lower(j);
        const auto hi = problem.upper(j);
        if (std::isfinite(lo)) report.primal_infeasibility = std::max(report.primal_infeasibility, lo - x[j]);
        if (hi) report.primal_infeasibility = std::max(report.primal_infeasibility, x[j] - *hi);
        report.primal_objective += problem.objective[j] * x[j];

        // A nonzero reduced cost must be carried by the bound it pushes against.
        const double pushed = s * reduced[j];
        if (pushed > 0.0) {
            if (hi) report.dual_objective += reduced[j] * *hi;
            else report.dual_infeasibility = std::max(report.dual_infeasibility, pushed);
        } else if (pushed < 0.0) {
            if (std::isfinite(lo)) report.dual_objective += reduced[j] * lo;
            else report.dual_infeasibility = std::max(report.dual_infeasibility, -pushed);
        }
    }
    return report;
}

}  // namespace dea::lp
