#include "dea/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "dea/error.hpp"

namespace dea::lp {

const char* to_string(Status status) {
    switch (status) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
    }
    return "unknown";
}

const char* to_string(Relation relation) {
    switch (relation) {
        case Relation::less_equal: return "<=";
        case Relation::equal: return "=";
        case Relation::greater_equal: return ">=";
    }
    return "?";
}

void LpProblem::validate() const {
    const std::size_t n = num_variables();
    auto fail = [](const std::string& what) { throw Error(ErrorCode::dimension_mismatch, what); };
    if (n == 0) fail("linear program has no variables");
    for (double c : objective) {
        if (!std::isfinite(c)) fail("objective coefficient is not finite");
    }
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& row = constraints[i];
        if (row.coefficients.size() != n) {
            fail("constraint " + std::to_string(i) + " has " + std::to_string(row.coefficients.size()) +
                 " coefficients, expected " + std::to_string(n));
        }
        if (!std::isfinite(row.rhs)) fail("constraint " + std::to_string(i) + " rhs is not finite");
        for (double a : row.coefficients) {
            if (!std::isfinite(a)) fail("constraint " + std::to_string(i) + " has a non-finite coefficient");
        }
    }
    if (!lower_bounds.empty() && lower_bounds.size() != n) fail("lower bound vector length mismatch");
    if (!upper_bounds.empty() && upper_bounds.size() != n) fail("upper bound vector length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        const double lo = lower(j);
        const auto hi = upper(j);
        if (std::isnan(lo) || lo == kInfinity) fail("lower bound of variable " + std::to_string(j) + " is invalid");
        if (hi && (!std::isfinite(*hi) || *hi < lo)) {
            fail("upper bound of variable " + std::to_string(j) + " is below its lower bound or not finite");
        }
    }
}

namespace {

// How an original variable is expressed through nonnegative tableau columns:
// x = shift + sign * y[pos] - y[neg].
struct VariableMap {
    double shift = 0.0;
    double sign = 1.0;
    std::size_t pos = 0;
    std::optional<std::size_t> neg;
};

struct StandardRow {
    std::vector<double> coefficients;  // over structural columns
    Relation relation;
    double rhs;
    double flip = 1.0;  // -1 when the row was negated to make rhs >= 0
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)), basis_(rows) {}

    std::size_t rows() const { return basis_.size(); }
    std::size_t cols() const { return static_cast<std::size_t>(t_.cols()) - 1; }
    double& at(std::size_t row, std::size_t col) { return t_(row + 1, col); }
    double at(std::size_t row, std::size_t col) const { return t_(row + 1, col); }
    double& rhs(std::size_t row) { return t_(row + 1, cols()); }
    double rhs(std::size_t row) const { return t_(row + 1, cols()); }
    double reduced_cost(std::size_t col) const { return t_(0, col); }
    double objective() const { return t_(0, cols()); }
    std::vector<std::size_t>& basis() { return basis_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    // Row 0 holds c_B B^-1 A_j - c_j, and c_B B^-1 b in the rhs slot.
    void price(const std::vector<double>& cost) {
        t_.row(0).setZero();
        for (std::size_t j = 0; j < cols(); ++j) t_(0, j) = -cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
            const double cb = cost[basis_[i]];
            if (cb != 0.0) t_.row(0) += cb * t_.row(i + 1);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Eigen::Index r = static_cast<Eigen::Index>(row) + 1;
        t_.row(r) /= t_(r, static_cast<Eigen::Index>(col));
        for (Eigen::Index i = 0; i < t_.rows(); ++i) {
            if (i == r) continue;
            const double factor = t_(i, static_cast<Eigen::Index>(col));
            if (factor != 0.0) t_.row(i) -= factor * t_.row(r);
        }
        basis_[row] = col;
    }

    void dump(std::ostream& os, const std::string& label) const {
        os << "-- " << label << '\n';
        os << std::setw(6) << "z";
        for (Eigen::Index j = 0; j < t_.cols(); ++j) os << ' ' << std::setw(11) << std::setprecision(4) << t_(0, j);
        os << '\n';
        for (std::size_t i = 0; i < rows(); ++i) {
            os << std::setw(6) << ("c" + std::to_string(basis_[i]));
            for (Eigen::Index j = 0; j < t_.cols(); ++j) {
                os << ' ' << std::setw(11) << std::setprecision(4) << t_(static_cast<Eigen::Index>(i) + 1, j);
            }
            os << '\n';
        }
    }

private:
    Eigen::MatrixXd t_;
    std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { optimal, unbounded };

class SimplexRun {
public:
    SimplexRun(Tableau& tableau, const SolverOptions& options, std::size_t iteration_cap)
        : t_(tableau), options_(options), cap_(iteration_cap) {}

    // Columns at or beyond `enterable` never enter the basis.
    PhaseOutcome optimize(const std::vector<double>& cost, std::size_t enterable, const char* phase) {
        t_.price(cost);
        std::size_t degenerate_streak = 0;
        bool bland = false;
        const double tol = options_.tolerances.pivot;
        for (;;) {
            const auto entering = choose_entering(enterable, bland, tol);
            if (!entering) return PhaseOutcome::optimal;
            const auto leaving = choose_leaving(*entering, tol);
            if (!leaving) return PhaseOutcome::unbounded;

            const double step = std::max(0.0, t_.rhs(*leaving)) / t_.at(*leaving, *entering);
            degenerate_streak = step <= tol ? degenerate_streak + 1 : 0;
            if (degenerate_streak > options_.stall_threshold) bland = true;

            if (++iterations_ > cap_) {
                throw Error(ErrorCode::numerical_breakdown,
                            std::string("simplex iteration limit reached in ") + phase +
                                (bland ? " with Bland's rule engaged" : ""));
            }
            t_.pivot(*leaving, *entering);
            if (options_.trace) {
                t_.dump(*options_.trace, std::string(phase) + " pivot " + std::to_string(iterations_) + ": col " +
                                             std::to_string(*entering) + " enters at row " + std::to_string(*leaving));
            }
        }
    }

    std::size_t iterations() const { return iterations_; }

private:
    std::optional<std::size_t> choose_entering(std::size_t enterable, bool bland, double tol) const {
        std::optional<std::size_t> best;
        double best_value = -tol;
        for (std::size_t j = 0; j < enterable; ++j) {
            const double rc = t_.reduced_cost(j);
            if (rc >= -tol) continue;
            if (bland) return j;
            if (rc < best_value) {
                best_value = rc;
                best = j;
            }
        }
        return best;
    }

    // Minimum ratio; ties go to the smallest basic column index.
    std::optional<std::size_t> choose_leaving(std::size_t col, double tol) const {
        double min_ratio = kInfinity;
        for (std::size_t i = 0; i < t_.rows(); ++i) {
            const double a = t_.at(i, col);
            if (a > tol) min_ratio = std::min(min_ratio, std::max(0.0, t_.rhs(i)) / a);
        }
        if (min_ratio == kInfinity) return std::nullopt;
        const double window = min_ratio + 1e-12 * std::max(1.0, min_ratio);
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < t_.rows(); ++i) {
            const double a = t_.at(i, col);
            if (a <= tol || std::max(0.0, t_.rhs(i)) / a > window) continue;
            if (!best || t_.basis()[i] < t_.basis()[*best]) best = i;
        }
        return best;
    }

    Tableau& t_;
    const SolverOptions& options_;
    std::size_t cap_;
    std::size_t iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const SolverOptions& options) {
    problem.validate();
    const std::size_t n = problem.num_variables();
    const double sense = problem.sense == Sense::maximize ? 1.0 : -1.0;

    // Variables -> nonnegative structural columns.
    std::vector<VariableMap> vars(n);
    std::size_t structural = 0;
    std::vector<StandardRow> rows;
    for (const auto& c : problem.constraints) rows.push_back({c.coefficients, c.relation, c.rhs});
    for (std::size_t j = 0; j < n; ++j) {
        const double lo = problem.lower(j);
        const auto hi = problem.upper(j);
        auto& v = vars[j];
        v.pos = structural++;
        if (std::isfinite(lo)) {
            v.shift = lo;
            if (hi) {
                std::vector<double> coeffs(n, 0.0);
                coeffs[j] = 1.0;
                rows.push_back({std::move(coeffs), Relation::less_equal, *hi});
            }
        } else if (hi) {
            v.shift = *hi;
            v.sign = -1.0;
        } else {
            v.neg = structural++;
        }
    }

    // Rows over structural columns, shifted and flipped so rhs >= 0.
    const std::size_t m = rows.size();
    std::size_t inequalities = 0;
    std::size_t artificials = 0;
    for (auto& row : rows) {
        std::vector<double> coeffs(structural, 0.0);
        double rhs = row.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            const double a = row.coefficients[j];
            rhs -= a * vars[j].shift;
            coeffs[vars[j].pos] += a * vars[j].sign;
            if (vars[j].neg) coeffs[*vars[j].neg] -= a;
        }
        if (rhs < 0.0) {
            row.flip = -1.0;
            rhs = -rhs;
            for (double& a : coeffs) a = -a;
            if (row.relation == Relation::less_equal) row.relation = Relation::greater_equal;
            else if (row.relation == Relation::greater_equal) row.relation = Relation::less_equal;
        }
        row.coefficients = std::move(coeffs);
        row.rhs = rhs;
        if (row.relation != Relation::equal) ++inequalities;
        if (row.relation != Relation::less_equal) ++artificials;
    }

    const std::size_t slack_start = structural;
    const std::size_t art_start = slack_start + inequalities;
    const std::size_t total = art_start + artificials;
    Tableau tableau(m, total);
    std::vector<std::size_t> initial_basis(m);
    {
        std::size_t next_slack = slack_start;
        std::size_t next_art = art_start;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = rows[i];
            for (std::size_t k = 0; k < structural; ++k) tableau.at(i, k) = row.coefficients[k];
            tableau.rhs(i) = row.rhs;
            if (row.relation == Relation::less_equal) {
                tableau.at(i, next_slack) = 1.0;
                initial_basis[i] = next_slack++;
            } else {
                if (row.relation == Relation::greater_equal) tableau.at(i, next_slack++) = -1.0;
                tableau.at(i, next_art) = 1.0;
                initial_basis[i] = next_art++;
            }
        }
    }
    tableau.basis() = initial_basis;

    const std::size_t cap = 1000 + 50 * (m + total);
    SimplexRun run(tableau, options, cap);
    LpSolution solution;

    if (artificials > 0) {
        std::vector<double> phase1(total, 0.0);
        std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(art_start), phase1.end(), -1.0);
        run.optimize(phase1, total, "phase 1");
        double scale = 1.0;
        for (const auto& row : rows) scale = std::max(scale, row.rhs);
        if (-tableau.objective() > options.tolerances.feasibility * scale) {
            solution.status = Status::infeasible;
            solution.iterations = run.iterations();
            return solution;
        }
        // Drive zero-level artificials out; rows with no other support are redundant
        // and keep their artificial basic at zero.
        for (std::size_t i = 0; i < m; ++i) {
            if (tableau.basis()[i] < art_start) continue;
            std::optional<std::size_t> col;
            double best = options.tolerances.pivot;
            for (std::size_t j = 0; j < art_start; ++j) {
                if (std::abs(tableau.at(i, j)) > best) {
                    best = std::abs(tableau.at(i, j));
                    col = j;
                }
            }
            if (col) tableau.pivot(i, *col);
        }
    }

    std::vector<double> cost(total, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        cost[vars[j].pos] += sense * problem.objective[j] * vars[j].sign;
        if (vars[j].neg) cost[*vars[j].neg] -= sense * problem.objective[j];
    }
    const auto outcome = run.optimize(cost, art_start, "phase 2");
    solution.iterations = run.iterations();
    if (outcome == PhaseOutcome::unbounded) {
        solution.status = Status::unbounded;
        return solution;
    }

    std::vector<double> y(total, 0.0);
    for (std::size_t i = 0; i < m; ++i) y[tableau.basis()[i]] = std::max(0.0, tableau.rhs(i));
    solution.primal.resize(n);
    double objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& v = vars[j];
        double x = v.shift + v.sign * y[v.pos];
        if (v.neg) x -= y[*v.neg];
        solution.primal[j] = x;
        objective += problem.objective[j] * x;
    }

    // Shadow prices c_B B^-1; B^-1 sits in the columns of the starting identity basis.
    solution.dual.resize(problem.constraints.size());
    for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
        double pi = 0.0;
        for (std::size_t i = 0; i < m; ++i) pi += cost[tableau.basis()[i]] * tableau.at(i, initial_basis[k]);
        const double dual = sense * rows[k].flip * pi;
        solution.dual[k] = dual == 0.0 ? 0.0 : dual;
    }
    solution.status = Status::optimal;
    solution.objective_value = objective;
    return solution;
}

}  // namespace dea::lp
