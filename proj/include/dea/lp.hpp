#pragma once

// Dense two-phase simplex solver for the small linear programs generated by
// the DEA models. Returns a primal optimum together with shadow prices.

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

namespace dea::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status status);
const char* to_string(Relation relation);

struct Tolerances {
    double pivot = 1e-9;        // smallest usable pivot element
    double feasibility = 1e-7;  // constraint violation accepted at the primal point
    double gap = 1e-6;          // relative primal/dual objective gap
};

struct Constraint {
    std::vector<double> coefficients;
    Relation relation = Relation::less_equal;
    double rhs = 0.0;
};

struct LpProblem {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    // Empty means every variable is >= 0. Entries may be -kInfinity (free below).
    std::vector<double> lower_bounds;
    // Empty means no upper bounds.
    std::vector<std::optional<double>> upper_bounds;

    std::size_t num_variables() const { return objective.size(); }
    double lower(std::size_t j) const { return lower_bounds.empty() ? 0.0 : lower_bounds[j]; }
    std::optional<double> upper(std::size_t j) const {
        return upper_bounds.empty() ? std::nullopt : upper_bounds[j];
    }

    void add_constraint(std::vector<double> coefficients, Relation relation, double rhs) {
        constraints.push_back({std::move(coefficients), relation, rhs});
    }

    /// Throws Error(dimension_mismatch) on any ill-formed shape, bound or value.
    void validate() const;
};

struct LpSolution {
    Status status = Status::infeasible;
    // Populated only when status == optimal.
    std::vector<double> primal;
    // Shadow prices d(objective)/d(rhs_i), one per constraint.
    std::vector<double> dual;
    std::optional<double> objective_value;
    std::size_t iterations = 0;

    bool optimal() const { return status == Status::optimal; }
};

struct SolverOptions {
    Tolerances tolerances{};
    // Degenerate pivots in a row before switching from Dantzig's rule to Bland's.
    std::size_t stall_threshold = 25;
    // Plain-text tableau dump after every pivot when set.
    std::ostream* trace = nullptr;
};

LpSolution solve_lp(const LpProblem& problem, const SolverOptions& options = {});

/// Lagrangian dual with the same optimal value. Sign-constrained and free
/// variables map to dual constraint relations; any other bound is first
/// rewritten as an explicit constraint.
LpProblem dual_of(const LpProblem& problem);

struct KktReport {
    double primal_infeasibility = 0.0;  // worst constraint or bound violation
    double dual_infeasibility = 0.0;    // worst sign violation of duals / reduced costs
    double primal_objective = 0.0;
    double dual_objective = 0.0;

    double gap() const;
    bool satisfied(const Tolerances& tol) const;
};

/// Certificate check of an optimal solution against its problem.
KktReport check_kkt(const LpProblem& problem, const LpSolution& solution);

}  // namespace dea::lp
