#pragma once

// Test-only brute-force references. Nothing here touches the simplex code or
// Eigen, so agreement with the solver is an independent check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dea/lp.hpp"

namespace dea::testkit {

using Matrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_square(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < 1e-10) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline double determinant(Matrix a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

inline void for_each_subset(std::size_t universe, std::size_t size,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick(size);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == size) {
            visit(pick);
            return;
        }
        for (std::size_t i = start; i + (size - depth) <= universe; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

struct OracleResult {
    lp::Status status = lp::Status::infeasible;
    double value = 0.0;
    std::vector<double> point;
};

/// Vertex and extreme-ray enumeration for problems whose variables are all >= 0
/// with no upper bounds. Suitable for n <= 6 and a handful of rows.
inline OracleResult enumerate_vertices(const lp::LpProblem& p, double tol = 1e-9) {
    const std::size_t n = p.num_variables();
    // Hyperplanes: every constraint row, then x_j = 0.
    Matrix planes;
    std::vector<double> offsets;
    for (const auto& c : p.constraints) {
        planes.push_back(c.coefficients);
        offsets.push_back(c.rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        planes.push_back(e);
        offsets.push_back(0.0);
    }
    auto satisfies = [&](const std::vector<double>& x, bool homogeneous) {
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] < -tol) return false;
        }
        for (const auto& c : p.constraints) {
            double act = 0.0;
            for (std::size_t j = 0; j < n; ++j) act += c.coefficients[j] * x[j];
            const double rhs = homogeneous ? 0.0 : c.rhs;
            const double scale = tol * std::max(1.0, std::abs(rhs));
            if (c.relation == lp::Relation::less_equal && act > rhs + scale) return false;
            if (c.relation == lp::Relation::greater_equal && act < rhs - scale) return false;
            if (c.relation == lp::Relation::equal && std::abs(act - rhs) > scale) return false;
        }
        return true;
    };
    const double s = p.sense == lp::Sense::maximize ? 1.0 : -1.0;
    auto value_of = [&](const std::vector<double>& x) {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += p.objective[j] * x[j];
        return v;
    };

    OracleResult result;
    bool feasible = false;
    for_each_subset(planes.size(), n, [&](const std::vector<std::size_t>& pick) {
        Matrix a;
        std::vector<double> b;
        for (auto k : pick) {
            a.push_back(planes[k]);
            b.push_back(offsets[k]);
        }
        auto x = solve_square(a, b);
        if (!x || !satisfies(*x, false)) return;
        const double v = value_of(*x);
        if (!feasible || s * v > s * result.value) {
            result.value = v;
            result.point = *x;
        }
        feasible = true;
    });
    if (!feasible) return result;

    // Extreme rays of the recession cone: n-1 independent tight homogeneous planes.
    bool unbounded = false;
    for_each_subset(planes.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
        if (unbounded) return;
        std::vector<double> d(n);
        for (std::size_t k = 0; k < n; ++k) {
            Matrix minor;
            for (auto r : pick) {
                std::vector<double> row;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != k) row.push_back(planes[r][j]);
                }
                minor.push_back(row);
            }
            d[k] = ((k % 2) ? -1.0 : 1.0) * (minor.empty() ? 1.0 : determinant(minor));
        }
        double norm = 0.0;
        for (double v : d) norm = std::max(norm, std::abs(v));
        if (norm < 1e-9) return;
        for (double& v : d) v /= norm;
        for (double dir : {1.0, -1.0}) {
            std::vector<double> ray(n);
            for (std::size_t j = 0; j < n; ++j) ray[j] = dir * d[j];
            if (satisfies(ray, true) && s * value_of(ray) > tol) unbounded = true;
        }
    });
    result.status = unbounded ? lp::Status::unbounded : lp::Status::optimal;
    return result;
}

/// Single-input single-output CRS score: (y_j/x_j) / max_k (y_k/x_k).
inline std::vector<double> ratio_scores(const std::vector<double>& x, const std::vector<double>& y) {
    double best = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) best = std::max(best, y[k] / x[k]);
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (y[j] / x[j]) / best;
    return out;
}

}  // namespace dea::testkit
