#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>

#include "dea/dataset.hpp"
#include "dea/error.hpp"

namespace dea::detail {

/// Scenario matrices with every metric row divided by its largest entry.
struct NormalizedData {
    Eigen::MatrixXd x;       // m x n
    Eigen::MatrixXd y;       // s x n
    Eigen::VectorXd xscale;  // original = normalized * scale
    Eigen::VectorXd yscale;

    Eigen::Index n() const { return x.cols(); }
    Eigen::Index m() const { return x.rows(); }
    Eigen::Index s() const { return y.rows(); }
};

inline Eigen::VectorXd row_scale(const Eigen::MatrixXd& a) {
    Eigen::VectorXd scale = a.rowwise().maxCoeff();
    for (Eigen::Index i = 0; i < scale.size(); ++i) {
        if (!(scale(i) > 0.0)) scale(i) = 1.0;
    }
    return scale;
}

inline NormalizedData normalize(const ScenarioData& data) {
    if (data.num_inputs() == 0 || data.num_outputs() == 0) {
        throw Error(ErrorCode::empty_scenario, "scenario needs at least one input and one output");
    }
    if (static_cast<std::size_t>(data.inputs.cols()) != data.num_dmus() ||
        static_cast<std::size_t>(data.outputs.cols()) != data.num_dmus()) {
        throw Error(ErrorCode::dimension_mismatch, "scenario matrices do not match the DMU list");
    }
    NormalizedData nd;
    nd.xscale = row_scale(data.inputs);
    nd.yscale = row_scale(data.outputs);
    nd.x = nd.xscale.cwiseInverse().asDiagonal() * data.inputs;
    nd.y = nd.yscale.cwiseInverse().asDiagonal() * data.outputs;
    return nd;
}

inline void require_column(const ScenarioData& data, std::size_t dmu) {
    if (dmu >= data.num_dmus()) {
        throw Error(ErrorCode::unknown_dmu, "DMU index " + std::to_string(dmu) + " out of range");
    }
}

inline std::size_t column_of(const ScenarioData& data, std::string_view dmu_id) {
    for (std::size_t j = 0; j < data.dmu_ids.size(); ++j) {
        if (data.dmu_ids[j] == dmu_id) return j;
    }
    throw Error(ErrorCode::unknown_dmu, "unknown DMU '" + std::string(dmu_id) + "'");
}

/// Anything but an optimum here means the solver misbehaved: lambda = e_o is always feasible.
inline void require_optimal(const lp::LpSolution& sol, const std::string& what) {
    if (!sol.optimal()) {
        throw Error(ErrorCode::unsolvable_lp, what + " LP reported " + lp::to_string(sol.status));
    }
}

}  // namespace dea::detail
