#pragma once

#include <random>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/lp.hpp"

namespace dea::testkit {

/// Small dense LP with integer data in [-9, 9], all variables >= 0.
inline lp::LpProblem random_lp(std::mt19937_64& rng, std::size_t max_vars = 6, std::size_t max_rows = 6) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<std::size_t> nvars(1, max_vars);
    std::uniform_int_distribution<std::size_t> nrows(1, max_rows);
    std::uniform_int_distribution<int> rel(0, 3);
    lp::LpProblem p;
    p.sense = rel(rng) % 2 ? lp::Sense::maximize : lp::Sense::minimize;
    const std::size_t n = nvars(rng);
    const std::size_t m = nrows(rng);
    for (std::size_t j = 0; j < n; ++j) p.objective.push_back(coef(rng));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(coef(rng));
        const int r = rel(rng);
        const auto relation = r <= 1 ? lp::Relation::less_equal
                              : r == 2 ? lp::Relation::greater_equal
                                       : lp::Relation::equal;
        p.add_constraint(std::move(row), relation, coef(rng));
    }
    return p;
}

/// Random dataset with metrics in0.., out0.. and values in (0, 100].
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t dmus, std::size_t inputs, std::size_t outputs) {
    std::uniform_real_distribution<double> value(0.0, 100.0);
    Dataset d;
    for (std::size_t i = 0; i < inputs; ++i) d.metrics.push_back({"in" + std::to_string(i), "", "", MetricHint::input_like});
    for (std::size_t r = 0; r < outputs; ++r) d.metrics.push_back({"out" + std::to_string(r), "", "", MetricHint::output_like});
    for (std::size_t j = 0; j < dmus; ++j) {
        DmuRecord rec{"d" + std::to_string(j), "", {}};
        for (std::size_t k = 0; k < inputs + outputs; ++k) rec.values.push_back(100.0 - value(rng));  // (0, 100]
        d.dmus.push_back(std::move(rec));
    }
    return d;
}

inline Scenario random_scenario(std::size_t inputs, std::size_t outputs) {
    Scenario s;
    s.id = "random";
    for (std::size_t i = 0; i < inputs; ++i) s.inputs.push_back("in" + std::to_string(i));
    for (std::size_t r = 0; r < outputs; ++r) s.outputs.push_back("out" + std::to_string(r));
    return s;
}

}  // namespace dea::testkit
