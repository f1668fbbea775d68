#include <algorithm>
#include <cmath>

#include "dea/error.hpp"
#include "dea/report.hpp"

namespace dea::report {

namespace {

// Smaller key is better.
double rank_key(const ScoreTable& table, double score) { return table.orientation == Orientation::input ? -score : score; }

struct Group {
    std::size_t begin;
    std::size_t end;
};

std::vector<Group> tie_groups(const ScoreTable& table, const std::vector<RankedDmu>& sorted, double eps) {
    std::vector<Group> groups;
    for (std::size_t i = 0; i < sorted.size();) {
        const double head = rank_key(table, sorted[i].score);
        std::size_t k = i + 1;
        while (k < sorted.size() && rank_key(table, sorted[k].score) - head <= eps) ++k;
        groups.push_back({i, k});
        i = k;
    }
    return groups;
}

}  // namespace

std::vector<RankedDmu> rank_dmus(const ScoreTable& table, double tie_eps) {
    std::vector<RankedDmu> out;
    for (const auto& e : table.entries) out.push_back({e.radial.dmu_id, e.radial.score, 0});
    std::sort(out.begin(), out.end(), [&](const RankedDmu& a, const RankedDmu& b) {
        const double ka = rank_key(table, a.score);
        const double kb = rank_key(table, b.score);
        if (ka != kb) return ka < kb;
        return a.dmu_id < b.dmu_id;
    });
    for (const auto& g : tie_groups(table, out, tie_eps)) {
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(g.begin), out.begin() + static_cast<std::ptrdiff_t>(g.end),
                  [](const RankedDmu& a, const RankedDmu& b) { return a.dmu_id < b.dmu_id; });
        for (std::size_t i = g.begin; i < g.end; ++i) out[i].rank = g.begin + 1;
    }
    return out;
}

std::vector<RankedDmu> tiebreak_rank(const ScoreTable& table, const Dataset& dataset, std::string_view metric_id,
                                     Direction direction, double tie_eps) {
    const std::size_t metric = dataset.require_metric(metric_id);
    auto out = rank_dmus(table, tie_eps);
    auto value_of = [&](const RankedDmu& r) {
        const double v = dataset.dmus[dataset.require_dmu(r.dmu_id)].values[metric];
        return direction == Direction::smaller_better ? v : -v;
    };
    for (const auto& g : tie_groups(table, out, tie_eps)) {
        if (g.end - g.begin < 2 || std::abs(out[g.begin].score - 1.0) > tie_eps) continue;
        const auto first = out.begin() + static_cast<std::ptrdiff_t>(g.begin);
        const auto last = out.begin() + static_cast<std::ptrdiff_t>(g.end);
        std::stable_sort(first, last, [&](const RankedDmu& a, const RankedDmu& b) { return value_of(a) < value_of(b); });
        for (std::size_t i = g.begin; i < g.end; ++i) {
            const bool same_as_prev = i > g.begin && value_of(out[i]) == value_of(out[i - 1]);
            out[i].rank = same_as_prev ? out[i - 1].rank : i + 1;
        }
    }
    return out;
}

}  // namespace dea::report
