#include "fcast/panel.hpp"

#include "fcast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fcast {

std::vector<double> Panel::column(Eigen::Index j) const {
    std::vector<double> out(static_cast<std::size_t>(data.rows()));
    for (Eigen::Index t = 0; t < data.rows(); ++t) {
        out[static_cast<std::size_t>(t)] = data(t, j);
    }
    return out;
}

Panel align_panel(const std::vector<TimeSeries>& series) {
    if (series.empty()) throw EmptyInputError("align_panel: no series given");
    for (const auto& s : series) {
        validate(s);
        if (s.frequency != Frequency::monthly) {
            throw BadSpecError("align_panel: series '" + s.name + "' is not monthly");
        }
    }

    std::set<Date> common(series.front().dates.begin(), series.front().dates.end());
    for (std::size_t i = 1; i < series.size(); ++i) {
        std::set<Date> next;
        for (const auto& d : series[i].dates) {
            if (common.count(d) != 0) next.insert(d);
        }
        common.swap(next);
    }
    if (common.empty()) {
        throw EmptyIntersectionError("align_panel: series share no common dates");
    }

    Panel p;
    p.dates.assign(common.begin(), common.end());
    p.variable_names.reserve(series.size());
    p.data.resize(static_cast<Eigen::Index>(p.dates.size()),
                  static_cast<Eigen::Index>(series.size()));
    for (std::size_t j = 0; j < series.size(); ++j) {
        p.variable_names.push_back(series[j].name);
        std::size_t cursor = 0;
        for (std::size_t t = 0; t < p.dates.size(); ++t) {
            while (series[j].dates[cursor] != p.dates[t]) ++cursor;
            p.data(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) =
                series[j].values[cursor];
        }
    }
    return p;
}

Panel standardize(const Panel& p) {
    const Eigen::Index T = p.rows();
    if (T < 2) throw TooShortError("standardize: panel needs at least 2 rows");

    Panel out = p;
    out.scaling.resize(static_cast<std::size_t>(p.cols()));
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        const double mean = p.data.col(j).mean();
        const double ss = (p.data.col(j).array() - mean).square().sum();
        const double var = ss / static_cast<double>(T - 1);
        if (!(var > 0.0)) {
            throw ZeroVarianceError("standardize: column '" +
                                    p.variable_names[static_cast<std::size_t>(j)] +
                                    "' has zero variance");
        }
        const double sd = std::sqrt(var);
        out.data.col(j) = (p.data.col(j).array() - mean) / sd;
        out.scaling[static_cast<std::size_t>(j)] = ColumnScaling{mean, sd};
    }
    return out;
}

}  // namespace fcast
