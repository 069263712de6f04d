#pragma once

#include "fcast/time_series.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace fcast {

/// Per-column (mean, sd) recorded when a panel is standardized, so reports
/// can be mapped back to native units.
struct ColumnScaling {
    double mean = 0.0;
    double sd = 1.0;
};

/// A T x N aligned matrix of monthly predictors with variable names.
struct Panel {
    std::vector<std::string> variable_names;
    std::vector<Date> dates;
    Eigen::MatrixXd data;  // rows follow dates, columns follow variable_names
    std::vector<ColumnScaling> scaling;

    [[nodiscard]] Eigen::Index rows() const { return data.rows(); }
    [[nodiscard]] Eigen::Index cols() const { return data.cols(); }
    [[nodiscard]] std::vector<double> column(Eigen::Index j) const;
};

/// Intersects the date ranges of monthly series and stacks them columnwise in
/// the order given. Throws EmptyIntersectionError when no date is common.
[[nodiscard]] Panel align_panel(const std::vector<TimeSeries>& series);

/// Centers and scales every column to sample mean 0 and sample variance 1
/// (T-1 divisor); the original (mean, sd) pairs are stored in `scaling`.
/// Throws ZeroVarianceError naming the offending column.
[[nodiscard]] Panel standardize(const Panel& p);

}  // namespace fcast
