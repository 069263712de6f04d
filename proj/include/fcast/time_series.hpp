#pragma once

#include "fcast/calendar.hpp"

#include <string>
#include <vector>

namespace fcast {

enum class Frequency { daily, monthly, quarterly };

[[nodiscard]] std::string to_string(Frequency f);
[[nodiscard]] Frequency frequency_from_string(const std::string& text);

/// A dated, frequency-tagged sequence of observations, the atom of ingestion
/// and transformation.
///
/// Invariants (checked by validate()):
///  - dates strictly increasing, no duplicates;
///  - values.size() == dates.size();
///  - monthly points fall on distinct months and are stamped at month end;
///  - quarterly points are exactly 3 months apart.
struct TimeSeries {
    std::string name;
    Frequency frequency = Frequency::monthly;
    std::vector<Date> dates;
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

/// Throws DataError when an invariant is violated.
void validate(const TimeSeries& s);

/// Elementwise natural log. Throws NonPositiveValueError naming the first
/// offending date.
[[nodiscard]] TimeSeries log_transform(const TimeSeries& s);

/// First differences; drops the first timestamp. Throws TooShortError for
/// length < 2.
[[nodiscard]] TimeSeries diff(const TimeSeries& s);

/// Collapses a daily series to monthly by averaging the observations present
/// in each calendar month; output stamped at month ends. Months with no
/// observations are simply absent.
[[nodiscard]] TimeSeries monthly_average(const TimeSeries& s);

/// Fits a natural cubic spline through quarterly knots (stamped at the
/// closing month of each quarter) and evaluates it at every month between the
/// first and last knot inclusive. Requires at least 4 knots.
[[nodiscard]] TimeSeries spline_interpolate(const TimeSeries& s);

}  // namespace fcast
