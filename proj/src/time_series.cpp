#include "fcast/time_series.hpp"

#include "fcast/errors.hpp"
#include "fcast/spline.hpp"

#include <cmath>

namespace fcast {

std::string to_string(Frequency f) {
    switch (f) {
        case Frequency::daily: return "daily";
        case Frequency::monthly: return "monthly";
        case Frequency::quarterly: return "quarterly";
    }
    return "unknown";
}

Frequency frequency_from_string(const std::string& text) {
    if (text == "daily") return Frequency::daily;
    if (text == "monthly") return Frequency::monthly;
    if (text == "quarterly") return Frequency::quarterly;
    throw ConfigError("unknown frequency '" + text + "'");
}

void validate(const TimeSeries& s) {
    if (s.dates.size() != s.values.size()) {
        throw DataError("series '" + s.name + "': dates and values lengths differ");
    }
    for (std::size_t i = 1; i < s.dates.size(); ++i) {
        if (!(s.dates[i - 1] < s.dates[i])) {
            throw DataError("series '" + s.name + "': dates not strictly increasing at " +
                            to_string(s.dates[i]));
        }
    }
    if (s.frequency == Frequency::monthly) {
        for (std::size_t i = 0; i < s.dates.size(); ++i) {
            if (s.dates[i] != end_of_month(s.dates[i])) {
                throw DataError("series '" + s.name + "': monthly point not at month end: " +
                                to_string(s.dates[i]));
            }
            if (i > 0 && month_index(s.dates[i]) == month_index(s.dates[i - 1])) {
                throw DataError("series '" + s.name + "': duplicate month " +
                                to_string(s.dates[i]));
            }
        }
    } else if (s.frequency == Frequency::quarterly) {
        for (std::size_t i = 1; i < s.dates.size(); ++i) {
            if (month_index(s.dates[i]) - month_index(s.dates[i - 1]) != 3) {
                throw DataError("series '" + s.name +
                                "': quarterly points must be 3 months apart near " +
                                to_string(s.dates[i]));
            }
        }
    }
}

TimeSeries log_transform(const TimeSeries& s) {
    validate(s);
    TimeSeries out = s;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (!(s.values[i] > 0.0)) {
            throw NonPositiveValueError("series '" + s.name + "': non-positive value at " +
                                        to_string(s.dates[i]));
        }
        out.values[i] = std::log(s.values[i]);
    }
    return out;
}

TimeSeries diff(const TimeSeries& s) {
    validate(s);
    if (s.size() < 2) throw TooShortError("series '" + s.name + "': diff needs length >= 2");
    TimeSeries out;
    out.name = s.name;
    out.frequency = s.frequency;
    out.dates.assign(s.dates.begin() + 1, s.dates.end());
    out.values.resize(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
        out.values[i - 1] = s.values[i] - s.values[i - 1];
    }
    return out;
}

TimeSeries monthly_average(const TimeSeries& s) {
    validate(s);
    if (s.frequency != Frequency::daily) {
        throw BadSpecError("monthly_average expects a daily series, got " +
                           to_string(s.frequency));
    }
    TimeSeries out;
    out.name = s.name;
    out.frequency = Frequency::monthly;

    std::size_t i = 0;
    while (i < s.size()) {
        const int month = month_index(s.dates[i]);
        double sum = 0.0;
        std::size_t count = 0;
        while (i < s.size() && month_index(s.dates[i]) == month) {
            sum += s.values[i];
            ++count;
            ++i;
        }
        out.dates.push_back(month_end_from_index(month));
        out.values.push_back(sum / static_cast<double>(count));
    }
    return out;
}

TimeSeries spline_interpolate(const TimeSeries& s) {
    validate(s);
    if (s.frequency != Frequency::quarterly) {
        throw BadSpecError("spline_interpolate expects a quarterly series, got " +
                           to_string(s.frequency));
    }
    if (s.size() < 4) {
        throw TooFewKnotsError("series '" + s.name +
                               "': spline interpolation needs at least 4 quarterly points");
    }

    // Knots sit at the closing month of each quarter, on the month-index axis.
    std::vector<double> x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        x[i] = static_cast<double>(month_index(quarter_end(s.dates[i])));
    }
    NaturalCubicSpline spline(x, s.values);

    TimeSeries out;
    out.name = s.name;
    out.frequency = Frequency::monthly;
    const int first = static_cast<int>(x.front());
    const int last = static_cast<int>(x.back());
    out.dates.reserve(static_cast<std::size_t>(last - first + 1));
    for (int m = first; m <= last; ++m) {
        out.dates.push_back(month_end_from_index(m));
        out.values.push_back(spline(static_cast<double>(m)));
    }
    return out;
}

}  // namespace fcast
