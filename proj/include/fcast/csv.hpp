#pragma once

#include "fcast/calendar.hpp"
#include "fcast/time_series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fcast {

/// Raw dated observations for one named column.
using RawColumn = std::vector<std::pair<Date, double>>;

/// Parses a CSV file into named columns. Two layouts are accepted:
///  - wide:  header `date,<name>,<name>,...`, one row per date; empty cells
///           mean "no observation for that column on that date";
///  - long:  header `date,series,value`, one row per observation.
/// Dates are ISO-8601, values use `.` as decimal point, no thousands
/// separators. Throws DataError with file/line context on malformed input.
[[nodiscard]] std::map<std::string, RawColumn> read_csv_columns(const std::string& path);

/// Builds a TimeSeries from a raw column, sorting by date and tagging the
/// given frequency (monthly dates are re-stamped at month end).
[[nodiscard]] TimeSeries series_from_column(const std::string& name, Frequency freq,
                                            RawColumn column);

/// Splits one CSV line on commas (no quoting; the toolkit's formats never
/// need it).
[[nodiscard]] std::vector<std::string> split_csv_line(const std::string& line);

/// Strict double parser; throws DataError on anything but a full numeric
/// token.
[[nodiscard]] double parse_number(const std::string& token, const std::string& context);

}  // namespace fcast
