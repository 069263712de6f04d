#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace fcast {

/// Calendar date (proleptic Gregorian). Month and day are 1-based.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

[[nodiscard]] bool is_leap_year(int year);
[[nodiscard]] int days_in_month(int year, int month);

/// Serial month number, monotone over the calendar: year*12 + (month-1).
[[nodiscard]] int month_index(const Date& d);

/// Last calendar day of the month containing `d`.
[[nodiscard]] Date end_of_month(const Date& d);

/// Month-end date for a serial month number.
[[nodiscard]] Date month_end_from_index(int index);

/// Month-end date of the closing month of the quarter containing `d`
/// (Mar/Jun/Sep/Dec).
[[nodiscard]] Date quarter_end(const Date& d);

/// Parses "YYYY-MM-DD" or "YYYY-MM" (resolved to the month end).
/// Throws DataError on malformed input or out-of-range components.
[[nodiscard]] Date parse_date(std::string_view text);

/// ISO-8601 "YYYY-MM-DD".
[[nodiscard]] std::string to_string(const Date& d);

}  // namespace fcast
