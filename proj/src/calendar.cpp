#include "fcast/calendar.hpp"

#include "fcast/errors.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace fcast {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[static_cast<std::size_t>(month - 1)];
}

int month_index(const Date& d) { return d.year * 12 + (d.month - 1); }

Date end_of_month(const Date& d) {
    return Date{d.year, d.month, days_in_month(d.year, d.month)};
}

Date month_end_from_index(int index) {
    int year = index / 12;
    int month = index % 12;
    if (month < 0) {
        month += 12;
        year -= 1;
    }
    return end_of_month(Date{year, month + 1, 1});
}

Date quarter_end(const Date& d) {
    const int quarter = (d.month - 1) / 3;
    return end_of_month(Date{d.year, quarter * 3 + 3, 1});
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw DataError("invalid " + std::string(what) + " in date: '" +
                        std::string(text) + "'");
    }
    return value;
}

}  // namespace

Date parse_date(std::string_view text) {
    const auto dash1 = text.find('-');
    if (dash1 == std::string_view::npos || dash1 == 0) {
        throw DataError("malformed date '" + std::string(text) + "'");
    }
    const auto dash2 = text.find('-', dash1 + 1);

    Date d;
    d.year = parse_int(text.substr(0, dash1), "year");
    if (dash2 == std::string_view::npos) {
        d.month = parse_int(text.substr(dash1 + 1), "month");
        if (d.month < 1 || d.month > 12) {
            throw DataError("month out of range in date '" + std::string(text) + "'");
        }
        return end_of_month(d);
    }
    d.month = parse_int(text.substr(dash1 + 1, dash2 - dash1 - 1), "month");
    d.day = parse_int(text.substr(dash2 + 1), "day");
    if (d.month < 1 || d.month > 12 || d.day < 1 ||
        d.day > days_in_month(d.year, d.month)) {
        throw DataError("date components out of range in '" + std::string(text) + "'");
    }
    return d;
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace fcast
