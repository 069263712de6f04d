#include "fcast/calendar.hpp"
#include "fcast/errors.hpp"

#include <doctest.h>

using namespace fcast;

TEST_CASE("leap years and month lengths") {
    CHECK(is_leap_year(2016));
    CHECK(is_leap_year(2000));
    CHECK_FALSE(is_leap_year(1900));
    CHECK_FALSE(is_leap_year(2019));
    CHECK(days_in_month(2016, 2) == 29);
    CHECK(days_in_month(2019, 2) == 28);
    CHECK(days_in_month(2019, 12) == 31);
    CHECK(days_in_month(2019, 4) == 30);
}

TEST_CASE("month index round trip") {
    for (int idx = 2013 * 12; idx < 2020 * 12; ++idx) {
        const Date d = month_end_from_index(idx);
        CHECK(month_index(d) == idx);
        CHECK(d == end_of_month(d));
    }
}

TEST_CASE("date ordering and quarter ends") {
    CHECK(Date{2019, 1, 31} < Date{2019, 2, 1});
    CHECK(Date{2018, 12, 31} < Date{2019, 1, 1});
    CHECK(quarter_end(Date{2019, 1, 15}) == Date{2019, 3, 31});
    CHECK(quarter_end(Date{2019, 6, 30}) == Date{2019, 6, 30});
    CHECK(quarter_end(Date{2019, 10, 1}) == Date{2019, 12, 31});
}

TEST_CASE("parsing") {
    CHECK(parse_date("2019-05-07") == Date{2019, 5, 7});
    CHECK(parse_date("2019-05") == Date{2019, 5, 31});
    CHECK(to_string(Date{2019, 5, 7}) == "2019-05-07");
    CHECK_THROWS_AS((void)parse_date("2019"), DataError);
    CHECK_THROWS_AS((void)parse_date("2019-13-01"), DataError);
    CHECK_THROWS_AS((void)parse_date("2019-02-30"), DataError);
    CHECK_THROWS_AS((void)parse_date("19-xx-01"), DataError);
}
