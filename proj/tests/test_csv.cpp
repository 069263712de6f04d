#include "fcast/csv.hpp"

#include "fcast/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace fcast;
namespace fs = std::filesystem;

namespace {

struct TempCsv {
    fs::path path;
    explicit TempCsv(const std::string& content) {
        path = fs::temp_directory_path() /
               ("fcast_csv_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
                ".csv");
        std::ofstream(path) << content;
    }
    ~TempCsv() { fs::remove(path); }
};

}  // namespace

TEST_CASE("wide format with empty cells") {
    TempCsv file(
        "date,cpi,rate\n"
        "2019-01-31,104.5,0.35\n"
        "2019-02-28,,0.37\n"
        "2019-03-31,106.1,\n");
    const auto columns = read_csv_columns(file.path.string());
    REQUIRE(columns.size() == 2);
    CHECK(columns.at("cpi").size() == 2);  // the empty cell is simply absent
    CHECK(columns.at("rate").size() == 2);
    CHECK(columns.at("cpi")[0].first == Date{2019, 1, 31});
    CHECK(columns.at("cpi")[1].second == doctest::Approx(106.1));
}

TEST_CASE("long format") {
    TempCsv file(
        "date,series,value\n"
        "2019-02-28,a,2\n"
        "2019-01-31,a,1\n"
        "2019-01-31,b,10\n");
    const auto columns = read_csv_columns(file.path.string());
    REQUIRE(columns.size() == 2);
    CHECK(columns.at("a").size() == 2);
    CHECK(columns.at("b").size() == 1);

    // series_from_column sorts by date and enforces the frequency invariants
    const TimeSeries s = series_from_column("a", Frequency::monthly, columns.at("a"));
    CHECK(s.values == std::vector<double>{1.0, 2.0});
    CHECK(s.dates.front() == Date{2019, 1, 31});
}

TEST_CASE("monthly series are re-stamped at month end") {
    RawColumn col{{Date{2019, 1, 3}, 5.0}, {Date{2019, 2, 14}, 6.0}};
    const TimeSeries s = series_from_column("x", Frequency::monthly, col);
    CHECK(s.dates[0] == Date{2019, 1, 31});
    CHECK(s.dates[1] == Date{2019, 2, 28});
}

TEST_CASE("malformed input is rejected with context") {
    CHECK_THROWS_AS((void)read_csv_columns("/nonexistent/file.csv"), DataError);

    TempCsv no_date_header("time,value\n2019-01-31,1\n");
    CHECK_THROWS_AS((void)read_csv_columns(no_date_header.path.string()), DataError);

    TempCsv bad_number(
        "date,x\n"
        "2019-01-31,not_a_number\n");
    try {
        (void)read_csv_columns(bad_number.path.string());
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);  // line context
    }

    TempCsv ragged(
        "date,x,y\n"
        "2019-01-31,1\n");
    CHECK_THROWS_AS((void)read_csv_columns(ragged.path.string()), DataError);

    CHECK_THROWS_AS((void)parse_number("1.2.3", "ctx"), DataError);
    CHECK(parse_number("-3.5e-2", "ctx") == doctest::Approx(-0.035));
}
