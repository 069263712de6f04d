#include "fcast/csv.hpp"

#include "fcast/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fcast {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || end != begin + token.size()) {
        throw DataError(context + ": not a number: '" + token + "'");
    }
    return value;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, RawColumn> read_csv_columns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open CSV file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty CSV file '" + path + "'");
    auto header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    if (header.size() < 2 || header[0] != "date") {
        throw DataError("CSV '" + path + "': header must start with 'date'");
    }

    const bool long_format =
        header.size() == 3 && header[1] == "series" && header[2] == "value";

    std::map<std::string, RawColumn> columns;
    if (!long_format) {
        for (std::size_t j = 1; j < header.size(); ++j) {
            if (header[j].empty()) {
                throw DataError("CSV '" + path + "': empty column name in header");
            }
            columns[header[j]];  // preserve even all-empty columns
        }
    }

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        const std::string context = path + ":" + std::to_string(line_no);
        if (fields.size() != header.size()) {
            throw DataError(context + ": expected " + std::to_string(header.size()) +
                            " fields, got " + std::to_string(fields.size()));
        }
        const Date date = parse_date(trim(fields[0]));
        if (long_format) {
            const std::string name = trim(fields[1]);
            if (name.empty()) throw DataError(context + ": empty series name");
            columns[name].emplace_back(date, parse_number(trim(fields[2]), context));
        } else {
            for (std::size_t j = 1; j < fields.size(); ++j) {
                const std::string token = trim(fields[j]);
                if (token.empty()) continue;
                columns[header[j]].emplace_back(date, parse_number(token, context));
            }
        }
    }
    return columns;
}

TimeSeries series_from_column(const std::string& name, Frequency freq, RawColumn column) {
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    TimeSeries s;
    s.name = name;
    s.frequency = freq;
    s.dates.reserve(column.size());
    s.values.reserve(column.size());
    for (auto& [date, value] : column) {
        s.dates.push_back(freq == Frequency::monthly ? end_of_month(date) : date);
        s.values.push_back(value);
    }
    validate(s);
    return s;
}

}  // namespace fcast
