#include "fcast/report.hpp"

#include "fcast/errors.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fcast {

std::string format_number(double v) {
    if (std::isnan(v)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ReportWriter::ReportWriter(std::string out_dir) : out_dir_(std::move(out_dir)) {
    std::filesystem::create_directories(out_dir_);
}

void ReportWriter::write_text(const std::string& name, const std::string& content) {
    const std::string path = out_dir_ + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write report file '" + path + "'");
    out << content;
    out.close();
    char hex[24];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(content)));
    artifacts_.push_back(Artifact{name, hex});
}

void ReportWriter::write_csv(const std::string& name,
                             const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << '\n';
    }
    write_text(name, out.str());
}

void ReportWriter::write_json(const std::string& name, const nlohmann::json& doc) {
    write_text(name, doc.dump(2) + "\n");
}

void ReportWriter::finalize(const nlohmann::json& run_info) {
    nlohmann::json manifest;
    manifest["run"] = run_info;
    manifest["files"] = nlohmann::json::array();
    for (const auto& a : artifacts_) {
        manifest["files"].push_back({{"name", a.name}, {"fnv1a64", a.hash}});
    }
    const std::string content = manifest.dump(2) + "\n";
    const std::string path = out_dir_ + "/manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
}

}  // namespace fcast
