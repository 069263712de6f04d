#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fcast {

struct Artifact {
    std::string name;  // relative to the output directory
    std::string hash;  // fnv1a-64 of the file bytes, hex
};

/// Deterministic number formatting for CSV artifacts ("%.12g"; NaN -> "NA").
[[nodiscard]] std::string format_number(double v);

[[nodiscard]] std::uint64_t fnv1a64(const std::string& bytes);

/// Collects report files under one output directory and records a content
/// hash per file; finalize() writes manifest.json listing every artifact.
class ReportWriter {
public:
    explicit ReportWriter(std::string out_dir);

    void write_text(const std::string& name, const std::string& content);
    void write_csv(const std::string& name, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);
    void write_json(const std::string& name, const nlohmann::json& doc);
    void finalize(const nlohmann::json& run_info);

    [[nodiscard]] const std::vector<Artifact>& artifacts() const { return artifacts_; }
    [[nodiscard]] const std::string& out_dir() const { return out_dir_; }

private:
    std::string out_dir_;
    std::vector<Artifact> artifacts_;
};

}  // namespace fcast
