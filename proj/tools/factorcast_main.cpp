// factorcast: factor-model forecasting pipeline for monthly macro panels.
//
// Subcommands:
//   run    full pipeline from a TOML config
//   adf    unit-root test table for the columns of a CSV
//   synth  synthetic dataset + ready-to-run config
//   eval   forecast-accuracy metrics for externally produced forecasts

#include "fcast/adf.hpp"
#include "fcast/csv.hpp"
#include "fcast/errors.hpp"
#include "fcast/evaluation.hpp"
#include "fcast/pipeline.hpp"
#include "fcast/report.hpp"
#include "fcast/synthetic.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

std::string parent_dir(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path().string();
    return parent.empty() ? "." : parent;
}

int cmd_run(const std::string& config_path) {
    const fcast::ConfigNode root = fcast::load_config(config_path);
    const fcast::PipelineConfig cfg =
        fcast::parse_pipeline_config(root, parent_dir(config_path));
    const fcast::RunReport report = fcast::run_pipeline(cfg);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "wrote " << report.files.size() << " artifacts to " << cfg.output_dir
              << " (see manifest.json)\n";
    return 0;
}

int cmd_adf(const std::string& csv_path, const std::string& spec_name, double level) {
    const fcast::AdfSpec spec = fcast::adf_spec_from_string(spec_name);
    auto columns = fcast::read_csv_columns(csv_path);
    std::printf("%-24s %-6s %12s %4s %12s %10s %s\n", "variable", "type", "optimal_aic",
                "k", "statistic", "p_value", "reject");
    for (auto& [name, column] : columns) {
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<double> values;
        values.reserve(column.size());
        for (const auto& [date, v] : column) values.push_back(v);
        const fcast::AdfResult r = fcast::adf_test(values, spec);
        std::printf("%-24s %-6s %12.4f %4d %12.4f %10.4g %s\n", name.c_str(),
                    spec_name.c_str(), r.aic_opt, r.k_opt, r.statistic, r.p_value,
                    r.p_value < level ? "yes" : "no");
    }
    return 0;
}

int cmd_synth(std::uint64_t seed, int months, int factors, int variables,
              const std::string& out_dir) {
    fcast::SyntheticSpec spec;
    spec.months = months;
    spec.n_factors = factors;
    spec.n_variables = variables;
    spec.target_factor_loadings.assign(static_cast<std::size_t>(factors), 0.5);
    if (!spec.target_factor_loadings.empty()) spec.target_factor_loadings[0] = 0.8;
    const fcast::SyntheticData data = fcast::generate_synthetic(seed, spec);
    const std::string config = fcast::write_synthetic(data, spec, seed, out_dir);
    std::cout << "wrote synthetic dataset to " << out_dir << "\nrun it with: factorcast run "
              << config << "\n";
    return 0;
}

int cmd_eval(const std::string& actual_path, const std::string& forecast_path, int k,
             const std::string& benchmark) {
    auto actual_cols = fcast::read_csv_columns(actual_path);
    if (actual_cols.size() != 1) {
        throw fcast::DataError("--actual file must contain exactly one series column");
    }
    auto& actual_col = actual_cols.begin()->second;
    std::sort(actual_col.begin(), actual_col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto forecast_cols = fcast::read_csv_columns(forecast_path);
    const auto values_on = [&](fcast::RawColumn col) {
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<double> actual_v, forecast_v;
        for (const auto& [date, value] : col) {
            for (const auto& [adate, avalue] : actual_col) {
                if (adate == date) {
                    actual_v.push_back(avalue);
                    forecast_v.push_back(value);
                    break;
                }
            }
        }
        return std::pair{actual_v, forecast_v};
    };

    const bool have_benchmark = forecast_cols.count(benchmark) != 0;
    std::vector<double> bench_errors;
    double bench_rmse = 0.0, bench_u = 0.0;
    if (have_benchmark) {
        const auto [a, f] = values_on(forecast_cols.at(benchmark));
        bench_rmse = fcast::rmse(a, f);
        bench_u = fcast::u_theil(a, f);
        for (std::size_t i = 0; i < a.size(); ++i) bench_errors.push_back(a[i] - f[i]);
    }

    std::printf("%-16s %10s %10s %10s %10s %12s %10s %4s\n", "model", "rmse", "u_theil",
                "rrmse", "ru", "dm_stat", "dm_p", "k");
    for (const auto& [name, col] : forecast_cols) {
        const auto [a, f] = values_on(col);
        if (a.empty()) throw fcast::DataError("model '" + name + "': no overlapping dates");
        const double r = fcast::rmse(a, f);
        const double u = fcast::u_theil(a, f);
        if (have_benchmark && name != benchmark) {
            std::vector<double> errors;
            for (std::size_t i = 0; i < a.size(); ++i) errors.push_back(a[i] - f[i]);
            const auto rel = fcast::relative_measures(r, u, bench_rmse, bench_u);
            const auto dm = fcast::dm_test(bench_errors, errors, k);
            std::printf("%-16s %10.4f %10.4f %10.4f %10.4f %12.4f %10.4g %4d\n",
                        name.c_str(), r, u, rel.rrmse, rel.ru, dm.statistic, dm.p_value,
                        dm.K);
        } else {
            std::printf("%-16s %10.4f %10.4f %10s %10s %12s %10s %4s\n", name.c_str(), r,
                        u, "-", "-", "-", "-", "-");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor-model time-series forecasting toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run the full pipeline from a config file");
    run->add_option("config", config_path, "TOML config path")->required();

    std::string adf_csv, adf_spec = "drift";
    double adf_level = 0.10;
    auto* adf = app.add_subcommand("adf", "ADF unit-root tests for CSV columns");
    adf->add_option("csv", adf_csv, "input CSV (wide or long)")->required();
    adf->add_option("--spec", adf_spec, "drift|trend")->capture_default_str();
    adf->add_option("--level", adf_level, "rejection level")->capture_default_str();

    std::uint64_t seed = 1;
    int months = 84, factors = 2, variables = 9;
    std::string out_dir = "synthetic";
    auto* synth = app.add_subcommand("synth", "generate a synthetic dataset");
    synth->add_option("--seed", seed, "master seed")->capture_default_str();
    synth->add_option("--months", months, "monthly sample length")->capture_default_str();
    synth->add_option("--factors", factors, "latent factor count")->capture_default_str();
    synth->add_option("--variables", variables, "panel variable count")
        ->capture_default_str();
    synth->add_option("--out", out_dir, "output directory")->capture_default_str();

    std::string actual_path, forecast_path, benchmark = "AR";
    int dm_k = 0;
    auto* eval = app.add_subcommand("eval", "score forecasts against actuals");
    eval->add_option("--actual", actual_path, "CSV with the actual series")->required();
    eval->add_option("--forecasts", forecast_path, "wide CSV, one column per model")
        ->required();
    eval->add_option("--k", dm_k, "DM lag truncation (0 = cubic-root rule)")
        ->capture_default_str();
    eval->add_option("--benchmark", benchmark, "benchmark column for ratios and DM")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (adf->parsed()) return cmd_adf(adf_csv, adf_spec, adf_level);
        if (synth->parsed()) return cmd_synth(seed, months, factors, variables, out_dir);
        if (eval->parsed()) return cmd_eval(actual_path, forecast_path, dm_k, benchmark);
    } catch (const fcast::Error& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":")" << e.what() << "\"}\n";
        return 2;
    }
    return 0;
}
