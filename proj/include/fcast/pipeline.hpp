#pragma once

#include "fcast/adf.hpp"
#include "fcast/config.hpp"
#include "fcast/evaluation.hpp"
#include "fcast/factor_model.hpp"
#include "fcast/forecast.hpp"
#include "fcast/panel.hpp"
#include "fcast/report.hpp"
#include "fcast/var_model.hpp"

#include <string>
#include <vector>

namespace fcast {

struct VariableConfig {
    std::string name;
    std::string file;
    std::string column;  // defaults to name
    Frequency frequency = Frequency::monthly;
    std::vector<std::string> transforms;  // "log", "diff", applied in order
    AdfSpec adf_spec = AdfSpec::drift;
    bool in_panel = true;  // forced false for the target
};

struct WindowConfig {
    std::string name;
    Date start;
    Date end;
    int dm_k = 0;  // 0 = cubic-root rule
};

struct PipelineConfig {
    std::string output_dir;
    std::vector<VariableConfig> variables;
    std::string target;
    int factors = 2;
    double adf_level = 0.10;
    double sig_level = 0.10;
    int favar_lags = 1;
    int irf_horizon = 12;
    std::vector<std::string> models;  // "AR", "<k>FM", "FAVAR<k>"
    std::vector<WindowConfig> windows;
    bool forecast_stage = true;
    bool expanding = false;
    bool full_sample_scores = false;  // default: loadings frozen on training data
};

/// Reads the [run]/[adf]/[target]/[variables.*]/[windows.*] tree; relative
/// paths resolve against base_dir. Throws ConfigError with key context.
[[nodiscard]] PipelineConfig parse_pipeline_config(const ConfigNode& root,
                                                   const std::string& base_dir);

struct AdfScreenRow {
    std::string variable;
    AdfSpec spec = AdfSpec::drift;
    AdfResult result;
    bool differenced = false;         // decision taken after this test
    bool still_nonstationary = false; // set on difference rows that fail too
};

struct EvaluationRow {
    std::string period;
    std::string model;
    double rmse = 0.0;
    double u = 0.0;
    double rrmse = 1.0;
    double ru = 1.0;
    DmResult dm;  // against the same-scheme AR benchmark
};

struct ForecastPath {
    std::string period;
    std::string scheme;  // "static" or "dynamic"
    std::string model;
    std::vector<Date> dates;
    std::vector<double> actual;
    std::vector<double> forecast;
};

struct RunReport {
    // Stationarity screen
    std::vector<AdfScreenRow> adf_levels;
    std::vector<AdfScreenRow> adf_differences;

    // Factor analysis on the full standardized panel
    Panel panel;  // standardized
    std::vector<double> target_values;  // standardized
    std::string target_label;
    double target_scale_mean = 0.0;  // full-sample scaling of the target
    double target_scale_sd = 1.0;
    double kmo_value = 0.0;
    BartlettResult bartlett;
    std::vector<ScreeRow> scree;
    FactorDecomposition decomposition;
    FactorDiagnostics diag;
    OlsFit factor_regression;

    // FAVAR block
    std::vector<GrangerResult> granger;
    IrfResult irf_generalized;
    IrfResult irf_orthogonalized;

    // Forecast evaluation
    std::vector<EvaluationRow> eval_static;
    std::vector<EvaluationRow> eval_dynamic;
    std::vector<ForecastPath> paths;

    std::vector<std::string> warnings;
    std::vector<Artifact> files;
};

/// Runs the full pipeline: harmonize/transform -> ADF screen -> standardize
/// -> adequacy tests -> PCA + diagnostics -> static factor regression ->
/// FAVAR (Granger, IRF) -> per-window forecasts and evaluation -> artifact
/// emission. Deterministic given config and data.
RunReport run_pipeline(const PipelineConfig& cfg);

}  // namespace fcast
