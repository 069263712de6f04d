#pragma once

#include "fcast/time_series.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace fcast {

/// Data-generating process for self-contained acceptance runs: r latent
/// AR(1) factors with unit stationary variance, a loading matrix with one
/// dominant factor per variable, idiosyncratic noise, and a target driven by
/// its own lag plus the lagged factors.
struct SyntheticSpec {
    int months = 84;
    int n_factors = 2;
    int n_variables = 9;
    double factor_ar = 0.7;
    double idio_sd = 0.6;
    double target_ar = 0.3;
    std::vector<double> target_factor_loadings = {0.8, 0.5};
    double target_noise_sd = 0.5;
    int start_year = 2013;  // monthly grid starts at January of this year
};

struct SyntheticData {
    // Ground truth on the monthly grid (T = spec.months).
    std::vector<Date> dates;
    Eigen::MatrixXd factors;   // T x r
    Eigen::MatrixXd panel;     // T x N, clean monthly predictor values
    Eigen::VectorXd target;    // T, the stationary target rate
    Eigen::MatrixXd loadings;  // N x r, true loading matrix

    // Encoded series as they would arrive from data files: exp-levels, the
    // first variable emitted daily, the last quarterly, the rest monthly,
    // and the target as a compounding index so that dlog recovers the rate.
    std::vector<TimeSeries> series;
    TimeSeries target_index;
};

/// Deterministic in (seed, spec). Throws BadSpecError on unusable specs
/// (months < 48, loadings/factor count mismatch, ...).
[[nodiscard]] SyntheticData generate_synthetic(std::uint64_t seed,
                                               const SyntheticSpec& spec);

/// Writes monthly.csv / daily.csv / quarterly.csv, a truth.json sidecar with
/// the generating parameters, and a ready-to-run config.toml into out_dir.
/// Returns the config path.
std::string write_synthetic(const SyntheticData& data, const SyntheticSpec& spec,
                            std::uint64_t seed, const std::string& out_dir);

}  // namespace fcast
