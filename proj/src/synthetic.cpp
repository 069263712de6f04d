#include "fcast/synthetic.hpp"

#include "fcast/errors.hpp"
#include "fcast/rng.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fcast {

namespace {

constexpr int kBurnIn = 60;

std::string two_digits(int v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", v);
    return buf;
}

std::string variable_name(int j) { return "x" + two_digits(j + 1); }

}  // namespace

SyntheticData generate_synthetic(std::uint64_t seed, const SyntheticSpec& spec) {
    if (spec.months < 48) throw BadSpecError("generate_synthetic: months must be >= 48");
    if (spec.n_factors < 1 || spec.n_variables < spec.n_factors + 2) {
        throw BadSpecError("generate_synthetic: need at least n_factors + 2 variables");
    }
    if (static_cast<int>(spec.target_factor_loadings.size()) != spec.n_factors) {
        throw BadSpecError("generate_synthetic: target loading per factor required");
    }
    if (!(std::fabs(spec.factor_ar) < 1.0) || !(std::fabs(spec.target_ar) < 1.0)) {
        throw BadSpecError("generate_synthetic: AR coefficients must be inside (-1,1)");
    }

    const int T = spec.months;
    const int r = spec.n_factors;
    const int N = spec.n_variables;
    const int total = T + kBurnIn;

    Rng factor_rng(derive_seed(seed, 1));
    Rng loading_rng(derive_seed(seed, 2));
    Rng idio_rng(derive_seed(seed, 3));
    Rng target_rng(derive_seed(seed, 4));
    Rng daily_rng(derive_seed(seed, 5));

    // Latent factors, unit stationary variance.
    const double innov_sd = std::sqrt(1.0 - spec.factor_ar * spec.factor_ar);
    Eigen::MatrixXd f_ext(total, r);
    for (int j = 0; j < r; ++j) {
        f_ext(0, j) = factor_rng.normal();
        for (int t = 1; t < total; ++t) {
            f_ext(t, j) = spec.factor_ar * f_ext(t - 1, j) + innov_sd * factor_rng.normal();
        }
    }

    // Loadings: each variable has a dominant factor (assigned cyclically)
    // plus weak cross-loadings.
    SyntheticData out;
    out.loadings.resize(N, r);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < r; ++j) {
            if (j == i % r) {
                out.loadings(i, j) = 0.7 + 0.3 * loading_rng.uniform();
            } else {
                out.loadings(i, j) = 0.4 * (loading_rng.uniform() - 0.5);
            }
        }
    }

    Eigen::MatrixXd panel_ext = f_ext * out.loadings.transpose();
    for (int t = 0; t < total; ++t) {
        for (int i = 0; i < N; ++i) {
            panel_ext(t, i) += spec.idio_sd * idio_rng.normal();
        }
    }

    Eigen::VectorXd target_ext(total);
    target_ext(0) = target_rng.normal();
    for (int t = 1; t < total; ++t) {
        double value = spec.target_ar * target_ext(t - 1);
        for (int j = 0; j < r; ++j) {
            value += spec.target_factor_loadings[static_cast<std::size_t>(j)] *
                     f_ext(t - 1, j);
        }
        target_ext(t) = value + spec.target_noise_sd * target_rng.normal();
    }

    out.factors = f_ext.bottomRows(T);
    out.panel = panel_ext.bottomRows(T);
    out.target = target_ext.tail(T);

    out.dates.reserve(static_cast<std::size_t>(T));
    const int first_month = spec.start_year * 12;  // January
    for (int t = 0; t < T; ++t) out.dates.push_back(month_end_from_index(first_month + t));

    // Encoded series: levels are 100 * exp(value / 4), so a ["log"] transform
    // chain recovers the clean values up to an affine map that standardization
    // absorbs. The damped exponent keeps quarterly levels far enough from
    // zero that spline interpolation cannot undershoot the log domain.
    const auto encode = [](double v) { return 100.0 * std::exp(0.25 * v); };
    for (int i = 0; i < N; ++i) {
        TimeSeries s;
        s.name = variable_name(i);
        if (i == 0) {
            s.frequency = Frequency::daily;
            for (int t = 0; t < T; ++t) {
                const Date me = out.dates[static_cast<std::size_t>(t)];
                for (int day = 1; day <= me.day; ++day) {
                    s.dates.push_back(Date{me.year, me.month, day});
                    s.values.push_back(
                        encode(out.panel(t, i) + 0.05 * daily_rng.normal()));
                }
            }
        } else if (i == N - 1) {
            s.frequency = Frequency::quarterly;
            for (int t = 0; t < T; ++t) {
                const Date me = out.dates[static_cast<std::size_t>(t)];
                if (me.month % 3 == 0) {
                    s.dates.push_back(me);
                    s.values.push_back(encode(out.panel(t, i)));
                }
            }
        } else {
            s.frequency = Frequency::monthly;
            for (int t = 0; t < T; ++t) {
                s.dates.push_back(out.dates[static_cast<std::size_t>(t)]);
                s.values.push_back(encode(out.panel(t, i)));
            }
        }
        validate(s);
        out.series.push_back(std::move(s));
    }

    out.target_index.name = "target_index";
    out.target_index.frequency = Frequency::monthly;
    double level = 100.0;
    // One extra leading month so that dlog yields exactly T rate values;
    // the 1/4 damping matches the panel encoding and standardizes away.
    out.target_index.dates.push_back(month_end_from_index(first_month - 1));
    out.target_index.values.push_back(level);
    for (int t = 0; t < T; ++t) {
        level *= std::exp(0.25 * out.target(t));
        out.target_index.dates.push_back(out.dates[static_cast<std::size_t>(t)]);
        out.target_index.values.push_back(level);
    }
    return out;
}

namespace {

void write_series_csv(const std::string& path, const std::vector<const TimeSeries*>& columns) {
    std::ofstream outfile(path);
    if (!outfile) throw DataError("cannot write '" + path + "'");
    outfile << "date,series,value\n";
    char buf[64];
    for (const auto* s : columns) {
        for (std::size_t i = 0; i < s->size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.12g", s->values[i]);
            outfile << to_string(s->dates[i]) << ',' << s->name << ',' << buf << '\n';
        }
    }
}

}  // namespace

std::string write_synthetic(const SyntheticData& data, const SyntheticSpec& spec,
                            std::uint64_t seed, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    std::vector<const TimeSeries*> monthly{&data.target_index};
    std::vector<const TimeSeries*> daily;
    std::vector<const TimeSeries*> quarterly;
    for (const auto& s : data.series) {
        if (s.frequency == Frequency::daily) daily.push_back(&s);
        else if (s.frequency == Frequency::quarterly) quarterly.push_back(&s);
        else monthly.push_back(&s);
    }
    write_series_csv(out_dir + "/monthly.csv", monthly);
    write_series_csv(out_dir + "/daily.csv", daily);
    write_series_csv(out_dir + "/quarterly.csv", quarterly);

    nlohmann::json truth;
    truth["seed"] = seed;
    truth["months"] = spec.months;
    truth["n_factors"] = spec.n_factors;
    truth["n_variables"] = spec.n_variables;
    truth["factor_ar"] = spec.factor_ar;
    truth["idio_sd"] = spec.idio_sd;
    truth["target_ar"] = spec.target_ar;
    truth["target_factor_loadings"] = spec.target_factor_loadings;
    truth["target_noise_sd"] = spec.target_noise_sd;
    for (int i = 0; i < data.loadings.rows(); ++i) {
        std::vector<double> row;
        for (int j = 0; j < data.loadings.cols(); ++j) row.push_back(data.loadings(i, j));
        truth["loadings"].push_back(row);
    }
    std::ofstream(out_dir + "/truth.json") << truth.dump(2) << '\n';

    // A ready-to-run replication config against the emitted files. Windows
    // mirror the three nested holdouts (12 / 8 / 4 months) at the sample end.
    const int last = month_index(data.dates.back());
    const auto year_month = [](int index) {
        const Date d = month_end_from_index(index);
        return std::to_string(d.year) + "-" + two_digits(d.month);
    };
    std::ostringstream cfg;
    cfg << "# Generated by 'factorcast synth' (seed " << seed << ")\n\n";
    cfg << "[run]\noutput_dir = \"report\"\nfactors = " << spec.n_factors << "\n";
    cfg << "models = [\"AR\", \"1FM\", \"2FM\", \"FAVAR1\", \"FAVAR2\"]\n\n";
    cfg << "[adf]\nlevel = 0.10\n\n";
    cfg << "[target]\nname = \"target_index\"\n\n";
    cfg << "[variables.target_index]\nfile = \"monthly.csv\"\nfrequency = \"monthly\"\n"
        << "transforms = [\"log\", \"diff\"]\nadf = \"drift\"\n\n";
    for (const auto& s : data.series) {
        cfg << "[variables." << s.name << "]\n";
        if (s.frequency == Frequency::daily) cfg << "file = \"daily.csv\"\n";
        else if (s.frequency == Frequency::quarterly) cfg << "file = \"quarterly.csv\"\n";
        else cfg << "file = \"monthly.csv\"\n";
        cfg << "frequency = \"" << to_string(s.frequency) << "\"\n";
        cfg << "transforms = [\"log\"]\nadf = \"drift\"\n\n";
    }
    cfg << "[windows.P1]\nstart = \"" << year_month(last - 11) << "\"\nend = \""
        << year_month(last) << "\"\ndm_k = 3\n\n";
    cfg << "[windows.P2]\nstart = \"" << year_month(last - 7) << "\"\nend = \""
        << year_month(last) << "\"\ndm_k = 3\n\n";
    cfg << "[windows.P3]\nstart = \"" << year_month(last - 3) << "\"\nend = \""
        << year_month(last) << "\"\ndm_k = 2\n";

    const std::string config_path = out_dir + "/config.toml";
    std::ofstream(config_path) << cfg.str();
    return config_path;
}

}  // namespace fcast
