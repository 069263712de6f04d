#include "fcast/pipeline.hpp"

#include "fcast/csv.hpp"
#include "fcast/errors.hpp"
#include "fcast/svg.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

namespace fcast {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string resolve_path(const std::string& base, const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    return base.empty() ? path : base + "/" + path;
}

}  // namespace

PipelineConfig parse_pipeline_config(const ConfigNode& root, const std::string& base_dir) {
    PipelineConfig cfg;
    const ConfigNode& run = root.child("run");
    cfg.output_dir = resolve_path(base_dir, run.get_string("output_dir"));
    cfg.factors = run.get_int_or("factors", 2);
    cfg.models = run.get_string_list_or("models");
    if (cfg.factors < 1) throw ConfigError("run.factors must be >= 1");

    if (root.has_child("adf")) {
        cfg.adf_level = root.child("adf").get_number_or("level", 0.10);
    }
    if (!(cfg.adf_level == 0.01 || cfg.adf_level == 0.05 || cfg.adf_level == 0.10)) {
        throw ConfigError("adf.level must be 0.01, 0.05 or 0.10");
    }
    if (root.has_child("diagnostics")) {
        cfg.sig_level = root.child("diagnostics").get_number_or("sig_level", 0.10);
    }
    if (root.has_child("favar")) {
        const ConfigNode& favar = root.child("favar");
        cfg.favar_lags = favar.get_int_or("lags", 1);
        cfg.irf_horizon = favar.get_int_or("irf_horizon", 12);
    }
    if (root.has_child("forecast")) {
        const ConfigNode& fc = root.child("forecast");
        cfg.forecast_stage = fc.get_bool_or("enabled", true);
        cfg.expanding = fc.get_bool_or("expanding", false);
        cfg.full_sample_scores = fc.get_bool_or("full_sample_scores", false);
    }

    cfg.target = root.child("target").get_string("name");

    if (!root.has_child("variables")) throw ConfigError("missing [variables.*] sections");
    for (const auto& [name, node] : root.child("variables").children) {
        VariableConfig v;
        v.name = name;
        v.file = resolve_path(base_dir, node.get_string("file"));
        v.column = node.get_string_or("column", name);
        v.frequency = frequency_from_string(node.get_string_or("frequency", "monthly"));
        v.transforms = node.get_string_list_or("transforms");
        for (const auto& t : v.transforms) {
            if (t != "log" && t != "diff") {
                throw ConfigError("variable '" + name + "': unknown transform '" + t + "'");
            }
        }
        v.adf_spec = adf_spec_from_string(node.get_string_or("adf", "drift"));
        v.in_panel = node.get_bool_or("panel", name != cfg.target);
        cfg.variables.push_back(std::move(v));
    }

    const bool target_known =
        std::any_of(cfg.variables.begin(), cfg.variables.end(),
                    [&](const VariableConfig& v) { return v.name == cfg.target; });
    if (!target_known) {
        throw ConfigError("target.name '" + cfg.target + "' has no [variables." +
                          cfg.target + "] section");
    }
    for (auto& v : cfg.variables) {
        if (v.name == cfg.target) v.in_panel = false;
    }

    if (root.has_child("windows")) {
        for (const auto& [name, node] : root.child("windows").children) {
            WindowConfig w;
            w.name = name;
            w.start = parse_date(node.get_string("start"));
            w.end = parse_date(node.get_string("end"));
            w.dm_k = node.get_int_or("dm_k", 0);
            if (!(w.start <= w.end)) {
                throw ConfigError("window '" + name + "': start is after end");
            }
            cfg.windows.push_back(std::move(w));
        }
    }
    return cfg;
}

namespace {

struct PreparedVariable {
    const VariableConfig* config = nullptr;
    TimeSeries series;   // post harmonization + transforms + screen decision
    std::string label;   // e.g. d(log(IPCGL))
};

TimeSeries harmonize(const VariableConfig& v, TimeSeries s) {
    switch (v.frequency) {
        case Frequency::daily: return monthly_average(s);
        case Frequency::quarterly: return spline_interpolate(s);
        case Frequency::monthly: return s;
    }
    return s;
}

TimeSeries apply_transforms(const VariableConfig& v, TimeSeries s, std::string& label) {
    for (const auto& t : v.transforms) {
        if (t == "log") {
            s = log_transform(s);
            label = "log(" + label + ")";
        } else {
            s = diff(s);
            label = "d(" + label + ")";
        }
    }
    return s;
}

struct ModelSpec {
    std::string name;
    bool dynamic = false;
    int r = 0;  // factors used; static AR has r = 0
};

int parse_factor_count(const std::string& digits, const std::string& token) {
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError("unknown model token '" + token + "'");
    }
    return std::stoi(digits);
}

ModelSpec parse_model_token(const std::string& token, int max_factors) {
    ModelSpec m;
    m.name = token;
    if (token == "AR") return m;
    if (token.size() > 2 && token.substr(token.size() - 2) == "FM") {
        m.r = parse_factor_count(token.substr(0, token.size() - 2), token);
    } else if (token.rfind("FAVAR", 0) == 0 && token.size() > 5) {
        m.dynamic = true;
        m.r = parse_factor_count(token.substr(5), token);
    } else {
        throw ConfigError("unknown model token '" + token + "'");
    }
    if (m.r < 1 || m.r > max_factors) {
        throw ConfigError("model '" + token + "': factor count out of range 1.." +
                          std::to_string(max_factors));
    }
    return m;
}

std::vector<double> eigen_to_vec(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

// ---------------------------------------------------------------------------
// Emission helpers
// ---------------------------------------------------------------------------

std::vector<std::string> adf_row(const AdfScreenRow& row) {
    return {row.variable,
            to_string(row.spec),
            format_number(row.result.aic_opt),
            std::to_string(row.result.k_opt),
            format_number(row.result.statistic),
            format_number(row.result.p_value),
            std::to_string(row.result.k_max),
            row.differenced ? "yes" : "no"};
}

nlohmann::json adf_json(const std::vector<AdfScreenRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"variable", r.variable},
                       {"type", to_string(r.spec)},
                       {"optimal_aic", r.result.aic_opt},
                       {"k", r.result.k_opt},
                       {"k_max", r.result.k_max},
                       {"statistic", r.result.statistic},
                       {"p_value", r.result.p_value},
                       {"differenced", r.differenced}});
    }
    return out;
}

std::vector<std::string> eval_row_csv(const EvaluationRow& e) {
    std::vector<std::string> row{e.period,
                                 e.model,
                                 format_number(e.rmse),
                                 format_number(e.u),
                                 format_number(e.rrmse),
                                 format_number(e.ru)};
    if (e.model == "AR") {
        row.insert(row.end(), {"", "", ""});
    } else {
        row.push_back(e.dm.inconclusive ? "NA" : format_number(e.dm.statistic));
        row.push_back(e.dm.inconclusive ? "NA" : format_number(e.dm.p_value));
        row.push_back(std::to_string(e.dm.K));
    }
    return row;
}

nlohmann::json eval_json(const std::vector<EvaluationRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : rows) {
        nlohmann::json j{{"period", e.period}, {"model", e.model},
                         {"rmse", e.rmse},     {"u_theil", e.u},
                         {"rrmse", e.rrmse},   {"ru", e.ru}};
        if (e.model != "AR" && !e.dm.inconclusive) {
            j["dm_statistic"] = e.dm.statistic;
            j["dm_p_value"] = e.dm.p_value;
            j["dm_k"] = e.dm.K;
        }
        out.push_back(j);
    }
    return out;
}

void emit_plots(ReportWriter& writer, const RunReport& report, int r) {
    // Scree plot with the Kaiser line.
    SvgPlot scree(420, 300, "Eigenvalues by component");
    std::vector<SvgPlot::Point> pts;
    for (const auto& row : report.scree) {
        pts.push_back({static_cast<double>(row.component), row.eigenvalue});
    }
    scree.polyline(pts, kPalette[0], 2.0);
    scree.scatter(pts, kPalette[0], 3.5);
    scree.hline(1.0, "#aa3333");
    writer.write_text("scree.svg", scree.render());

    // Factor map on the first two components with the unit circle.
    if (report.diag.corr_xf.cols() >= 2) {
        SvgPlot map(460, 460, "Factor map (components 1 and 2)");
        std::vector<SvgPlot::Point> circle;
        for (int i = 0; i <= 96; ++i) {
            const double a = 2.0 * std::numbers::pi * i / 96.0;
            circle.push_back({std::cos(a), std::sin(a)});
        }
        map.polyline(circle, "#bbbbbb", 1.0, true);
        for (Eigen::Index i = 0; i < report.diag.corr_xf.rows(); ++i) {
            const double x = report.diag.corr_xf(i, 0);
            const double y = report.diag.corr_xf(i, 1);
            map.scatter({{x, y}}, kPalette[1], 3.0);
            map.text_at(x, y, report.panel.variable_names[static_cast<std::size_t>(i)]);
        }
        writer.write_text("factor_map.svg", map.render());
    }

    // Contribution bars (as stem lines) per retained factor with cutoffs.
    {
        std::vector<std::string> groups;
        const auto n = report.diag.ctr.rows();
        for (int j = 0; j < r; ++j) {
            SvgPlot bar(420, 260, "Contributions to F" + std::to_string(j + 1));
            for (Eigen::Index i = 0; i < n; ++i) {
                bar.polyline({{static_cast<double>(i + 1), 0.0},
                              {static_cast<double>(i + 1), report.diag.ctr(i, j)}},
                             kPalette[0], 6.0);
            }
            bar.hline(report.diag.cutoff(j), "#aa3333");
            groups.push_back(bar.render_group((j % 2) * 420.0, (j / 2) * 260.0));
        }
        writer.write_text("contributions.svg", svg_grid(groups, 2, 420, 260));
    }

    // Generalized IRF grid: response of i to a shock in j.
    {
        const auto& irf = report.irf_generalized;
        if (!irf.responses.empty()) {
            const int n = static_cast<int>(irf.responses.front().rows());
            std::vector<std::string> names;
            for (int j = 0; j < r; ++j) names.push_back("F" + std::to_string(j + 1));
            names.push_back(report.target_label);
            std::vector<std::string> groups;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    SvgPlot cell(300, 220, names[static_cast<std::size_t>(i)] +
                                               " <- shock " +
                                               names[static_cast<std::size_t>(j)]);
                    std::vector<SvgPlot::Point> path;
                    for (std::size_t h = 0; h < irf.responses.size(); ++h) {
                        path.push_back({static_cast<double>(h), irf.responses[h](i, j)});
                    }
                    cell.hline(0.0, "#999999");
                    cell.polyline(path, kPalette[0], 2.0);
                    groups.push_back(cell.render_group(j * 300.0, i * 220.0));
                }
            }
            writer.write_text("irf.svg", svg_grid(groups, n, 300, 220));
        }
    }

    // Forecast overlays per window and scheme.
    for (const auto& scheme : {std::string("static"), std::string("dynamic")}) {
        std::vector<std::string> periods;
        for (const auto& p : report.paths) {
            if (p.scheme == scheme &&
                std::find(periods.begin(), periods.end(), p.period) == periods.end()) {
                periods.push_back(p.period);
            }
        }
        for (const auto& period : periods) {
            SvgPlot plot(560, 320, period + " " + scheme + " forecasts");
            bool actual_drawn = false;
            int color = 1;
            for (const auto& p : report.paths) {
                if (p.period != period || p.scheme != scheme) continue;
                std::vector<SvgPlot::Point> line;
                if (!actual_drawn) {
                    for (std::size_t t = 0; t < p.actual.size(); ++t) {
                        line.push_back({static_cast<double>(t), p.actual[t]});
                    }
                    plot.polyline(line, "#000000", 2.0);
                    plot.text_at(0.0, p.actual.front(), "actual", "#000000");
                    actual_drawn = true;
                }
                line.clear();
                for (std::size_t t = 0; t < p.forecast.size(); ++t) {
                    line.push_back({static_cast<double>(t), p.forecast[t]});
                }
                const std::string c = kPalette[color % 8];
                plot.polyline(line, c, 1.5, true);
                plot.text_at(static_cast<double>(p.forecast.size() - 1),
                             p.forecast.back(), p.model, c);
                ++color;
            }
            if (actual_drawn) {
                writer.write_text("forecast_" + period + "_" + scheme + ".svg",
                                  plot.render());
            }
        }
    }
}

void emit_report(const PipelineConfig& cfg, RunReport& report) {
    ReportWriter writer(cfg.output_dir);
    const std::vector<std::string> adf_header{"variable", "type", "optimal_aic", "k",
                                              "statistic", "p_value", "k_max",
                                              "differenced"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.adf_levels) rows.push_back(adf_row(r));
    writer.write_csv("adf_levels.csv", adf_header, rows);
    writer.write_json("adf_levels.json", adf_json(report.adf_levels));

    rows.clear();
    for (const auto& r : report.adf_differences) rows.push_back(adf_row(r));
    writer.write_csv("adf_differences.csv", adf_header, rows);
    writer.write_json("adf_differences.json", adf_json(report.adf_differences));

    writer.write_csv(
        "adequacy.csv", {"measure", "value"},
        {{"kmo", format_number(report.kmo_value)},
         {"bartlett_chi2", format_number(report.bartlett.chi2)},
         {"bartlett_df", std::to_string(report.bartlett.df)},
         {"bartlett_p", format_number(report.bartlett.p_value)}});

    rows.clear();
    for (const auto& s : report.scree) {
        rows.push_back({std::to_string(s.component), format_number(s.eigenvalue),
                        format_number(s.share), format_number(s.cumulative)});
    }
    writer.write_csv("scree.csv", {"component", "eigenvalue", "share", "cumulative"},
                     rows);

    const auto& fd = report.decomposition;
    rows.clear();
    for (Eigen::Index i = 0; i < fd.loadings.rows(); ++i) {
        std::vector<std::string> row{report.panel.variable_names[static_cast<std::size_t>(i)]};
        for (Eigen::Index j = 0; j < fd.loadings.cols(); ++j) {
            row.push_back(format_number(fd.loadings(i, j)));
        }
        rows.push_back(row);
    }
    std::vector<std::string> loading_header{"variable"};
    for (Eigen::Index j = 0; j < fd.loadings.cols(); ++j) {
        loading_header.push_back("PC" + std::to_string(j + 1));
    }
    writer.write_csv("loadings.csv", loading_header, rows);

    rows.clear();
    for (Eigen::Index t = 0; t < fd.scores.rows(); ++t) {
        std::vector<std::string> row{to_string(report.panel.dates[static_cast<std::size_t>(t)])};
        for (Eigen::Index j = 0; j < fd.scores.cols(); ++j) {
            row.push_back(format_number(fd.scores(t, j)));
        }
        rows.push_back(row);
    }
    std::vector<std::string> score_header{"date"};
    for (Eigen::Index j = 0; j < fd.scores.cols(); ++j) {
        score_header.push_back("F" + std::to_string(j + 1));
    }
    writer.write_csv("scores.csv", score_header, rows);

    // Factor map data (components 1, 2) and contributions for the retained r.
    rows.clear();
    for (Eigen::Index i = 0; i < report.diag.corr_xf.rows(); ++i) {
        const double c1 = report.diag.corr_xf(i, 0);
        const double c2 = report.diag.corr_xf.cols() > 1 ? report.diag.corr_xf(i, 1) : 0.0;
        rows.push_back({report.panel.variable_names[static_cast<std::size_t>(i)],
                        format_number(c1), format_number(c2),
                        format_number(c1 * c1 + c2 * c2)});
    }
    writer.write_csv("factor_map.csv", {"variable", "corr_f1", "corr_f2", "cos2"}, rows);

    rows.clear();
    for (Eigen::Index i = 0; i < report.diag.ctr.rows(); ++i) {
        for (int j = 0; j < report.diag.r; ++j) {
            rows.push_back({report.panel.variable_names[static_cast<std::size_t>(i)],
                            "F" + std::to_string(j + 1),
                            format_number(report.diag.ctr(i, j)),
                            format_number(report.diag.cutoff(j)),
                            report.diag.significant(i, j) > 0.5 ? "yes" : "no"});
        }
    }
    writer.write_csv("contributions.csv",
                     {"variable", "factor", "ctr", "cutoff", "significant"}, rows);

    // Static factor regression, Table-5 layout.
    rows.clear();
    nlohmann::json reg_json = nlohmann::json::array();
    for (Eigen::Index j = 0; j < report.factor_regression.coefficients.size(); ++j) {
        const double p = report.factor_regression.p_values(j);
        const std::string stars = p < 0.001 ? "***" : p < 0.01 ? "**" : p < 0.05 ? "*" : "";
        rows.push_back({"alpha_" + std::to_string(j + 1),
                        format_number(report.factor_regression.coefficients(j)),
                        format_number(report.factor_regression.standard_errors(j)),
                        format_number(report.factor_regression.t_stats(j)),
                        format_number(p), stars});
        reg_json.push_back({{"parameter", "alpha_" + std::to_string(j + 1)},
                            {"estimate", report.factor_regression.coefficients(j)},
                            {"std_error", report.factor_regression.standard_errors(j)},
                            {"t", report.factor_regression.t_stats(j)},
                            {"p_value", p}});
    }
    writer.write_csv("factor_regression.csv",
                     {"parameter", "estimate", "std_error", "t", "p_value", "signif"},
                     rows);
    writer.write_json("factor_regression.json",
                      {{"coefficients", reg_json},
                       {"r_squared", report.factor_regression.r_squared},
                       {"nobs", report.factor_regression.nobs}});

    rows.clear();
    nlohmann::json granger_json = nlohmann::json::array();
    for (const auto& g : report.granger) {
        rows.push_back({g.equation, g.excluded, format_number(g.F),
                        std::to_string(g.df_num), std::to_string(g.df_den),
                        format_number(g.p_value)});
        granger_json.push_back({{"equation", g.equation},
                                {"excluded", g.excluded},
                                {"F", g.F},
                                {"df_num", g.df_num},
                                {"df_den", g.df_den},
                                {"p_value", g.p_value}});
    }
    writer.write_csv("granger.csv", {"equation", "excluded", "F", "df_num", "df_den",
                                     "p_value"}, rows);
    writer.write_json("granger.json", granger_json);

    rows.clear();
    std::vector<std::string> irf_names;
    for (int j = 0; j < report.diag.r; ++j) irf_names.push_back("F" + std::to_string(j + 1));
    irf_names.push_back(report.target_label);
    for (const auto* res : {&report.irf_generalized, &report.irf_orthogonalized}) {
        const std::string kind =
            res->kind == IrfKind::generalized ? "generalized" : "orthogonalized";
        for (std::size_t h = 0; h < res->responses.size(); ++h) {
            for (Eigen::Index i = 0; i < res->responses[h].rows(); ++i) {
                for (Eigen::Index j = 0; j < res->responses[h].cols(); ++j) {
                    rows.push_back({kind, std::to_string(h),
                                    irf_names[static_cast<std::size_t>(i)],
                                    irf_names[static_cast<std::size_t>(j)],
                                    format_number(res->responses[h](i, j))});
                }
            }
        }
    }
    writer.write_csv("irf.csv", {"kind", "horizon", "response", "shock", "value"}, rows);

    if (cfg.forecast_stage) {
        const std::vector<std::string> eval_header{
            "period", "model", "rmse", "u_theil", "rrmse", "ru",
            "dm_statistic", "dm_p_value", "dm_k"};
        rows.clear();
        for (const auto& e : report.eval_static) rows.push_back(eval_row_csv(e));
        writer.write_csv("evaluation_static.csv", eval_header, rows);
        writer.write_json("evaluation_static.json", eval_json(report.eval_static));
        rows.clear();
        for (const auto& e : report.eval_dynamic) rows.push_back(eval_row_csv(e));
        writer.write_csv("evaluation_dynamic.csv", eval_header, rows);
        writer.write_json("evaluation_dynamic.json", eval_json(report.eval_dynamic));

        rows.clear();
        for (const auto& p : report.paths) {
            for (std::size_t t = 0; t < p.dates.size(); ++t) {
                rows.push_back({p.period, p.scheme, p.model, to_string(p.dates[t]),
                                format_number(p.actual[t]),
                                format_number(p.forecast[t])});
            }
        }
        writer.write_csv("forecasts.csv",
                         {"period", "scheme", "model", "date", "actual", "forecast"},
                         rows);
    }

    emit_plots(writer, report, report.diag.r);

    nlohmann::json info;
    info["target"] = cfg.target;
    info["target_label"] = report.target_label;
    info["factors"] = cfg.factors;
    info["adf_level"] = cfg.adf_level;
    info["favar_lags"] = cfg.favar_lags;
    info["kmo"] = report.kmo_value;
    info["bartlett"] = {{"chi2", report.bartlett.chi2},
                        {"df", report.bartlett.df},
                        {"p_value", report.bartlett.p_value}};
    info["kaiser_count"] = report.diag.kaiser_count;
    info["observations"] = report.panel.rows();
    info["variables"] = report.panel.variable_names;
    info["date_range"] = {to_string(report.panel.dates.front()),
                          to_string(report.panel.dates.back())};
    info["forecast_stage"] = cfg.forecast_stage;
    if (cfg.forecast_stage) {
        info["expanding"] = cfg.expanding;
        info["full_sample_scores"] = cfg.full_sample_scores;
        info["models"] = cfg.models;
    }
    // Target scaling so standardized forecasts can be mapped back.
    const double t_mean = report.target_scale_mean;
    const double t_sd = report.target_scale_sd;
    info["target_scaling"] = {{"mean", t_mean}, {"sd", t_sd}};
    info["warnings"] = report.warnings;
    writer.write_json("summary.json", info);
    writer.finalize(info);
    report.files = writer.artifacts();
}

}  // namespace

RunReport run_pipeline(const PipelineConfig& cfg) {
    RunReport report;

    // ------------------------------------------------------------------ load
    std::map<std::string, std::map<std::string, RawColumn>> file_cache;
    std::vector<PreparedVariable> prepared;
    prepared.reserve(cfg.variables.size());
    for (const auto& v : cfg.variables) {
        if (file_cache.find(v.file) == file_cache.end()) {
            file_cache[v.file] = read_csv_columns(v.file);
        }
        const auto& columns = file_cache[v.file];
        const auto it = columns.find(v.column);
        if (it == columns.end() || it->second.empty()) {
            throw ConfigError("variable '" + v.name + "': column '" + v.column +
                              "' not found in '" + v.file + "'");
        }
        PreparedVariable p;
        p.config = &v;
        p.label = v.name;
        p.series = series_from_column(v.name, v.frequency, it->second);
        p.series = harmonize(v, std::move(p.series));
        p.series = apply_transforms(v, std::move(p.series), p.label);
        p.series.name = p.label;
        prepared.push_back(std::move(p));
    }

    // ------------------------------------------------------------ ADF screen
    for (auto& p : prepared) {
        const auto screened = [&](std::span<const double> values, AdfSpec spec) {
            try {
                return adf_test(values, spec);
            } catch (const Error& e) {
                throw DataError("variable '" + p.label + "': " + e.what());
            }
        };
        AdfScreenRow row;
        row.variable = p.label;
        row.spec = p.config->adf_spec;
        row.result = screened(p.series.values, p.config->adf_spec);
        row.differenced = row.result.p_value >= cfg.adf_level;
        report.adf_levels.push_back(row);
        if (!row.differenced) continue;

        p.series = diff(p.series);
        p.label = "d(" + p.label + ")";
        p.series.name = p.label;

        AdfScreenRow drow;
        drow.variable = p.label;
        drow.spec = AdfSpec::drift;  // differencing removes a linear trend
        drow.result = screened(p.series.values, AdfSpec::drift);
        drow.still_nonstationary = drow.result.p_value >= cfg.adf_level;
        report.adf_differences.push_back(drow);
        if (drow.still_nonstationary) {
            report.warnings.push_back("variable '" + p.label +
                                      "' still non-stationary after differencing "
                                      "(p=" + format_number(drow.result.p_value) +
                                      "); kept in the panel");
        }
    }

    // ------------------------------------------------- align and standardize
    std::vector<TimeSeries> all_series;
    const PreparedVariable* target_var = nullptr;
    for (const auto& p : prepared) {
        if (p.config->name == cfg.target) target_var = &p;
    }
    if (target_var == nullptr) throw ConfigError("target variable missing after screen");
    all_series.push_back(target_var->series);
    std::vector<std::string> panel_names;
    for (const auto& p : prepared) {
        if (p.config->in_panel) {
            all_series.push_back(p.series);
            panel_names.push_back(p.label);
        }
    }
    if (panel_names.empty()) throw ConfigError("no panel variables configured");

    const Panel combined = align_panel(all_series);
    const Eigen::Index T = combined.rows();
    const Eigen::Index N = combined.cols() - 1;
    if (T <= N) {
        throw DataError("aligned sample too short: T=" + std::to_string(T) +
                        " <= N=" + std::to_string(N));
    }

    Panel raw_panel;
    raw_panel.variable_names = panel_names;
    raw_panel.dates = combined.dates;
    raw_panel.data = combined.data.rightCols(N);
    const Eigen::VectorXd raw_target = combined.data.col(0);
    report.target_label = target_var->label;

    report.panel = standardize(raw_panel);
    const double target_mean = raw_target.mean();
    const double target_sd = std::sqrt(
        (raw_target.array() - target_mean).square().sum() / static_cast<double>(T - 1));
    if (!(target_sd > 0.0)) throw ZeroVarianceError("target has zero variance");
    const Eigen::VectorXd std_target = (raw_target.array() - target_mean) / target_sd;
    report.target_values = eigen_to_vec(std_target);
    report.target_scale_mean = target_mean;
    report.target_scale_sd = target_sd;

    // --------------------------------------------- adequacy, PCA, diagnostics
    const int r = std::min<int>(cfg.factors, static_cast<int>(N));
    const Eigen::MatrixXd R = correlation_matrix(report.panel);
    report.kmo_value = kmo(R);
    if (report.kmo_value < 0.5) {
        report.warnings.push_back("KMO sampling adequacy " +
                                  format_number(report.kmo_value) +
                                  " is below 0.5; factor analysis may be weak");
    }
    report.bartlett = bartlett_sphericity(R, static_cast<int>(T));
    report.decomposition = pca(report.panel);
    report.scree = scree_data(report.decomposition);
    report.diag = diagnostics(report.decomposition, report.panel, r, cfg.sig_level);
    report.factor_regression =
        static_factor_regression(report.decomposition.scores.leftCols(r), std_target);

    // ------------------------------------------------------------ FAVAR block
    std::vector<std::string> favar_names;
    for (int j = 0; j < r; ++j) favar_names.push_back("F" + std::to_string(j + 1));
    favar_names.push_back(report.target_label);
    const Eigen::MatrixXd favar_data =
        favar_assemble(report.decomposition.scores.leftCols(r), std_target);
    const VarModel favar = var_estimate(favar_data, cfg.favar_lags, true, favar_names);
    for (const auto& eq : favar_names) {
        for (const auto& other : favar_names) {
            if (other == eq) continue;
            report.granger.push_back(granger_test(favar, eq, {other}));
        }
        std::vector<std::string> all_others;
        for (const auto& other : favar_names) {
            if (other != eq) all_others.push_back(other);
        }
        if (all_others.size() > 1) {
            report.granger.push_back(granger_test(favar, eq, all_others));
        }
    }
    report.irf_generalized = irf(favar, cfg.irf_horizon, IrfKind::generalized);
    report.irf_orthogonalized = irf(favar, cfg.irf_horizon, IrfKind::orthogonalized);

    // -------------------------------------------------------- forecast stage
    if (cfg.forecast_stage && !cfg.windows.empty() && !cfg.models.empty()) {
        std::vector<ModelSpec> models;
        for (const auto& token : cfg.models) {
            models.push_back(parse_model_token(token, static_cast<int>(N)));
        }
        const bool any_static = std::any_of(models.begin(), models.end(),
                                            [](const ModelSpec& m) { return !m.dynamic; });
        const bool any_dynamic = std::any_of(models.begin(), models.end(),
                                             [](const ModelSpec& m) { return m.dynamic; });
        int max_r = 1;
        for (const auto& m : models) max_r = std::max(max_r, m.r);

        for (const auto& w : cfg.windows) {
            const auto find_index = [&](const Date& d) {
                const Date me = end_of_month(d);
                const auto it =
                    std::find(combined.dates.begin(), combined.dates.end(), me);
                if (it == combined.dates.end()) {
                    throw ConfigError("window '" + w.name + "': date " + to_string(me) +
                                      " not in the aligned sample");
                }
                return static_cast<Eigen::Index>(it - combined.dates.begin());
            };
            const Eigen::Index start_idx = find_index(w.start);
            const Eigen::Index end_idx = find_index(w.end);
            const int P = static_cast<int>(end_idx - start_idx + 1);
            const Eigen::Index train = start_idx;  // rows 0..start_idx-1
            if (train < max_r + 10) {
                throw ConfigError("window '" + w.name + "': training sample too short");
            }

            // Holdout discipline: scaling and loadings come from the training
            // rows unless the full-sample option is on.
            const Eigen::Index stats_rows = cfg.full_sample_scores ? T : train;
            Eigen::MatrixXd std_panel(T, N);
            for (Eigen::Index j = 0; j < N; ++j) {
                const auto head = raw_panel.data.col(j).head(stats_rows);
                const double m = head.mean();
                const double sd = std::sqrt((head.array() - m).square().sum() /
                                            static_cast<double>(stats_rows - 1));
                if (!(sd > 0.0)) {
                    throw ZeroVarianceError("window '" + w.name + "': column '" +
                                            panel_names[static_cast<std::size_t>(j)] +
                                            "' constant on the training sample");
                }
                std_panel.col(j) = (raw_panel.data.col(j).array() - m) / sd;
            }
            const auto t_head = raw_target.head(stats_rows);
            const double tm = t_head.mean();
            const double tsd = std::sqrt((t_head.array() - tm).square().sum() /
                                         static_cast<double>(stats_rows - 1));
            if (!(tsd > 0.0)) {
                throw ZeroVarianceError("window '" + w.name + "': target constant");
            }
            const Eigen::VectorXd target_w_full = (raw_target.array() - tm) / tsd;

            Panel pca_panel;
            pca_panel.variable_names = panel_names;
            pca_panel.dates.assign(combined.dates.begin(),
                                   combined.dates.begin() + stats_rows);
            pca_panel.data = std_panel.topRows(stats_rows);
            const FactorDecomposition fd_w = pca(pca_panel);
            const Eigen::MatrixXd scores_full = std_panel * fd_w.loadings;

            const Eigen::VectorXd actual = target_w_full.segment(start_idx, P);
            const std::vector<double> actual_vec = eigen_to_vec(actual);
            std::vector<Date> window_dates(combined.dates.begin() + start_idx,
                                           combined.dates.begin() + end_idx + 1);

            // Benchmark scores of the current window, one pair per scheme.
            const auto evaluate = [&](const std::string& scheme,
                                      std::vector<EvaluationRow>& table,
                                      const std::vector<double>& bench_errors,
                                      double bench_rmse, double bench_u,
                                      const std::string& model_name,
                                      const Eigen::VectorXd& forecast) {
                EvaluationRow e;
                e.period = w.name;
                e.model = model_name;
                const std::vector<double> fvec = eigen_to_vec(forecast);
                e.rmse = rmse(actual_vec, fvec);
                e.u = u_theil(actual_vec, fvec);
                if (model_name == "AR") {
                    e.rrmse = 1.0;
                    e.ru = 1.0;
                    e.dm.inconclusive = true;
                } else {
                    std::vector<double> model_errors(static_cast<std::size_t>(P));
                    for (int t = 0; t < P; ++t) {
                        model_errors[static_cast<std::size_t>(t)] =
                            actual(t) - forecast(t);
                    }
                    const RelativeMeasures rel =
                        relative_measures(e.rmse, e.u, bench_rmse, bench_u);
                    e.rrmse = rel.rrmse;
                    e.ru = rel.ru;
                    e.dm = dm_test(bench_errors, model_errors, w.dm_k);
                }
                table.push_back(e);
                report.paths.push_back(ForecastPath{w.name, scheme, model_name,
                                                    window_dates, actual_vec,
                                                    eigen_to_vec(forecast)});
            };

            try {
                if (any_static) {
                    // AR(1) static benchmark first; its errors feed the DM test.
                    ForecastSpec ar_spec;
                    ar_spec.factors_used = 0;
                    ar_spec.target_lags = 1;
                    ar_spec.expanding = cfg.expanding;
                    const auto ar_res = static_forecast(
                        ar_spec, scores_full.topRows(end_idx + 1),
                        target_w_full.head(end_idx + 1), P);
                    std::vector<double> ar_errors(static_cast<std::size_t>(P));
                    for (int t = 0; t < P; ++t) {
                        ar_errors[static_cast<std::size_t>(t)] =
                            actual(t) - ar_res.forecasts(t);
                    }
                    const double ar_rmse =
                        rmse(actual_vec, eigen_to_vec(ar_res.forecasts));
                    const double ar_u =
                        u_theil(actual_vec, eigen_to_vec(ar_res.forecasts));
                    evaluate("static", report.eval_static, ar_errors, ar_rmse, ar_u,
                             "AR", ar_res.forecasts);
                    for (const auto& m : models) {
                        if (m.dynamic || m.name == "AR") continue;
                        ForecastSpec spec;
                        spec.factors_used = m.r;
                        spec.target_lags = 1;
                        spec.expanding = cfg.expanding;
                        const auto res = static_forecast(
                            spec, scores_full.topRows(end_idx + 1),
                            target_w_full.head(end_idx + 1), P);
                        evaluate("static", report.eval_static, ar_errors, ar_rmse,
                                 ar_u, m.name, res.forecasts);
                    }
                }
                if (any_dynamic) {
                    // Dynamic AR benchmark: a univariate VAR iterated forward.
                    Eigen::MatrixXd target_mat = target_w_full.head(train);
                    const VarModel ar_var = var_estimate(target_mat, cfg.favar_lags,
                                                         true, {"target"});
                    const Eigen::MatrixXd ar_path = dynamic_forecast(
                        ar_var, target_mat.bottomRows(cfg.favar_lags), P);
                    std::vector<double> ar_errors(static_cast<std::size_t>(P));
                    for (int t = 0; t < P; ++t) {
                        ar_errors[static_cast<std::size_t>(t)] =
                            actual(t) - ar_path(t, 0);
                    }
                    const double ar_rmse = rmse(actual_vec, eigen_to_vec(ar_path.col(0)));
                    const double ar_u = u_theil(actual_vec, eigen_to_vec(ar_path.col(0)));
                    evaluate("dynamic", report.eval_dynamic, ar_errors, ar_rmse, ar_u,
                             "AR", ar_path.col(0));
                    for (const auto& m : models) {
                        if (!m.dynamic) continue;
                        const Eigen::MatrixXd Y = favar_assemble(
                            scores_full.topRows(train).leftCols(m.r),
                            target_w_full.head(train));
                        std::vector<std::string> names;
                        for (int j = 0; j < m.r; ++j) {
                            names.push_back("F" + std::to_string(j + 1));
                        }
                        names.push_back("target");
                        const VarModel vm =
                            var_estimate(Y, cfg.favar_lags, true, names);
                        const Eigen::MatrixXd path = dynamic_forecast(
                            vm, Y.bottomRows(cfg.favar_lags), P);
                        evaluate("dynamic", report.eval_dynamic, ar_errors, ar_rmse,
                                 ar_u, m.name, path.col(m.r));
                    }
                }
            } catch (const Error& e) {
                throw DataError("window '" + w.name + "': " + e.what());
            }
        }
    }

    emit_report(cfg, report);
    return report;
}

}  // namespace fcast
