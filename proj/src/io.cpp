#include "statarb/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "statarb/error.hpp"

namespace statarb {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    return in;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string f;
    std::stringstream ss(line);
    while (std::getline(ss, f, ',')) {
        while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
        fields.push_back(f);
    }
    return fields;
}

double parse_double(const std::string& s, const std::string& path) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        throw Error(ErrorCode::malformed_input, path + ": bad number '" + s + "'");
    }
    return v;
}

ordered_json json_vector(const Eigen::VectorXd& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

ordered_json json_matrix(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Eigen::VectorXd vector_from_json(const ordered_json& arr) {
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = arr[i];
    return v;
}

ordered_json json_unit_root(const UnitRootReport& r) {
    ordered_json j;
    j["test"] = r.test;
    j["statistic"] = r.statistic;
    j["pValue"] = r.p_value;
    j["lags"] = r.lags_used;
    j["deterministic"] =
        r.deterministic == Deterministic::constant ? "constant" : "constant+trend";
    if (!r.significance_band.empty()) j["band"] = r.significance_band;
    return j;
}

void dump_json(const std::string& path, const ordered_json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace

void write_spread_csv(const std::string& path, const SpreadSeries& spread) {
    auto out = open_out(path);
    out << "date,spread\n";
    for (std::size_t t = 0; t < spread.values.size(); ++t) {
        out << format_date(spread.dates[t]) << ',' << format_double(spread.values[t])
            << '\n';
    }
}

SpreadSeries read_spread_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv(line).size() < 2) {
        throw Error(ErrorCode::malformed_input, path + ": bad spread header");
    }
    SpreadSeries s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        s.dates.push_back(parse_date(f[0]));
        s.values.push_back(parse_double(f[1], path));
    }
    if (s.values.empty()) {
        throw Error(ErrorCode::malformed_input, path + ": empty spread file");
    }
    return s;
}

void write_trace_csv(const std::string& path, const EstimateTrace& trace,
                     const std::vector<Date>& dates) {
    if (static_cast<Eigen::Index>(dates.size()) != trace.size()) {
        throw Error(ErrorCode::dimension_mismatch, "trace/date length mismatch");
    }
    auto out = open_out(path);
    const int n = trace.n_states;
    out << "date,y";
    for (int i = 1; i <= n; ++i) out << ",prob_" << i;
    out << ",fc_mean,fc_var,cum_loglik";
    for (int i = 1; i <= n; ++i) out << ",gamma_" << i;
    for (int i = 1; i <= n; ++i) out << ",alpha_" << i;
    for (int i = 1; i <= n; ++i) out << ",eta_" << i;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) out << ",pi_" << i << j;
    }
    out << '\n';
    for (Eigen::Index t = 0; t < trace.size(); ++t) {
        const auto& p = trace.params_at(static_cast<int>(t));
        out << format_date(dates[static_cast<std::size_t>(t)]) << ','
            << format_double(trace.y[static_cast<std::size_t>(t)]);
        for (int i = 0; i < n; ++i) out << ',' << format_double(trace.probs(t, i));
        out << ',' << format_double(trace.fc_mean[static_cast<std::size_t>(t)]) << ','
            << format_double(trace.fc_var[static_cast<std::size_t>(t)]) << ','
            << format_double(trace.cum_loglik[static_cast<std::size_t>(t)]);
        for (int i = 0; i < n; ++i) out << ',' << format_double(p.gamma(i));
        for (int i = 0; i < n; ++i) out << ',' << format_double(p.alpha(i));
        for (int i = 0; i < n; ++i) out << ',' << format_double(p.eta(i));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) out << ',' << format_double(p.pi(i, j));
        }
        out << '\n';
    }
}

TraceArtifact read_trace_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::malformed_input, path + ": empty trace file");
    }
    auto header = split_csv(line);
    int n = 0;
    for (const auto& h : header) {
        if (h.rfind("prob_", 0) == 0) ++n;
    }
    // date, y, n probabilities, forecast mean/var, loglik, 3n parameters, n^2
    // transition entries.
    const std::size_t expected =
        5u + 4u * static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * n;
    if (n == 0 || header.size() != expected) {
        throw Error(ErrorCode::malformed_input, path + ": unexpected trace header");
    }
    TraceArtifact a;
    a.n_states = n;
    std::vector<std::vector<double>> prob_rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != header.size()) {
            throw Error(ErrorCode::malformed_input, path + ": ragged trace row");
        }
        std::size_t c = 0;
        a.dates.push_back(parse_date(f[c++]));
        a.y.push_back(parse_double(f[c++], path));
        std::vector<double> pr(n);
        for (int i = 0; i < n; ++i) pr[static_cast<std::size_t>(i)] = parse_double(f[c++], path);
        prob_rows.push_back(pr);
        a.fc_mean.push_back(parse_double(f[c++], path));
        a.fc_var.push_back(parse_double(f[c++], path));
        a.cum_loglik.push_back(parse_double(f[c++], path));
        HmmParams p;
        p.gamma.resize(n);
        p.alpha.resize(n);
        p.eta.resize(n);
        p.pi.resize(n, n);
        for (int i = 0; i < n; ++i) p.gamma(i) = parse_double(f[c++], path);
        for (int i = 0; i < n; ++i) p.alpha(i) = parse_double(f[c++], path);
        for (int i = 0; i < n; ++i) p.eta(i) = parse_double(f[c++], path);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) p.pi(i, j) = parse_double(f[c++], path);
        }
        a.row_params.push_back(std::move(p));
    }
    if (a.y.empty()) {
        throw Error(ErrorCode::malformed_input, path + ": no trace rows");
    }
    a.probs.resize(static_cast<Eigen::Index>(prob_rows.size()), n);
    for (std::size_t t = 0; t < prob_rows.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            a.probs(static_cast<Eigen::Index>(t), i) = prob_rows[t][static_cast<std::size_t>(i)];
        }
    }
    return a;
}

void write_cointegration_json(const std::string& path,
                              const CointegrationArtifact& artifact) {
    ordered_json j;
    j["frequency"] = artifact.frequency == Frequency::weekly ? "weekly" : "daily";
    j["lagOrder"] = artifact.lag_order;
    ordered_json ur = ordered_json::array();
    for (const auto& block : artifact.unit_root) {
        ordered_json b;
        b["series"] = block.series;
        b["adfLevel"] = json_unit_root(block.adf_level);
        b["adfDiff"] = json_unit_root(block.adf_diff);
        b["kpssLevel"] = json_unit_root(block.kpss_level);
        ur.push_back(b);
    }
    j["unitRoot"] = ur;
    const auto& res = artifact.result;
    ordered_json table = ordered_json::array();
    for (Eigen::Index r = 0; r < res.trace_stats.size(); ++r) {
        ordered_json row;
        row["r"] = r;
        row["h"] = res.trace_stats(r) >= res.critical_values(r) ? 1 : 0;
        row["stat"] = res.trace_stats(r);
        row["crit"] = res.critical_values(r);
        row["pValue"] = res.p_values(r);
        table.push_back(row);
    }
    j["traceTable"] = table;
    j["eigenvalues"] = json_vector(res.eigenvalues);
    j["selectedRank"] = res.selected_rank;
    j["beta"] = json_vector(res.beta);
    j["c0"] = res.c0;
    j["alpha"] = json_vector(res.alpha);
    j["nObs"] = res.n_obs;
    if (artifact.spread_tests_available) {
        j["spreadAdf"] = json_unit_root(artifact.spread_adf);
        j["spreadKpss"] = json_unit_root(artifact.spread_kpss);
    }
    dump_json(path, j);
}

CointegrationArtifact read_cointegration_json(const std::string& path) {
    auto in = open_in(path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::malformed_input, path + ": " + e.what());
    }
    CointegrationArtifact a;
    a.frequency = j.at("frequency") == "weekly" ? Frequency::weekly : Frequency::daily;
    a.lag_order = j.at("lagOrder");
    a.result.selected_rank = j.at("selectedRank");
    a.result.beta = vector_from_json(j.at("beta"));
    a.result.c0 = j.at("c0");
    a.result.alpha = vector_from_json(j.at("alpha"));
    a.result.lag_order = a.lag_order;
    return a;
}

void write_model_selection_json(const std::string& path,
                                const ModelSelectionArtifact& artifact) {
    ordered_json j;
    ordered_json cands = ordered_json::array();
    for (const auto& c : artifact.selection.candidates) {
        ordered_json e;
        e["n"] = c.n_states;
        e["logLik"] = c.log_lik;
        e["sbic"] = c.sbic;
        e["forecastMse"] = c.forecast_mse;
        cands.push_back(e);
    }
    j["candidates"] = cands;
    j["selected"] = artifact.selection.best_n;
    j["batchM"] = artifact.batch_m;
    j["delta"] = artifact.delta;
    auto params_json = [](const HmmParams& p) {
        ordered_json e;
        e["gamma"] = json_vector(p.gamma);
        e["alpha"] = json_vector(p.alpha);
        e["eta"] = json_vector(p.eta);
        e["pi"] = json_matrix(p.pi);
        return e;
    };
    j["paramsAtBreak"] = params_json(artifact.params_at_break);
    j["paramsFinal"] = params_json(artifact.params_final);
    if (artifact.continuous_available) {
        ordered_json cont;
        cont["a"] = json_vector(artifact.continuous_at_break.a);
        cont["beta"] = json_vector(artifact.continuous_at_break.beta);
        cont["xi"] = json_vector(artifact.continuous_at_break.xi);
        cont["delta"] = artifact.continuous_at_break.delta;
        j["continuousAtBreak"] = cont;
    } else {
        j["continuousAtBreak"] = nullptr;
    }
    dump_json(path, j);
}

namespace {

const char* action_name(Action a) {
    switch (a) {
        case Action::flat: return "flat";
        case Action::open: return "open";
        case Action::hold: return "hold";
        case Action::close: return "close";
    }
    return "?";
}

const char* side_name(Side s) {
    switch (s) {
        case Side::none: return "none";
        case Side::long_spread: return "long";
        case Side::short_spread: return "short";
    }
    return "?";
}

}  // namespace

void write_ledger_csv(const std::string& path, const TradeLedger& ledger) {
    auto out = open_out(path);
    out << "date,spread,action,position,return,flagged\n";
    for (const auto& row : ledger.rows) {
        out << format_date(row.date) << ',' << format_double(row.spread) << ','
            << action_name(row.action) << ',' << side_name(row.position) << ','
            << format_double(row.daily_return) << ',' << (row.flagged ? 1 : 0)
            << '\n';
    }
}

void write_backtest_summary_json(const std::string& path,
                                 const BacktestSummary& summary) {
    ordered_json j;
    j["costC"] = summary.cost_c;
    ordered_json strategies;
    for (const auto& ledger : summary.ledgers) {
        ordered_json e;
        e["R"] = ledger.annualized_return;
        if (ledger.sharpe_defined) {
            e["SR"] = ledger.sharpe;
        } else {
            e["SR"] = nullptr;
        }
        e["trades"] = ledger.trade_count;
        e["maxOpenLength"] = ledger.max_open_length;
        strategies[strategy_name(ledger.kind)] = e;
    }
    j["strategies"] = strategies;
    dump_json(path, j);
}

void write_risk_report_json(const std::string& path, const RiskReport& report) {
    ordered_json j;
    j["nSim"] = report.n_sim;
    j["horizon"] = report.horizon;
    j["seed"] = report.seed;
    j["uniformStartFallback"] = report.uniform_start_fallback;
    ordered_json levels = ordered_json::array();
    for (double l : report.levels) levels.push_back(l);
    j["levels"] = levels;
    ordered_json var, tstat;
    for (std::size_t s = 0; s < report.strategy_names.size(); ++s) {
        ordered_json v, t;
        for (std::size_t l = 0; l < report.levels.size(); ++l) {
            char key[16];
            std::snprintf(key, sizeof(key), "%g", report.levels[l]);
            v[key] = report.var_mean(static_cast<Eigen::Index>(l),
                                     static_cast<Eigen::Index>(s));
            double ts = report.var_tstat(static_cast<Eigen::Index>(l),
                                         static_cast<Eigen::Index>(s));
            if (std::isfinite(ts)) {
                t[key] = ts;
            } else {
                t[key] = nullptr;
            }
        }
        var[report.strategy_names[s]] = v;
        tstat[report.strategy_names[s]] = t;
    }
    j["var"] = var;
    j["tStat"] = tstat;
    if (std::isfinite(report.average_abs_tstat)) {
        j["averageAbsTStat"] = report.average_abs_tstat;
    } else {
        j["averageAbsTStat"] = nullptr;
    }
    dump_json(path, j);
}

void write_kde_csv(const std::string& path, const KdeResult& kde) {
    auto out = open_out(path);
    out << "grid,density\n";
    for (std::size_t i = 0; i < kde.grid.size(); ++i) {
        out << format_double(kde.grid[i]) << ',' << format_double(kde.density[i])
            << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    auto out = open_out(path);
    out << "param,value,strategy,R,SR,trades,status\n";
    for (const auto& r : rows) {
        out << r.param << ',' << r.value << ',' << r.strategy << ',';
        if (r.status == "ok") {
            out << format_double(r.annualized_return) << ','
                << (r.sharpe_defined ? format_double(r.sharpe) : "nan") << ','
                << r.trade_count;
        } else {
            out << ",,";
        }
        out << ',' << r.status << '\n';
    }
}

}  // namespace statarb
