#include "statarb/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "statarb/error.hpp"
#include "statarb/io.hpp"
#include "statarb/johansen.hpp"
#include "statarb/ou_hmm.hpp"
#include "statarb/risk.hpp"
#include "statarb/unit_root.hpp"
#include "statarb/var.hpp"

namespace statarb {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

SeriesSpec series_spec_from_json(const ordered_json& j) {
    SeriesSpec s;
    s.name = j.at("name");
    s.path = j.at("path");
    if (j.contains("date_column")) s.date_column = j.at("date_column");
    if (j.contains("price_column")) s.price_column = j.at("price_column");
    return s;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::malformed_input, std::string("config: ") + e.what());
    }
    RunConfig c;
    try {
        for (const auto& s : j.at("data").at("series")) {
            c.series.push_back(series_spec_from_json(s));
        }
        if (j.at("data").contains("benchmark")) {
            c.benchmark = series_spec_from_json(j.at("data").at("benchmark"));
        }
        c.t0 = parse_date(j.at("dates").at("t0"));
        c.t_break = parse_date(j.at("dates").at("tB"));
        c.t_end = parse_date(j.at("dates").at("T"));
        if (j.contains("cointegration")) {
            const auto& co = j.at("cointegration");
            if (co.contains("frequency")) {
                const std::string f = co.at("frequency");
                if (f == "weekly") {
                    c.cointegration_frequency = Frequency::weekly;
                } else if (f == "daily") {
                    c.cointegration_frequency = Frequency::daily;
                } else {
                    throw Error(ErrorCode::invalid_argument,
                                "config: frequency must be weekly or daily");
                }
            }
            if (co.contains("adf_max_lag")) c.adf_max_lag = co.at("adf_max_lag");
            if (co.contains("var_max_lag")) c.var_max_lag = co.at("var_max_lag");
        }
        if (j.contains("hmm")) {
            const auto& h = j.at("hmm");
            if (h.contains("candidates")) {
                c.n_state_candidates = h.at("candidates").get<std::vector<int>>();
            }
            if (h.contains("m")) c.batch_m = h.at("m");
            if (h.contains("delta") && !h.at("delta").is_null()) {
                c.delta = h.at("delta").get<double>();
            }
        }
        if (j.contains("strategies")) {
            const auto& s = j.at("strategies");
            if (s.contains("kinds")) {
                for (const auto& k : s.at("kinds")) {
                    c.strategy_kinds.push_back(
                        strategy_from_name(k.get<std::string>()));
                }
            }
            if (s.contains("prob_quantile")) c.prob_quantile = s.at("prob_quantile");
            if (s.contains("rolling_window")) c.rolling_window_n = s.at("rolling_window");
            if (s.contains("increment_quantiles")) {
                auto q = s.at("increment_quantiles").get<std::vector<double>>();
                if (q.size() != 2) {
                    throw Error(ErrorCode::invalid_argument,
                                "config: increment_quantiles needs two entries");
                }
                c.increment_lower_q = q[0];
                c.increment_upper_q = q[1];
            }
            if (s.contains("cost")) c.cost_c = s.at("cost");
        }
        if (j.contains("risk")) {
            const auto& r = j.at("risk");
            if (r.contains("n_sim")) c.n_sim = r.at("n_sim");
            if (r.contains("levels")) {
                c.var_levels = r.at("levels").get<std::vector<double>>();
            }
            if (r.contains("seed")) c.seed = r.at("seed").get<std::uint64_t>();
            if (r.contains("threads")) c.threads = r.at("threads");
        }
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::malformed_input, std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open config '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

void RunConfig::validate() const {
    if (series.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "config: need at least 2 series");
    }
    sample().validate();
    if (batch_m < 1) {
        throw Error(ErrorCode::invalid_argument, "config: m must be >= 1");
    }
    if (n_state_candidates.empty()) {
        throw Error(ErrorCode::invalid_argument, "config: empty candidate set");
    }
    for (int n : n_state_candidates) {
        if (n < 1 || n > 3) {
            throw Error(ErrorCode::invalid_argument,
                        "config: state candidates must lie in {1, 2, 3}");
        }
    }
    if (delta && !(*delta > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "config: delta must be > 0");
    }
    for (StrategyKind k : strategy_kinds) {
        if (k == StrategyKind::buy_and_hold && !benchmark) {
            throw Error(ErrorCode::invalid_argument,
                        "config: buy-and-hold needs a benchmark series");
        }
    }
    strategy_config(StrategyKind::pv).validate();
}

std::vector<StrategyKind> RunConfig::effective_strategies() const {
    if (!strategy_kinds.empty()) return strategy_kinds;
    std::vector<StrategyKind> kinds = {
        StrategyKind::pv, StrategyKind::prob_interval, StrategyKind::pred_interval,
        StrategyKind::realized_increment, StrategyKind::predicted_increment};
    if (benchmark) kinds.push_back(StrategyKind::buy_and_hold);
    return kinds;
}

StrategyConfig RunConfig::strategy_config(StrategyKind kind) const {
    StrategyConfig s;
    s.kind = kind;
    s.prob_quantile = prob_quantile;
    s.rolling_window_n = rolling_window_n;
    s.increment_lower_q = increment_lower_q;
    s.increment_upper_q = increment_upper_q;
    s.cost_c = cost_c;
    return s;
}

namespace {

struct LoadedData {
    PricePanel daily;  // aligned, windowed to [t0, T]
    std::optional<PriceSeries> benchmark;
};

LoadedData load_data(const RunConfig& config) {
    std::vector<PriceSeries> all;
    for (const auto& spec : config.series) {
        CsvSchema schema{spec.date_column, spec.price_column, spec.name};
        all.push_back(load_csv(spec.path, schema));
    }
    LoadedData data;
    data.daily = window(align(all), config.t0, config.t_end);
    if (config.benchmark) {
        CsvSchema schema{config.benchmark->date_column,
                         config.benchmark->price_column, config.benchmark->name};
        data.benchmark = load_csv(config.benchmark->path, schema);
    }
    return data;
}

std::string artifact_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.output_dir) / name).string();
}

void ensure_output_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) {
        throw Error(ErrorCode::io_error,
                    "cannot create output dir '" + config.output_dir + "'");
    }
}

std::vector<double> first_difference(const std::vector<double>& x) {
    std::vector<double> d(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) d[i - 1] = x[i] - x[i - 1];
    return d;
}

// Index of the first test row (date >= t_break).
std::size_t break_index(const std::vector<Date>& dates, const Date& t_break) {
    auto it = std::lower_bound(dates.begin(), dates.end(), t_break);
    if (it == dates.begin() || it == dates.end()) {
        throw Error(ErrorCode::invalid_argument,
                    "break date leaves an empty training or test sample");
    }
    return static_cast<std::size_t>(it - dates.begin());
}

// Training-sample seeds shared by the backtest and risk stages.
struct HistorySeeds {
    std::vector<double> probi;  // trailing spread values
    std::vector<double> ri;     // realized increments
    std::vector<double> pi;     // predicted increments
};

HistorySeeds build_seeds(const std::vector<double>& spread,
                         const std::vector<double>& fc_next_mean,
                         std::size_t n_train, int rolling_window) {
    HistorySeeds seeds;
    const std::size_t w = std::min<std::size_t>(n_train,
                                                static_cast<std::size_t>(rolling_window));
    seeds.probi.assign(spread.begin() + static_cast<std::ptrdiff_t>(n_train - w),
                       spread.begin() + static_cast<std::ptrdiff_t>(n_train));
    for (std::size_t t = 1; t < n_train; ++t) {
        if (spread[t - 1] != 0.0) seeds.ri.push_back(spread[t] / spread[t - 1] - 1.0);
    }
    for (std::size_t t = 0; t + 1 < n_train; ++t) {
        if (spread[t] != 0.0) seeds.pi.push_back(fc_next_mean[t] / spread[t] - 1.0);
    }
    return seeds;
}

std::vector<double> benchmark_test_returns(const PriceSeries& bench,
                                           const std::vector<Date>& test_dates) {
    std::map<Date, double> by_date;
    for (std::size_t i = 0; i < bench.dates.size(); ++i) {
        by_date[bench.dates[i]] = bench.prices[i];
    }
    std::vector<double> returns;
    returns.reserve(test_dates.size());
    // Last benchmark observation strictly before the test sample.
    auto before = by_date.lower_bound(test_dates.front());
    if (before == by_date.begin()) {
        throw Error(ErrorCode::insufficient_data,
                    "benchmark has no observations before the test sample");
    }
    double prev = std::prev(before)->second;
    for (const Date& d : test_dates) {
        auto it = by_date.find(d);
        if (it == by_date.end()) {
            throw Error(ErrorCode::malformed_input,
                        "benchmark is missing test date " + format_date(d));
        }
        returns.push_back(it->second / prev - 1.0);
        prev = it->second;
    }
    return returns;
}

}  // namespace

void cmd_cointegrate(const RunConfig& config) {
    ensure_output_dir(config);
    auto data = load_data(config);
    auto [train_daily, test_daily] = split(data.daily, config.sample());

    const PricePanel train = config.cointegration_frequency == Frequency::weekly
                                 ? resample_weekly(train_daily)
                                 : train_daily;

    CointegrationArtifact artifact;
    artifact.frequency = config.cointegration_frequency;

    for (Eigen::Index i = 0; i < train.k(); ++i) {
        UnitRootBlock block;
        block.series = train.names[static_cast<std::size_t>(i)];
        auto level = train.column(i);
        block.adf_level = adf_test(level, config.adf_max_lag);
        block.adf_diff = adf_test(first_difference(level), config.adf_max_lag);
        block.kpss_level = kpss_test(level);
        artifact.unit_root.push_back(block);
    }

    artifact.lag_order = select_var_lag(train, config.var_max_lag);
    artifact.result = johansen_trace(train, artifact.lag_order);

    if (artifact.result.selected_rank >= 1) {
        artifact.result = fit_vecm(train, artifact.lag_order, 1);
        auto train_spread = build_spread(train, artifact.result);
        artifact.spread_adf = adf_test(train_spread.values, config.adf_max_lag);
        artifact.spread_kpss = kpss_test(train_spread.values);
        artifact.spread_tests_available = true;
    }
    write_cointegration_json(artifact_path(config, "cointegration.json"), artifact);

    if (artifact.result.selected_rank == 0) {
        throw Error(ErrorCode::no_cointegration,
                    "trace test does not reject zero cointegrating relations");
    }
    // Daily spread over the full sample with the training-estimated weights.
    auto spread = build_spread(data.daily, artifact.result);
    write_spread_csv(artifact_path(config, "spread.csv"), spread);
}

void cmd_filter(const RunConfig& config) {
    ensure_output_dir(config);
    auto spread = read_spread_csv(artifact_path(config, "spread.csv"));
    const std::size_t n_train = break_index(spread.dates, config.t_break);

    std::vector<double> train_values(spread.values.begin(),
                                     spread.values.begin() +
                                         static_cast<std::ptrdiff_t>(n_train));
    auto selection =
        select_num_states(train_values, config.n_state_candidates, config.batch_m);
    auto trace = run_filter_em(spread.values, selection.best_n, config.batch_m);

    ModelSelectionArtifact artifact;
    artifact.selection = selection;
    artifact.batch_m = config.batch_m;
    artifact.delta = config.effective_delta();
    artifact.params_at_break = trace.params_at(static_cast<int>(n_train) - 1);
    artifact.params_final = trace.final_params();
    try {
        artifact.continuous_at_break =
            to_continuous(artifact.params_at_break, artifact.delta);
        artifact.continuous_available = true;
    } catch (const Error&) {
        // Persistence outside (0, 1): no mean-reverting counterpart to report.
        artifact.continuous_available = false;
    }
    write_model_selection_json(artifact_path(config, "model_selection.json"),
                               artifact);
    write_trace_csv(artifact_path(config, "estimate_trace.csv"), trace, spread.dates);
}

namespace {

struct BacktestStage {
    BacktestInput input;
    std::vector<Date> test_dates;
};

BacktestStage assemble_backtest_input(const RunConfig& config) {
    auto spread = read_spread_csv(artifact_path(config, "spread.csv"));
    auto trace = read_trace_csv(artifact_path(config, "estimate_trace.csv"));
    auto coint = read_cointegration_json(artifact_path(config, "cointegration.json"));
    auto data = load_data(config);

    if (trace.dates != spread.dates || data.daily.dates != spread.dates) {
        throw Error(ErrorCode::dimension_mismatch,
                    "spread, panel and trace do not share a date index");
    }
    const std::size_t n_train = break_index(spread.dates, config.t_break);
    const std::size_t n = spread.values.size();

    BacktestStage stage;
    stage.test_dates.assign(spread.dates.begin() + static_cast<std::ptrdiff_t>(n_train),
                            spread.dates.end());

    BacktestInput& input = stage.input;
    input.dates = stage.test_dates;
    input.spread.assign(spread.values.begin() + static_cast<std::ptrdiff_t>(n_train),
                        spread.values.end());
    input.spread_before = spread.values[n_train - 1];
    const Eigen::MatrixXd test_prices =
        data.daily.prices.bottomRows(static_cast<Eigen::Index>(n - n_train));
    input.exposure =
        exposure_series(test_prices, coint.result.beta, coint.result.c0);
    input.fc_mean.resize(n - n_train);
    input.fc_var.resize(n - n_train);
    input.fc_next_mean.resize(n - n_train);
    for (std::size_t t = 0; t < n - n_train; ++t) {
        input.fc_mean[t] = trace.fc_mean[n_train + t - 1];
        input.fc_var[t] = trace.fc_var[n_train + t - 1];
        input.fc_next_mean[t] = trace.fc_mean[n_train + t];
    }
    auto seeds = build_seeds(spread.values, trace.fc_mean, n_train,
                             config.rolling_window_n);
    input.probi_seed = std::move(seeds.probi);
    input.ri_seed = std::move(seeds.ri);
    input.pi_seed = std::move(seeds.pi);
    if (data.benchmark) {
        input.benchmark_returns =
            benchmark_test_returns(*data.benchmark, stage.test_dates);
    }
    return stage;
}

void run_backtest_stage(const RunConfig& config, double cost_c,
                        const std::string& out_dir) {
    RunConfig local = config;
    local.cost_c = cost_c;
    local.output_dir = config.output_dir;  // read artifacts from the main dir
    auto stage = assemble_backtest_input(local);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    BacktestSummary summary;
    summary.cost_c = cost_c;
    for (StrategyKind kind : config.effective_strategies()) {
        auto ledger = run_backtest(stage.input, local.strategy_config(kind));
        write_ledger_csv(
            (fs::path(out_dir) / ("ledger_" + strategy_name(kind) + ".csv")).string(),
            ledger);
        summary.ledgers.push_back(std::move(ledger));
    }
    write_backtest_summary_json(
        (fs::path(out_dir) / "backtest_summary.json").string(), summary);
}

}  // namespace

void cmd_backtest(const RunConfig& config) {
    ensure_output_dir(config);
    run_backtest_stage(config, config.cost_c, config.output_dir);
}

void cmd_risk(const RunConfig& config) {
    ensure_output_dir(config);
    auto spread = read_spread_csv(artifact_path(config, "spread.csv"));
    auto trace = read_trace_csv(artifact_path(config, "estimate_trace.csv"));
    auto coint = read_cointegration_json(artifact_path(config, "cointegration.json"));
    auto data = load_data(config);
    if (trace.dates != spread.dates || data.daily.dates != spread.dates) {
        throw Error(ErrorCode::dimension_mismatch,
                    "spread, panel and trace do not share a date index");
    }
    const std::size_t n_train = break_index(spread.dates, config.t_break);
    const std::size_t horizon = spread.values.size() - n_train;

    RiskInputs inputs;
    inputs.params = trace.row_params[n_train - 1];
    inputs.x_hat_start = trace.probs.row(static_cast<Eigen::Index>(n_train - 1));
    inputs.s0 = spread.values[n_train - 1];
    // Market exposure frozen at the last training prices.
    const Eigen::MatrixXd last_prices =
        data.daily.prices.row(static_cast<Eigen::Index>(n_train - 1));
    inputs.exposure =
        exposure_series(last_prices, coint.result.beta, coint.result.c0)[0];
    for (StrategyKind kind : config.effective_strategies()) {
        inputs.strategies.push_back(config.strategy_config(kind));
    }
    auto seeds = build_seeds(spread.values, trace.fc_mean, n_train,
                             config.rolling_window_n);
    inputs.probi_seed = std::move(seeds.probi);
    inputs.ri_seed = std::move(seeds.ri);
    inputs.pi_seed = std::move(seeds.pi);
    if (data.benchmark) {
        std::vector<Date> test_dates(
            spread.dates.begin() + static_cast<std::ptrdiff_t>(n_train),
            spread.dates.end());
        inputs.benchmark_returns = benchmark_test_returns(*data.benchmark, test_dates);
    }

    SimulationConfig sim;
    sim.n_sim = config.n_sim;
    sim.horizon = static_cast<int>(horizon);
    sim.seed = config.seed;
    sim.var_levels = config.var_levels;
    sim.threads = config.threads;

    auto report = run_risk_analysis(inputs, sim);
    write_risk_report_json(artifact_path(config, "risk_report.json"), report);
    for (std::size_t s = 0; s < report.strategy_names.size(); ++s) {
        if (report.kdes[s].grid.empty()) continue;
        write_kde_csv(
            artifact_path(config, "kde_" + report.strategy_names[s] + ".csv"),
            report.kdes[s]);
    }
}

void cmd_sweep(const RunConfig& config, const std::string& param,
               const std::vector<std::string>& values) {
    ensure_output_dir(config);
    if (values.empty()) {
        throw Error(ErrorCode::invalid_argument, "sweep: no values given");
    }
    std::vector<SweepRow> rows;
    const std::string sweep_dir =
        (fs::path(config.output_dir) / ("sweep_" + param)).string();

    for (const std::string& value : values) {
        RunConfig local = config;
        std::string run_dir = (fs::path(sweep_dir) / value).string();
        bool no_coint = false;
        try {
            if (param == "c") {
                // Reuses the main run's spread/trace artifacts.
                char* end = nullptr;
                double c = std::strtod(value.c_str(), &end);
                if (end != value.c_str() + value.size() || c < 0.0) {
                    throw Error(ErrorCode::invalid_argument,
                                "sweep: bad cost value '" + value + "'");
                }
                run_backtest_stage(config, c, run_dir);
            } else if (param == "t0" || param == "tB") {
                if (param == "t0") {
                    local.t0 = parse_date(value);
                } else {
                    local.t_break = parse_date(value);
                }
                local.output_dir = run_dir;
                local.validate();
                cmd_cointegrate(local);
                cmd_filter(local);
                cmd_backtest(local);
            } else {
                throw Error(ErrorCode::invalid_argument,
                            "sweep: param must be c, t0 or tB");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::no_cointegration) {
                no_coint = true;
            } else {
                throw;
            }
        }
        if (no_coint) {
            SweepRow row;
            row.param = param;
            row.value = value;
            row.strategy = "*";
            row.status = "no_cointegration";
            rows.push_back(row);
            continue;
        }
        // Collect the per-strategy summary of the run.
        std::ifstream in(fs::path(run_dir) / "backtest_summary.json");
        if (!in) {
            throw Error(ErrorCode::io_error, "sweep: missing summary for " + value);
        }
        ordered_json j;
        in >> j;
        for (const auto& [name, entry] : j.at("strategies").items()) {
            SweepRow row;
            row.param = param;
            row.value = value;
            row.strategy = name;
            row.annualized_return = entry.at("R");
            if (!entry.at("SR").is_null()) {
                row.sharpe = entry.at("SR");
                row.sharpe_defined = true;
            }
            row.trade_count = entry.at("trades");
            row.status = "ok";
            rows.push_back(row);
        }
    }
    write_sweep_csv((fs::path(sweep_dir) / ("sweep_" + param + ".csv")).string(),
                    rows);
}

}  // namespace statarb
