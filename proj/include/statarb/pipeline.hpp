// pipeline.hpp
// Batch pipeline: declarative run configuration and the four stages
// (cointegrate, filter, backtest, risk) plus parameter sweeps. Each stage
// writes its artifacts under output_dir and later stages read them back.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statarb/dates.hpp"
#include "statarb/series.hpp"
#include "statarb/strategy.hpp"

namespace statarb {

struct SeriesSpec {
    std::string name;
    std::string path;
    std::string date_column = "date";
    std::string price_column = "price";
};

struct RunConfig {
    std::vector<SeriesSpec> series;
    std::optional<SeriesSpec> benchmark;

    Date t0;
    Date t_break;
    Date t_end;

    Frequency cointegration_frequency = Frequency::weekly;
    int adf_max_lag = 12;
    int var_max_lag = 6;

    std::vector<int> n_state_candidates = {1, 2, 3};
    int batch_m = 10;
    std::optional<double> delta;  // default 1/250 (daily filtering)

    std::vector<StrategyKind> strategy_kinds;  // default: all five (+ SP)
    double prob_quantile = 0.975;
    int rolling_window_n = 20;
    double increment_lower_q = 0.025;
    double increment_upper_q = 0.975;
    double cost_c = 0.0080;

    int n_sim = 1000;
    std::vector<double> var_levels = {0.99, 0.95, 0.90};
    std::uint64_t seed = 0;
    int threads = 0;

    std::string output_dir = "out";

    static RunConfig from_json_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
    void validate() const;

    SampleSplit sample() const { return {t0, t_break, t_end}; }

    double effective_delta() const { return delta.value_or(1.0 / 250.0); }
    std::vector<StrategyKind> effective_strategies() const;
    StrategyConfig strategy_config(StrategyKind kind) const;
};

// Stage entry points. Failures throw Error; a rank-zero trace test throws
// Error(no_cointegration) after writing the diagnostic report.
void cmd_cointegrate(const RunConfig& config);
void cmd_filter(const RunConfig& config);
void cmd_backtest(const RunConfig& config);
void cmd_risk(const RunConfig& config);

// Sweeps: param is "c", "t0" or "tB". Cost sweeps reuse the existing filter
// artifacts; date sweeps re-run the pipeline per value, recording a
// "no_cointegration" gap instead of failing.
void cmd_sweep(const RunConfig& config, const std::string& param,
               const std::vector<std::string>& values);

}  // namespace statarb
