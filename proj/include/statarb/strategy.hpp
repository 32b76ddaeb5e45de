// strategy.hpp
// Opening/closing signal rules, position bookkeeping and mark-to-market
// performance accounting under proportional transaction costs.

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "statarb/dates.hpp"

namespace statarb {

enum class StrategyKind {
    pv,                   // open whenever the spread is nonzero
    prob_interval,        // rolling-window probability band
    pred_interval,        // model-based prediction band
    realized_increment,   // empirical quantiles of realized increments
    predicted_increment,  // empirical quantiles of predicted increments
    buy_and_hold,         // passive benchmark position
};

std::string strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);

struct StrategyConfig {
    StrategyKind kind = StrategyKind::pv;
    double prob_quantile = 0.975;
    int rolling_window_n = 20;
    double increment_lower_q = 0.025;
    double increment_upper_q = 0.975;
    double cost_c = 0.0080;

    void validate() const;
};

enum class Side { none, long_spread, short_spread };
enum class OpenSignal { open, hold, flat };
enum class Action { flat, open, hold, close };

struct PositionState {
    bool open = false;
    Side side = Side::none;
    int opened_index = -1;
};

// Opening rules. Each returns hold when a position is already open.
OpenSignal signal_pv(double s_t, const PositionState& pos);

// Band from the sample mean/sd of the trailing window (most recent value
// last). A zero-width band opens on any nonzero deviation and sets *flagged.
OpenSignal signal_probi(double s_t, std::span<const double> trailing_window,
                        const StrategyConfig& cfg, const PositionState& pos,
                        bool* flagged = nullptr);

OpenSignal signal_predi(double s_t, double forecast_mean, double forecast_var,
                        const StrategyConfig& cfg, const PositionState& pos);

// Realized/predicted increments against the empirical quantile band of their
// expanding history (ascending-sorted). An empty history flags and stays flat.
OpenSignal signal_increment(double x_t, std::span<const double> sorted_history,
                            const StrategyConfig& cfg, const PositionState& pos,
                            bool* flagged = nullptr);

// Close on a sign change; zero counts as a crossing from either side.
bool closing_rule(double s_t, double s_prev);

// Mark-to-market daily return of an open position:
//   r_t = s_t (s_t - s_prev) / exposure - c |s_t - s_prev|
double daily_return(double s_t, double s_prev, double exposure, double cost_c);

// Total market exposure |lambda0| + sum_i |lambda_i| F^i_t per row.
std::vector<double> exposure_series(const Eigen::MatrixXd& prices,
                                    const Eigen::VectorXd& beta, double c0);

// k-th order statistic convention: quantile of order q is the
// ceil(q * n)-th smallest value.
double empirical_quantile(std::span<const double> sorted_ascending, double q);

struct LedgerRow {
    Date date;
    double spread = 0.0;
    Action action = Action::flat;
    Side position = Side::none;  // after the day's action
    double daily_return = 0.0;
    bool flagged = false;  // degenerate band / undefined increment
};

struct TradeLedger {
    StrategyKind kind = StrategyKind::pv;
    double cost_c = 0.0;
    std::vector<LedgerRow> rows;
    double annualized_return = 0.0;
    double sharpe = 0.0;
    bool sharpe_defined = false;
    int trade_count = 0;
    int max_open_length = 0;
};

// Everything a test-sample backtest needs, pre-aligned to the test dates.
struct BacktestInput {
    std::vector<Date> dates;
    std::vector<double> spread;
    double spread_before = 0.0;        // spread on the last training day
    std::vector<double> exposure;      // V_t per test day
    std::vector<double> fc_mean;       // forecast of day t made at t-1
    std::vector<double> fc_var;
    std::vector<double> fc_next_mean;  // forecast of day t+1 made at t
    std::vector<double> probi_seed;    // trailing spread values before day 0
    std::vector<double> ri_seed;       // training realized increments
    std::vector<double> pi_seed;       // training predicted increments
    std::vector<double> benchmark_returns;  // per test day (buy-and-hold only)

    void validate(StrategyKind kind) const;
};

// Walks the test sample in order: evaluates the closing rule first, then the
// opening rule when flat (never reopening on the day a position closes),
// accrues daily returns, and annualizes by 250/n (return) and sqrt(250)
// (Sharpe ratio).
TradeLedger run_backtest(const BacktestInput& input, const StrategyConfig& cfg);

}  // namespace statarb
