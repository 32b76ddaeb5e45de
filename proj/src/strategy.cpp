#include "statarb/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "statarb/error.hpp"

namespace statarb {

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::pv: return "PV";
        case StrategyKind::prob_interval: return "ProbI";
        case StrategyKind::pred_interval: return "PredI";
        case StrategyKind::realized_increment: return "RI";
        case StrategyKind::predicted_increment: return "PI";
        case StrategyKind::buy_and_hold: return "SP";
    }
    return "?";
}

StrategyKind strategy_from_name(const std::string& name) {
    if (name == "PV") return StrategyKind::pv;
    if (name == "ProbI") return StrategyKind::prob_interval;
    if (name == "PredI") return StrategyKind::pred_interval;
    if (name == "RI") return StrategyKind::realized_increment;
    if (name == "PI") return StrategyKind::predicted_increment;
    if (name == "SP" || name == "BuyAndHold") return StrategyKind::buy_and_hold;
    throw Error(ErrorCode::invalid_argument, "unknown strategy '" + name + "'");
}

void StrategyConfig::validate() const {
    if (!(prob_quantile > 0.5 && prob_quantile < 1.0)) {
        throw Error(ErrorCode::invalid_argument, "prob_quantile must be in (0.5, 1)");
    }
    if (rolling_window_n < 2) {
        throw Error(ErrorCode::invalid_argument, "rolling window must be >= 2");
    }
    if (!(increment_lower_q < increment_upper_q)) {
        throw Error(ErrorCode::invalid_argument, "increment quantiles out of order");
    }
    if (cost_c < 0.0) {
        throw Error(ErrorCode::invalid_argument, "cost must be >= 0");
    }
}

namespace {

// Inverse standard normal CDF (Acklam's rational approximation; relative
// error below 1.2e-9, ample for quantile bands).
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

struct WindowMoments {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation
};

WindowMoments window_moments(std::span<const double> w) {
    WindowMoments m;
    for (double v : w) m.mean += v;
    m.mean /= static_cast<double>(w.size());
    double ss = 0.0;
    for (double v : w) ss += (v - m.mean) * (v - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(w.size() - 1));
    return m;
}

}  // namespace

OpenSignal signal_pv(double s_t, const PositionState& pos) {
    if (pos.open) return OpenSignal::hold;
    return s_t != 0.0 ? OpenSignal::open : OpenSignal::flat;
}

OpenSignal signal_probi(double s_t, std::span<const double> trailing_window,
                        const StrategyConfig& cfg, const PositionState& pos,
                        bool* flagged) {
    if (pos.open) return OpenSignal::hold;
    if (trailing_window.size() < static_cast<std::size_t>(cfg.rolling_window_n)) {
        if (flagged) *flagged = true;
        return OpenSignal::flat;
    }
    const auto m = window_moments(
        trailing_window.last(static_cast<std::size_t>(cfg.rolling_window_n)));
    if (m.sd == 0.0) {
        if (flagged) *flagged = true;
        return s_t != m.mean ? OpenSignal::open : OpenSignal::flat;
    }
    const double q = normal_quantile(cfg.prob_quantile);
    const bool inside = s_t > m.mean - q * m.sd && s_t < m.mean + q * m.sd;
    return inside ? OpenSignal::flat : OpenSignal::open;
}

OpenSignal signal_predi(double s_t, double forecast_mean, double forecast_var,
                        const StrategyConfig& cfg, const PositionState& pos) {
    if (pos.open) return OpenSignal::hold;
    if (!(forecast_var > 0.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "prediction-band signal needs a positive forecast variance");
    }
    const double q = normal_quantile(cfg.prob_quantile);
    const double half = q * std::sqrt(forecast_var);
    const bool inside = s_t > forecast_mean - half && s_t < forecast_mean + half;
    return inside ? OpenSignal::flat : OpenSignal::open;
}

double empirical_quantile(std::span<const double> sorted_ascending, double q) {
    const auto n = sorted_ascending.size();
    if (n == 0) {
        throw Error(ErrorCode::insufficient_data, "quantile of an empty sample");
    }
    auto k = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(n)));
    k = std::min(std::max<std::size_t>(k, 1), n);
    return sorted_ascending[k - 1];
}

OpenSignal signal_increment(double x_t, std::span<const double> sorted_history,
                            const StrategyConfig& cfg, const PositionState& pos,
                            bool* flagged) {
    if (pos.open) return OpenSignal::hold;
    if (std::isnan(x_t) || sorted_history.empty()) {
        if (flagged) *flagged = true;
        return OpenSignal::flat;
    }
    const double lo = empirical_quantile(sorted_history, cfg.increment_lower_q);
    const double hi = empirical_quantile(sorted_history, cfg.increment_upper_q);
    const bool inside = x_t > lo && x_t < hi;
    return inside ? OpenSignal::flat : OpenSignal::open;
}

bool closing_rule(double s_t, double s_prev) { return s_t * s_prev <= 0.0; }

double daily_return(double s_t, double s_prev, double exposure, double cost_c) {
    if (!(exposure > 0.0)) {
        throw Error(ErrorCode::numerical_error, "nonpositive market exposure");
    }
    const double move = s_t - s_prev;
    return s_t * move / exposure - cost_c * std::abs(move);
}

std::vector<double> exposure_series(const Eigen::MatrixXd& prices,
                                    const Eigen::VectorXd& beta, double c0) {
    if (prices.cols() != beta.size()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "exposure: panel width does not match weights");
    }
    Eigen::VectorXd v = prices * beta.cwiseAbs();
    v.array() += std::abs(c0);
    return std::vector<double>(v.begin(), v.end());
}

void BacktestInput::validate(StrategyKind kind) const {
    const std::size_t n = dates.size();
    if (n == 0) throw Error(ErrorCode::insufficient_data, "empty test sample");
    if (kind == StrategyKind::buy_and_hold) {
        if (benchmark_returns.size() != n) {
            throw Error(ErrorCode::dimension_mismatch,
                        "benchmark returns not aligned with the test dates");
        }
        return;
    }
    if (spread.size() != n || exposure.size() != n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "spread/exposure not aligned with the test dates");
    }
    const bool needs_fc = kind == StrategyKind::pred_interval ||
                          kind == StrategyKind::predicted_increment;
    if (needs_fc && (fc_mean.size() != n || fc_var.size() != n ||
                     fc_next_mean.size() != n)) {
        throw Error(ErrorCode::dimension_mismatch,
                    "forecasts not aligned with the test dates");
    }
}

TradeLedger run_backtest(const BacktestInput& input, const StrategyConfig& cfg) {
    cfg.validate();
    input.validate(cfg.kind);
    const std::size_t n = input.dates.size();

    TradeLedger ledger;
    ledger.kind = cfg.kind;
    ledger.cost_c = cfg.cost_c;
    ledger.rows.resize(n);

    if (cfg.kind == StrategyKind::buy_and_hold) {
        for (std::size_t t = 0; t < n; ++t) {
            auto& row = ledger.rows[t];
            row.date = input.dates[t];
            row.spread = 0.0;
            row.action = t == 0 ? Action::open : Action::hold;
            row.position = Side::long_spread;
            row.daily_return = input.benchmark_returns[t];
        }
        ledger.trade_count = 1;
        ledger.max_open_length = static_cast<int>(n);
    } else {
        PositionState pos;
        // Expanding increment histories, kept sorted.
        std::vector<double> ri_hist = input.ri_seed;
        std::vector<double> pi_hist = input.pi_seed;
        std::sort(ri_hist.begin(), ri_hist.end());
        std::sort(pi_hist.begin(), pi_hist.end());
        auto insert_sorted = [](std::vector<double>& v, double x) {
            if (std::isnan(x)) return;
            v.insert(std::upper_bound(v.begin(), v.end(), x), x);
        };
        // Trailing spread values for the probability band.
        std::deque<double> trailing(input.probi_seed.begin(), input.probi_seed.end());

        for (std::size_t t = 0; t < n; ++t) {
            const double s_t = input.spread[t];
            const double s_prev = t == 0 ? input.spread_before : input.spread[t - 1];
            auto& row = ledger.rows[t];
            row.date = input.dates[t];
            row.spread = s_t;

            bool closed_today = false;
            if (pos.open) {
                // The position was held over (t-1, t]: the day's move accrues,
                // including on the day the position closes.
                row.daily_return =
                    daily_return(s_t, s_prev, input.exposure[t], cfg.cost_c);
                if (closing_rule(s_t, s_prev)) {
                    ledger.max_open_length =
                        std::max(ledger.max_open_length,
                                 static_cast<int>(t) - pos.opened_index);
                    pos = PositionState{};
                    closed_today = true;
                    row.action = Action::close;
                } else {
                    row.action = Action::hold;
                }
            }
            if (!pos.open && !closed_today) {
                OpenSignal sig = OpenSignal::flat;
                bool flag = false;
                switch (cfg.kind) {
                    case StrategyKind::pv:
                        sig = signal_pv(s_t, pos);
                        break;
                    case StrategyKind::prob_interval: {
                        std::vector<double> window(trailing.begin(), trailing.end());
                        sig = signal_probi(s_t, window, cfg, pos, &flag);
                        break;
                    }
                    case StrategyKind::pred_interval:
                        sig = signal_predi(s_t, input.fc_mean[t], input.fc_var[t],
                                           cfg, pos);
                        break;
                    case StrategyKind::realized_increment: {
                        const double x_t =
                            s_prev != 0.0
                                ? s_t / s_prev - 1.0
                                : std::numeric_limits<double>::quiet_NaN();
                        sig = signal_increment(x_t, ri_hist, cfg, pos, &flag);
                        break;
                    }
                    case StrategyKind::predicted_increment: {
                        const double x_hat =
                            s_t != 0.0
                                ? input.fc_next_mean[t] / s_t - 1.0
                                : std::numeric_limits<double>::quiet_NaN();
                        sig = signal_increment(x_hat, pi_hist, cfg, pos, &flag);
                        break;
                    }
                    case StrategyKind::buy_and_hold:
                        break;
                }
                row.flagged = flag;
                if (sig == OpenSignal::open) {
                    pos.open = true;
                    pos.side = s_t > 0.0 ? Side::short_spread : Side::long_spread;
                    pos.opened_index = static_cast<int>(t);
                    ++ledger.trade_count;
                    row.action = Action::open;
                } else if (!closed_today) {
                    row.action = Action::flat;
                }
            }
            row.position = pos.side;

            // Histories observe every day regardless of trading.
            if (cfg.kind == StrategyKind::prob_interval) {
                trailing.push_back(s_t);
                while (trailing.size() >
                       static_cast<std::size_t>(cfg.rolling_window_n)) {
                    trailing.pop_front();
                }
            } else if (cfg.kind == StrategyKind::realized_increment) {
                if (s_prev != 0.0) insert_sorted(ri_hist, s_t / s_prev - 1.0);
            } else if (cfg.kind == StrategyKind::predicted_increment) {
                if (s_t != 0.0) insert_sorted(pi_hist, input.fc_next_mean[t] / s_t - 1.0);
            }
        }
        if (pos.open) {
            ledger.max_open_length = std::max(
                ledger.max_open_length, static_cast<int>(n) - pos.opened_index);
        }
    }

    // Performance summary: compound return scaled by 250/n, Sharpe ratio of
    // the daily series scaled by sqrt(250).
    double compound = 1.0;
    double mean = 0.0;
    for (const auto& row : ledger.rows) {
        compound *= 1.0 + row.daily_return;
        mean += row.daily_return;
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& row : ledger.rows) {
        var += (row.daily_return - mean) * (row.daily_return - mean);
    }
    var /= static_cast<double>(n);
    ledger.annualized_return = (compound - 1.0) * 250.0 / static_cast<double>(n);
    if (var > 0.0) {
        ledger.sharpe = mean / std::sqrt(var) * std::sqrt(250.0);
        ledger.sharpe_defined = true;
    }
    return ledger;
}

}  // namespace statarb
