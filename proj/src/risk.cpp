#include "statarb/risk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "statarb/error.hpp"

namespace statarb {

void SimulationConfig::validate() const {
    if (n_sim < 1) throw Error(ErrorCode::invalid_argument, "n_sim must be >= 1");
    if (horizon < 2) throw Error(ErrorCode::invalid_argument, "horizon must be >= 2");
    for (double l : var_levels) {
        if (!(l > 0.5 && l < 1.0)) {
            throw Error(ErrorCode::invalid_argument,
                        "VaR levels must lie in (0.5, 1)");
        }
    }
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& pi, bool* unique) {
    const Eigen::Index n = pi.rows();
    if (unique) *unique = true;
    if (n == 1) return Eigen::VectorXd::Ones(1);
    // Solve (pi - I) x = 0 with the normalization sum(x) = 1.
    Eigen::MatrixXd a = pi - Eigen::MatrixXd::Identity(n, n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() != n - 1) {
        if (unique) *unique = false;
        return Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    }
    Eigen::MatrixXd sys = a;
    sys.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    Eigen::VectorXd x = sys.fullPivLu().solve(rhs);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = std::max(x(i), 0.0);
    const double s = x.sum();
    if (!(s > 0.0)) {
        if (unique) *unique = false;
        return Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    }
    return x / s;
}

std::vector<int> simulate_chain(const Eigen::MatrixXd& pi, int horizon, Rng& rng,
                                std::optional<int> initial_state,
                                bool* uniform_fallback) {
    const int n = static_cast<int>(pi.rows());
    if (horizon < 1) {
        throw Error(ErrorCode::invalid_argument, "horizon must be >= 1");
    }
    int state;
    if (initial_state) {
        state = *initial_state;
        if (state < 0 || state >= n) {
            throw Error(ErrorCode::invalid_argument, "initial state out of range");
        }
    } else {
        bool unique = true;
        Eigen::VectorXd pi0 = stationary_distribution(pi, &unique);
        if (!unique && uniform_fallback) *uniform_fallback = true;
        state = rng.categorical({pi0.data(), static_cast<std::size_t>(n)});
    }
    std::vector<int> path(static_cast<std::size_t>(horizon));
    std::vector<double> col(static_cast<std::size_t>(n));
    path[0] = state;
    for (int t = 1; t < horizon; ++t) {
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = pi(i, state);
        state = rng.categorical(col);
        path[static_cast<std::size_t>(t)] = state;
    }
    return path;
}

std::vector<double> simulate_spread(const HmmParams& params,
                                    std::span<const int> chain, double s0,
                                    Rng& rng) {
    std::vector<double> y(chain.size());
    double prev = s0;
    for (std::size_t t = 0; t < chain.size(); ++t) {
        const int s = chain[t];
        prev = params.gamma(s) + params.alpha(s) * prev + params.eta(s) * rng.normal();
        y[t] = prev;
    }
    return y;
}

double empirical_var(std::span<const double> returns, double level) {
    if (returns.empty()) {
        throw Error(ErrorCode::insufficient_data, "VaR of an empty return series");
    }
    std::vector<double> sorted(returns.begin(), returns.end());
    std::sort(sorted.begin(), sorted.end());
    auto n = sorted.size();
    auto k = static_cast<std::size_t>(
        std::ceil((1.0 - level) * static_cast<double>(n)));
    k = std::min(std::max<std::size_t>(k, 1), n);
    return sorted[k - 1];
}

KdeResult kde(std::span<const double> samples, std::optional<double> bandwidth,
              int grid_size) {
    const auto n = samples.size();
    if (n < 2) {
        throw Error(ErrorCode::insufficient_data, "KDE needs at least 2 samples");
    }
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
        throw Error(ErrorCode::numerical_error, "KDE of a zero-variance sample");
    }
    double h;
    if (bandwidth) {
        h = *bandwidth;
        if (!(h > 0.0)) {
            throw Error(ErrorCode::invalid_argument, "bandwidth must be > 0");
        }
    } else {
        // Silverman's rule of thumb.
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        auto type7 = [&](double p) {
            const double idx = p * static_cast<double>(n - 1);
            const auto lo = static_cast<std::size_t>(idx);
            const double w = idx - static_cast<double>(lo);
            return lo + 1 < n ? sorted[lo] * (1.0 - w) + sorted[lo + 1] * w
                              : sorted[lo];
        };
        const double iqr = type7(0.75) - type7(0.25);
        const double spread_est = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
        h = 0.9 * spread_est * std::pow(static_cast<double>(n), -0.2);
    }
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    KdeResult out;
    out.bandwidth = h;
    out.grid.resize(static_cast<std::size_t>(grid_size));
    out.density.resize(static_cast<std::size_t>(grid_size));
    const double lo = *mn - 3.0 * h, hi = *mx + 3.0 * h;
    const double step = (hi - lo) / static_cast<double>(grid_size - 1);
    const double norm = 1.0 / (static_cast<double>(n) * h * std::sqrt(2.0 * M_PI));
    for (int g = 0; g < grid_size; ++g) {
        const double x = lo + step * g;
        double acc = 0.0;
        for (double v : samples) {
            const double z = (x - v) / h;
            acc += std::exp(-0.5 * z * z);
        }
        out.grid[static_cast<std::size_t>(g)] = x;
        out.density[static_cast<std::size_t>(g)] = acc * norm;
    }
    return out;
}

namespace {

struct SimResult {
    // Per strategy: daily returns' VaR by level, annual return, Sharpe.
    Eigen::MatrixXd var;  // levels x strategies
    std::vector<double> annual_return;
    std::vector<double> sharpe;
};

// Forecast sequence from running the frozen-parameter state filter over a
// simulated path.
void frozen_filter_forecasts(const HmmParams& params,
                             const Eigen::VectorXd& x_start, double s0,
                             std::span<const double> y,
                             std::vector<double>& fc_mean,
                             std::vector<double>& fc_var,
                             std::vector<double>& fc_next_mean) {
    const std::size_t h = y.size();
    fc_mean.resize(h);
    fc_var.resize(h);
    fc_next_mean.resize(h);
    Eigen::VectorXd x = x_start;
    double prev = s0;
    ForecastMoments fc = forecast(params, x, prev);
    for (std::size_t t = 0; t < h; ++t) {
        fc_mean[t] = fc.mean;  // prediction of day t made at t-1
        fc_var[t] = fc.variance;
        const Eigen::VectorXd d = observation_density_diag(params, prev, y[t]);
        x = params.pi * d.asDiagonal() * x;
        const double s = x.sum();
        if (!(s > 0.0)) {
            throw Error(ErrorCode::filter_underflow,
                        "state filter underflow on a simulated path");
        }
        x /= s;
        prev = y[t];
        fc = forecast(params, x, prev);
        fc_next_mean[t] = fc.mean;  // prediction of day t+1 made at t
    }
}

SimResult run_one_simulation(const RiskInputs& inputs, const SimulationConfig& cfg,
                             std::uint64_t sim_index, bool* uniform_fallback) {
    Rng rng = Rng::stream(cfg.seed, sim_index);
    const auto chain =
        simulate_chain(inputs.params.pi, cfg.horizon, rng, std::nullopt,
                       uniform_fallback);
    const auto y = simulate_spread(inputs.params, chain, inputs.s0, rng);

    BacktestInput bt;
    bt.spread = y;
    bt.spread_before = inputs.s0;
    bt.exposure.assign(y.size(), inputs.exposure);
    bt.dates.resize(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
        bt.dates[t] = from_serial(static_cast<std::int64_t>(t));
    }
    frozen_filter_forecasts(inputs.params, inputs.x_hat_start, inputs.s0, y,
                            bt.fc_mean, bt.fc_var, bt.fc_next_mean);
    bt.probi_seed = inputs.probi_seed;
    bt.ri_seed = inputs.ri_seed;
    bt.pi_seed = inputs.pi_seed;
    bt.benchmark_returns = inputs.benchmark_returns;

    SimResult res;
    const auto n_strat = inputs.strategies.size();
    res.var.resize(static_cast<Eigen::Index>(cfg.var_levels.size()),
                   static_cast<Eigen::Index>(n_strat));
    res.annual_return.resize(n_strat);
    res.sharpe.resize(n_strat);
    for (std::size_t s = 0; s < n_strat; ++s) {
        // Buy-and-hold runs on the observed benchmark returns carried in the
        // input; every other strategy runs on the simulated path.
        auto ledger = run_backtest(bt, inputs.strategies[s]);
        std::vector<double> returns;
        returns.reserve(ledger.rows.size());
        for (const auto& row : ledger.rows) returns.push_back(row.daily_return);
        for (std::size_t l = 0; l < cfg.var_levels.size(); ++l) {
            res.var(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(s)) =
                empirical_var(returns, cfg.var_levels[l]);
        }
        res.annual_return[s] = ledger.annualized_return;
        res.sharpe[s] = ledger.sharpe_defined
                            ? ledger.sharpe
                            : std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

}  // namespace

RiskReport run_risk_analysis(const RiskInputs& inputs, const SimulationConfig& cfg) {
    cfg.validate();
    inputs.params.validate();
    if (inputs.strategies.empty()) {
        throw Error(ErrorCode::invalid_argument, "no strategies configured");
    }
    for (const auto& s : inputs.strategies) {
        if (s.kind == StrategyKind::buy_and_hold &&
            static_cast<int>(inputs.benchmark_returns.size()) != cfg.horizon) {
            throw Error(ErrorCode::dimension_mismatch,
                        "benchmark returns must cover the simulation horizon");
        }
    }

    const int n_sim = cfg.n_sim;
    std::vector<SimResult> results(static_cast<std::size_t>(n_sim));
    std::vector<char> fallback_flags(static_cast<std::size_t>(n_sim), 0);
    std::vector<std::pair<int, std::string>> failures;
    std::mutex failure_mutex;

    int n_threads = cfg.threads > 0
                        ? cfg.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min(n_threads, n_sim));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n_sim) return;
            try {
                bool fb = false;
                results[static_cast<std::size_t>(i)] =
                    run_one_simulation(inputs, cfg, static_cast<std::uint64_t>(i), &fb);
                fallback_flags[static_cast<std::size_t>(i)] = fb ? 1 : 0;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failures.emplace_back(i, e.what());
            }
        }
    };
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!failures.empty()) {
        auto worst = *std::min_element(failures.begin(), failures.end());
        throw Error(ErrorCode::numerical_error,
                    "simulation " + std::to_string(worst.first) +
                        " failed: " + worst.second);
    }

    const auto n_strat = inputs.strategies.size();
    const auto n_lev = cfg.var_levels.size();
    RiskReport report;
    report.levels = cfg.var_levels;
    report.n_sim = n_sim;
    report.horizon = cfg.horizon;
    report.seed = cfg.seed;
    for (const auto& s : inputs.strategies) {
        report.strategy_names.push_back(strategy_name(s.kind));
    }
    for (char f : fallback_flags) {
        if (f) report.uniform_start_fallback = true;
    }

    report.var_mean.setZero(static_cast<Eigen::Index>(n_lev),
                            static_cast<Eigen::Index>(n_strat));
    report.var_tstat.setZero(static_cast<Eigen::Index>(n_lev),
                             static_cast<Eigen::Index>(n_strat));
    report.annual_returns.assign(n_strat, {});
    report.sharpe_ratios.assign(n_strat, {});
    for (std::size_t s = 0; s < n_strat; ++s) {
        report.annual_returns[s].reserve(static_cast<std::size_t>(n_sim));
        report.sharpe_ratios[s].reserve(static_cast<std::size_t>(n_sim));
    }
    // Ordered reduction by simulation index.
    for (int i = 0; i < n_sim; ++i) {
        const auto& r = results[static_cast<std::size_t>(i)];
        report.var_mean += r.var;
        for (std::size_t s = 0; s < n_strat; ++s) {
            report.annual_returns[s].push_back(r.annual_return[s]);
            report.sharpe_ratios[s].push_back(r.sharpe[s]);
        }
    }
    report.var_mean /= static_cast<double>(n_sim);
    double tstat_sum = 0.0;
    int tstat_count = 0;
    for (std::size_t l = 0; l < n_lev; ++l) {
        for (std::size_t s = 0; s < n_strat; ++s) {
            double ss = 0.0;
            for (int i = 0; i < n_sim; ++i) {
                const double d =
                    results[static_cast<std::size_t>(i)].var(
                        static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(s)) -
                    report.var_mean(static_cast<Eigen::Index>(l),
                                    static_cast<Eigen::Index>(s));
                ss += d * d;
            }
            const double se =
                n_sim > 1 ? std::sqrt(ss / (n_sim - 1.0) / n_sim) : 0.0;
            double t = se > 0.0 ? report.var_mean(static_cast<Eigen::Index>(l),
                                                  static_cast<Eigen::Index>(s)) /
                                      se
                                : std::numeric_limits<double>::quiet_NaN();
            report.var_tstat(static_cast<Eigen::Index>(l),
                             static_cast<Eigen::Index>(s)) = t;
            if (std::isfinite(t)) {
                tstat_sum += std::abs(t);
                ++tstat_count;
            }
        }
    }
    report.average_abs_tstat =
        tstat_count > 0 ? tstat_sum / tstat_count
                        : std::numeric_limits<double>::quiet_NaN();

    // Return-distribution KDEs; degenerate samples are skipped.
    report.kdes.resize(n_strat);
    for (std::size_t s = 0; s < n_strat; ++s) {
        const auto& sample = report.annual_returns[s];
        double mn = *std::min_element(sample.begin(), sample.end());
        double mx = *std::max_element(sample.begin(), sample.end());
        if (sample.size() >= 2 && mx > mn) {
            report.kdes[s] = kde(sample);
        }
    }
    return report;
}

}  // namespace statarb
