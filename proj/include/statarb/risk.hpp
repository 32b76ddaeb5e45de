// risk.hpp
// Seeded Monte Carlo simulation of the estimated spread model over the test
// horizon, per-strategy value-at-risk and return-distribution estimates.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "statarb/ou_hmm.hpp"
#include "statarb/rng.hpp"
#include "statarb/strategy.hpp"

namespace statarb {

struct SimulationConfig {
    int n_sim = 1000;
    int horizon = 0;  // test-sample length in days
    std::uint64_t seed = 0;
    std::vector<double> var_levels = {0.99, 0.95, 0.90};
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
};

// Stationary distribution of a column-stochastic matrix. *unique is cleared
// when the chain has no unique stationary law.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& pi, bool* unique);

// State path of the given length. The initial state is drawn from the
// stationary distribution; if it is not unique the draw falls back to a
// uniform initial state (flagged through *uniform_fallback).
std::vector<int> simulate_chain(const Eigen::MatrixXd& pi, int horizon, Rng& rng,
                                std::optional<int> initial_state = std::nullopt,
                                bool* uniform_fallback = nullptr);

// y_{t+1} = gamma(X_t) + alpha(X_t) y_t + eta(X_t) z_t from y_0 = s0;
// returns the simulated values (one per chain entry, seed excluded).
std::vector<double> simulate_spread(const HmmParams& params,
                                    std::span<const int> chain, double s0,
                                    Rng& rng);

// The ceil((1 - level) * n)-th smallest daily return.
double empirical_var(std::span<const double> returns, double level);

struct KdeResult {
    std::vector<double> grid;
    std::vector<double> density;
    double bandwidth = 0.0;
};

// Gaussian-kernel density on an even grid over [min - 3h, max + 3h];
// Silverman's rule when no bandwidth is given.
KdeResult kde(std::span<const double> samples,
              std::optional<double> bandwidth = std::nullopt,
              int grid_size = 512);

struct RiskInputs {
    HmmParams params;             // frozen at the break date
    Eigen::VectorXd x_hat_start;  // filtered state at the break date
    double s0 = 0.0;              // last training spread value
    double exposure = 0.0;        // market exposure frozen at the break date
    std::vector<StrategyConfig> strategies;
    std::vector<double> probi_seed;
    std::vector<double> ri_seed;
    std::vector<double> pi_seed;
    // Realized benchmark returns over the test sample; the benchmark is not
    // simulated, so its risk numbers are empirical.
    std::vector<double> benchmark_returns;
};

struct RiskReport {
    std::vector<std::string> strategy_names;
    std::vector<double> levels;
    Eigen::MatrixXd var_mean;   // levels x strategies, averaged across sims
    Eigen::MatrixXd var_tstat;  // mean / standard error across sims
    std::vector<std::vector<double>> annual_returns;  // per strategy, n_sim
    std::vector<std::vector<double>> sharpe_ratios;   // per strategy, n_sim
    std::vector<KdeResult> kdes;  // per strategy; empty grid when degenerate
    double average_abs_tstat = 0.0;
    int n_sim = 0;
    int horizon = 0;
    std::uint64_t seed = 0;
    bool uniform_start_fallback = false;
};

// Per simulation: chain + spread paths, strategy backtests with forecasts
// from the frozen-parameter filter, per-level empirical VaR and annualized
// performance; then a deterministic ordered aggregation across simulations.
RiskReport run_risk_analysis(const RiskInputs& inputs, const SimulationConfig& cfg);

}  // namespace statarb
