// ou_hmm.hpp
// Discrete-time mean-reverting spread model modulated by a hidden Markov
// chain: y_{t+1} = gamma(X_t) + alpha(X_t) y_t + eta(X_t) z_t.
//
// The chain is filtered under a reference measure through unnormalized linear
// recursions; parameters are re-estimated online by batchwise EM updates
// built from filtered jump counts, occupation times and level sums.

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace statarb {

struct HmmParams {
    Eigen::VectorXd gamma;  // per-state level (spread units)
    Eigen::VectorXd alpha;  // per-state persistence
    Eigen::VectorXd eta;    // per-state conditional std. dev., > 0
    // pi(i, j) = P(X_{t+1} = e_i | X_t = e_j); columns sum to 1, so that
    // E[X_{t+1} | X_t] = pi * X_t.
    Eigen::MatrixXd pi;

    int n_states() const { return static_cast<int>(gamma.size()); }
    void validate() const;
};

struct ContinuousParams {
    Eigen::VectorXd a;     // mean-reversion speed per year, > 0
    Eigen::VectorXd beta;  // long-run mean (spread units)
    Eigen::VectorXd xi;    // volatility per sqrt(year), > 0
    double delta = 1.0 / 250.0;  // time step in years
};

// alpha = exp(-a delta), gamma = beta (1 - alpha),
// eta = xi sqrt((1 - exp(-2 a delta)) / (2a)); to_discrete inverts exactly.
ContinuousParams to_continuous(const HmmParams& params, double delta);
HmmParams to_discrete(const ContinuousParams& cp);

// Initial guesses from an AR(1) OLS fit of the first 20 observations, states
// spread around the fit by fixed factors, transition matrix mildly
// asymmetric to break symmetry across states.
HmmParams init_params(std::span<const double> y, int n_states);

// Diagonal of the per-observation change-of-measure factor by state:
//   d_i = (1/eta_i) exp(-((y_now - alpha_i y_prev - gamma_i)^2/eta_i^2
//                          - y_now^2) / 2)
Eigen::VectorXd observation_density_diag(const HmmParams& params, double y_prev,
                                         double y_now);

// Unnormalized filters. q is the filtered chain estimate; every other
// functional H is tracked as the vector sigma(H X)_t so its filtered value is
// <1, sigma(HX)> / <1, q>. All recursions are homogeneous in the common
// scale, which rescale() resets while accumulating log factors.
struct FilterState {
    int n = 0;
    Eigen::VectorXd q;
    Eigen::MatrixXd jump;       // n x n^2; column to*n + from = sigma(J X)
    Eigen::MatrixXd occ;        // column j = sigma(O^j X)
    Eigen::MatrixXd sum_y;      // column j = sigma(T^j X), increment y_t
    Eigen::MatrixXd sum_ylag;   // increment y_{t-1}
    Eigen::MatrixXd sum_yy;     // increment y_t y_{t-1}
    Eigen::MatrixXd sum_y2;     // increment y_t^2
    Eigen::MatrixXd sum_ylag2;  // increment y_{t-1}^2
    double log_scale = 0.0;
    int steps = 0;
    double y_prev = 0.0;

    FilterState(int n_states, double y0);

    void rescale();
    void scale(double factor);  // multiplies every unnormalized quantity

    Eigen::VectorXd state_probabilities() const;
    Eigen::MatrixXd jump_counts() const;  // (to, from)
    Eigen::VectorXd occupations() const;
    Eigen::VectorXd level_sum_y() const;
    Eigen::VectorXd level_sum_ylag() const;
    Eigen::VectorXd level_sum_yy() const;
    Eigen::VectorXd level_sum_y2() const;
    Eigen::VectorXd level_sum_ylag2() const;

    // Sum of accumulated log rescaling factors; invariant to the rescaling
    // schedule.
    double log_likelihood() const;
};

// One observation. Throws Error(filter_underflow) if the updated q is
// exactly zero, reporting the offending densities.
void filter_step(FilterState& state, const HmmParams& params, double y_now,
                 bool rescale = true);

// Batchwise EM update from the current filtered statistics. States with zero
// filtered occupation keep their previous parameters; every updated quantity
// is truncated to within a factor 10 of its previous magnitude; transition
// columns are renormalized.
HmmParams em_update(const FilterState& state, const HmmParams& previous);

struct ForecastMoments {
    double mean = 0.0;
    double variance = 0.0;
};

// One-step-ahead moments with the parameter functions evaluated at the
// filtered state: mean = gamma(x_hat) + alpha(x_hat) y, var = eta(x_hat)^2.
ForecastMoments forecast(const HmmParams& params, const Eigen::VectorXd& x_hat,
                         double y_now);

struct EstimateTrace {
    int n_states = 0;
    int batch_m = 0;
    std::vector<double> y;
    Eigen::MatrixXd probs;          // row t = filtered state after step t
    std::vector<double> fc_mean;    // forecast of y_{t+1} made at t
    std::vector<double> fc_var;
    std::vector<double> cum_loglik;
    std::vector<HmmParams> snapshots;   // [0] = initial guess
    std::vector<int> snapshot_times;    // filter steps, multiples of batch_m
    std::vector<int> snapshot_index;    // per row: estimate in force after step t

    const HmmParams& params_at(int t) const { return snapshots[snapshot_index[t]]; }
    const HmmParams& final_params() const { return snapshots.back(); }
    double final_log_lik() const { return cum_loglik.back(); }
    double forecast_mse() const;
    Eigen::Index size() const { return static_cast<Eigen::Index>(y.size()); }
};

// Initializes on the first 20 observations, filters every observation and
// applies an EM update every batch_m steps.
EstimateTrace run_filter_em(std::span<const double> y, int n_states, int batch_m);

struct ModelSelection {
    struct Candidate {
        int n_states = 0;
        double log_lik = 0.0;
        double sbic = 0.0;
        double forecast_mse = 0.0;
    };
    int best_n = 1;
    std::vector<Candidate> candidates;
};

// Schwarz criterion over candidate state counts: -2 logL + k ln(n) with
// k = N(N-1) + 3N free parameters. The forecast MSE is reported alongside.
ModelSelection select_num_states(std::span<const double> y,
                                 std::span<const int> candidates, int batch_m);

}  // namespace statarb
