#include "statarb/ou_hmm.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ols.hpp"
#include "statarb/error.hpp"

namespace statarb {

namespace {

constexpr double kColumnTol = 1e-10;

// Factor-10 safeguard against unstable batch updates. Sign changes pass
// through; a zero previous estimate leaves the update unconstrained.
double truncate_to_band(double next, double prev) {
    if (prev == 0.0) return next;
    const double hi = 10.0 * std::abs(prev);
    const double lo = 0.1 * std::abs(prev);
    const double mag = std::abs(next);
    if (mag > hi) return std::copysign(hi, next);
    if (mag < lo) return std::copysign(lo, next);
    return next;
}

}  // namespace

void HmmParams::validate() const {
    const int n = n_states();
    if (n < 1 || alpha.size() != n || eta.size() != n || pi.rows() != n ||
        pi.cols() != n) {
        throw Error(ErrorCode::dimension_mismatch, "HmmParams: inconsistent sizes");
    }
    for (int i = 0; i < n; ++i) {
        if (!(eta(i) > 0.0)) {
            throw Error(ErrorCode::invalid_argument, "HmmParams: eta must be > 0");
        }
    }
    for (int j = 0; j < n; ++j) {
        double sum = pi.col(j).sum();
        if (std::abs(sum - 1.0) > kColumnTol) {
            throw Error(ErrorCode::invalid_argument,
                        "HmmParams: transition columns must sum to 1");
        }
        for (int i = 0; i < n; ++i) {
            if (pi(i, j) < 0.0 || pi(i, j) > 1.0) {
                throw Error(ErrorCode::invalid_argument,
                            "HmmParams: transition entries must lie in [0, 1]");
            }
        }
    }
}

ContinuousParams to_continuous(const HmmParams& params, double delta) {
    if (!(delta > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "delta must be > 0");
    }
    const int n = params.n_states();
    ContinuousParams cp;
    cp.delta = delta;
    cp.a.resize(n);
    cp.beta.resize(n);
    cp.xi.resize(n);
    for (int i = 0; i < n; ++i) {
        const double al = params.alpha(i);
        if (!(al > 0.0 && al < 1.0)) {
            throw Error(ErrorCode::invalid_argument,
                        "to_continuous requires 0 < alpha < 1");
        }
        cp.a(i) = -std::log(al) / delta;
        cp.beta(i) = params.gamma(i) / (1.0 - al);
        cp.xi(i) = params.eta(i) *
                   std::sqrt(2.0 * cp.a(i) / (1.0 - std::exp(-2.0 * cp.a(i) * delta)));
    }
    return cp;
}

HmmParams to_discrete(const ContinuousParams& cp) {
    const int n = static_cast<int>(cp.a.size());
    HmmParams p;
    p.gamma.resize(n);
    p.alpha.resize(n);
    p.eta.resize(n);
    p.pi = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        if (!(cp.a(i) > 0.0)) {
            throw Error(ErrorCode::invalid_argument, "to_discrete requires a > 0");
        }
        const double al = std::exp(-cp.a(i) * cp.delta);
        p.alpha(i) = al;
        p.gamma(i) = cp.beta(i) * (1.0 - al);
        p.eta(i) = cp.xi(i) *
                   std::sqrt((1.0 - std::exp(-2.0 * cp.a(i) * cp.delta)) /
                             (2.0 * cp.a(i)));
    }
    return p;
}

HmmParams init_params(std::span<const double> y, int n_states) {
    if (n_states < 1) {
        throw Error(ErrorCode::invalid_argument, "n_states must be >= 1");
    }
    if (y.size() < 20) {
        throw Error(ErrorCode::insufficient_data,
                    "init_params needs at least 20 observations");
    }
    // AR(1) OLS on the first 20 datapoints.
    const int rows = 19;
    Eigen::MatrixXd x(rows, 2);
    Eigen::VectorXd target(rows);
    for (int r = 0; r < rows; ++r) {
        x(r, 0) = 1.0;
        x(r, 1) = y[r];
        target(r) = y[r + 1];
    }
    detail::OlsFit fit;
    try {
        fit = detail::ols(x, target, "init_params");
    } catch (const Error&) {
        throw Error(ErrorCode::numerical_error,
                    "init_params: degenerate OLS on the initial window");
    }
    const double g = fit.coef(0);
    const double a = fit.coef(1);
    const double e = std::sqrt(fit.ssr / rows);
    if (!(e > 0.0)) {
        throw Error(ErrorCode::numerical_error,
                    "init_params: zero residual variance on the initial window");
    }

    HmmParams p;
    p.gamma.resize(n_states);
    p.alpha.resize(n_states);
    p.eta.resize(n_states);
    if (n_states == 1) {
        p.gamma(0) = g;
        p.alpha(0) = a;
        p.eta(0) = e;
        p.pi = Eigen::MatrixXd::Ones(1, 1);
        return p;
    }
    // States spaced by fixed factors around the OLS fit. The level guesses
    // must differ at a scale the filter can resolve: when the fitted level is
    // small relative to the residual noise, the 30% spacing degenerates into
    // near-identical states and the EM stalls at a pooled fit, so the spacing
    // is floored at one residual standard deviation.
    Eigen::VectorXd factors(n_states);
    if (n_states == 2) {
        factors << 1.3, 0.7;
    } else if (n_states == 3) {
        factors << 1.3, 1.0, 0.7;
    } else {
        for (int i = 0; i < n_states; ++i) {
            factors(i) = 1.3 - 0.6 * i / (n_states - 1.0);
        }
    }
    const double spacing = std::max(0.3 * std::abs(g), e);
    for (int i = 0; i < n_states; ++i) {
        p.gamma(i) = g + (factors(i) - 1.0) / 0.3 * spacing;
    }
    p.alpha = factors * a;
    p.eta = factors * e;

    if (n_states == 2) {
        p.pi.resize(2, 2);
        p.pi << 0.6, 0.5,
                0.4, 0.5;
    } else if (n_states == 3) {
        p.pi.resize(3, 3);
        p.pi << 0.5, 0.25, 0.2,
                0.3, 0.40, 0.2,
                0.2, 0.35, 0.6;
    } else {
        p.pi = Eigen::MatrixXd::Constant(n_states, n_states,
                                         0.4 / (n_states - 1.0));
        p.pi.diagonal().setConstant(0.6);
    }
    p.validate();
    return p;
}

Eigen::VectorXd observation_density_diag(const HmmParams& params, double y_prev,
                                         double y_now) {
    const int n = params.n_states();
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) {
        const double resid = y_now - params.alpha(i) * y_prev - params.gamma(i);
        const double z = resid / params.eta(i);
        d(i) = std::exp(-0.5 * (z * z - y_now * y_now)) / params.eta(i);
    }
    return d;
}

FilterState::FilterState(int n_states, double y0)
    : n(n_states),
      q(Eigen::VectorXd::Zero(n_states)),
      jump(Eigen::MatrixXd::Zero(n_states, n_states * n_states)),
      occ(Eigen::MatrixXd::Zero(n_states, n_states)),
      sum_y(Eigen::MatrixXd::Zero(n_states, n_states)),
      sum_ylag(Eigen::MatrixXd::Zero(n_states, n_states)),
      sum_yy(Eigen::MatrixXd::Zero(n_states, n_states)),
      sum_y2(Eigen::MatrixXd::Zero(n_states, n_states)),
      sum_ylag2(Eigen::MatrixXd::Zero(n_states, n_states)),
      y_prev(y0) {
    // The chain is started in the first state.
    q(0) = 1.0;
}

void FilterState::rescale() {
    const double s = q.sum();
    if (!(s > 0.0)) return;
    const double inv = 1.0 / s;
    q *= inv;
    jump *= inv;
    occ *= inv;
    sum_y *= inv;
    sum_ylag *= inv;
    sum_yy *= inv;
    sum_y2 *= inv;
    sum_ylag2 *= inv;
    log_scale += std::log(s);
}

void FilterState::scale(double factor) {
    q *= factor;
    jump *= factor;
    occ *= factor;
    sum_y *= factor;
    sum_ylag *= factor;
    sum_yy *= factor;
    sum_y2 *= factor;
    sum_ylag2 *= factor;
}

Eigen::VectorXd FilterState::state_probabilities() const { return q / q.sum(); }

Eigen::MatrixXd FilterState::jump_counts() const {
    Eigen::MatrixXd counts(n, n);
    const double inv = 1.0 / q.sum();
    for (int to = 0; to < n; ++to) {
        for (int from = 0; from < n; ++from) {
            counts(to, from) = jump.col(to * n + from).sum() * inv;
        }
    }
    return counts;
}

Eigen::VectorXd FilterState::occupations() const {
    return occ.colwise().sum().transpose() / q.sum();
}
Eigen::VectorXd FilterState::level_sum_y() const {
    return sum_y.colwise().sum().transpose() / q.sum();
}
Eigen::VectorXd FilterState::level_sum_ylag() const {
    return sum_ylag.colwise().sum().transpose() / q.sum();
}
Eigen::VectorXd FilterState::level_sum_yy() const {
    return sum_yy.colwise().sum().transpose() / q.sum();
}
Eigen::VectorXd FilterState::level_sum_y2() const {
    return sum_y2.colwise().sum().transpose() / q.sum();
}
Eigen::VectorXd FilterState::level_sum_ylag2() const {
    return sum_ylag2.colwise().sum().transpose() / q.sum();
}

double FilterState::log_likelihood() const { return log_scale + std::log(q.sum()); }

void filter_step(FilterState& state, const HmmParams& params, double y_now,
                 bool rescale) {
    const int n = state.n;
    if (params.n_states() != n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "filter_step: parameter/state size mismatch");
    }
    const double y_prev = state.y_prev;
    const Eigen::VectorXd d = observation_density_diag(params, y_prev, y_now);
    const Eigen::MatrixXd pi_d = params.pi * d.asDiagonal();

    const Eigen::VectorXd w = state.q;
    // Per-source-state increment mass: <q, e_j> d_jj, distributed over the
    // destination column pi.col(j).
    const Eigen::VectorXd base = w.cwiseProduct(d);
    const Eigen::MatrixXd spread_inc = params.pi * base.asDiagonal();

    state.q = pi_d * w;
    state.occ = pi_d * state.occ + spread_inc;
    state.sum_y = pi_d * state.sum_y + y_now * spread_inc;
    state.sum_ylag = pi_d * state.sum_ylag + y_prev * spread_inc;
    state.sum_yy = pi_d * state.sum_yy + (y_now * y_prev) * spread_inc;
    state.sum_y2 = pi_d * state.sum_y2 + (y_now * y_now) * spread_inc;
    state.sum_ylag2 = pi_d * state.sum_ylag2 + (y_prev * y_prev) * spread_inc;
    for (int to = 0; to < n; ++to) {
        for (int from = 0; from < n; ++from) {
            auto col = state.jump.col(to * n + from);
            col = pi_d * col;
            col(to) += base(from) * params.pi(to, from);
        }
    }
    state.y_prev = y_now;
    ++state.steps;

    if (!(state.q.sum() > 0.0)) {
        std::ostringstream msg;
        msg << "filter underflow at step " << state.steps << ": densities [";
        for (int i = 0; i < n; ++i) msg << (i ? ", " : "") << d(i);
        msg << "] for observation " << y_now;
        throw Error(ErrorCode::filter_underflow, msg.str());
    }
    if (rescale) state.rescale();
}

HmmParams em_update(const FilterState& state, const HmmParams& previous) {
    const int n = state.n;
    HmmParams next = previous;

    const Eigen::VectorXd occ = state.occupations();
    const Eigen::MatrixXd jumps = state.jump_counts();
    const Eigen::VectorXd sy = state.level_sum_y();
    const Eigen::VectorXd syl = state.level_sum_ylag();
    const Eigen::VectorXd syy = state.level_sum_yy();
    const Eigen::VectorXd sy2 = state.level_sum_y2();
    const Eigen::VectorXd syl2 = state.level_sum_ylag2();

    // A state updates only once it carries enough filtered occupation to
    // identify its three parameters; below that the per-state regression is
    // dominated by noise (a two-point fit can collapse eta and starve the
    // state permanently). Never-visited states keep their previous values.
    constexpr double kMinOccupation = 3.0;

    // Transition estimate: jumps out of state j over the occupation of j,
    // truncated entrywise, then column-renormalized.
    for (int j = 0; j < n; ++j) {
        if (!(occ(j) >= kMinOccupation)) continue;
        Eigen::VectorXd col = jumps.col(j) / occ(j);
        for (int i = 0; i < n; ++i) {
            col(i) = std::max(truncate_to_band(col(i), previous.pi(i, j)), 0.0);
        }
        const double sum = col.sum();
        if (sum > 0.0) next.pi.col(j) = col / sum;
    }

    // Per-state AR(1) estimates from the filtered sums.
    for (int j = 0; j < n; ++j) {
        if (!(occ(j) >= kMinOccupation)) continue;
        const double det = occ(j) * syl2(j) - syl(j) * syl(j);
        if (!(det > 0.0)) continue;
        const double a_hat = (occ(j) * syy(j) - sy(j) * syl(j)) / det;
        const double g_hat = (sy(j) - a_hat * syl(j)) / occ(j);
        const double e2 =
            (sy2(j) - 2.0 * a_hat * syy(j) - 2.0 * g_hat * sy(j) +
             a_hat * a_hat * syl2(j) + 2.0 * a_hat * g_hat * syl(j) +
             g_hat * g_hat * occ(j)) /
            occ(j);
        next.alpha(j) = truncate_to_band(a_hat, previous.alpha(j));
        next.gamma(j) = truncate_to_band(g_hat, previous.gamma(j));
        if (e2 > 0.0) {
            next.eta(j) = truncate_to_band(std::sqrt(e2), previous.eta(j));
        }
    }
    return next;
}

ForecastMoments forecast(const HmmParams& params, const Eigen::VectorXd& x_hat,
                         double y_now) {
    if (x_hat.size() != params.n_states()) {
        throw Error(ErrorCode::dimension_mismatch, "forecast: state size mismatch");
    }
    if (std::abs(x_hat.sum() - 1.0) > 1e-8 || (x_hat.array() < -1e-12).any()) {
        throw Error(ErrorCode::invalid_argument,
                    "forecast: x_hat is not a probability vector");
    }
    ForecastMoments f;
    f.mean = x_hat.dot(params.gamma) + x_hat.dot(params.alpha) * y_now;
    const double eta_bar = x_hat.dot(params.eta);
    f.variance = eta_bar * eta_bar;
    return f;
}

double EstimateTrace::forecast_mse() const {
    double acc = 0.0;
    const std::size_t count = y.size() - 1;
    for (std::size_t t = 1; t < y.size(); ++t) {
        const double err = y[t] - fc_mean[t - 1];
        acc += err * err;
    }
    return acc / static_cast<double>(count);
}

EstimateTrace run_filter_em(std::span<const double> y, int n_states, int batch_m) {
    if (batch_m < 1) {
        throw Error(ErrorCode::invalid_argument, "batch parameter must be >= 1");
    }
    const int len = static_cast<int>(y.size());
    if (len < 20 + batch_m) {
        throw Error(ErrorCode::insufficient_data,
                    "run_filter_em needs at least 20 + m observations");
    }
    EstimateTrace trace;
    trace.n_states = n_states;
    trace.batch_m = batch_m;
    trace.y.assign(y.begin(), y.end());
    trace.probs.resize(len, n_states);
    trace.fc_mean.resize(len);
    trace.fc_var.resize(len);
    trace.cum_loglik.resize(len);
    trace.snapshot_index.resize(len);

    HmmParams params = init_params(y, n_states);
    trace.snapshots.push_back(params);
    trace.snapshot_times.push_back(0);

    FilterState state(n_states, y[0]);
    auto record = [&](int t) {
        const Eigen::VectorXd probs = state.state_probabilities();
        trace.probs.row(t) = probs.transpose();
        const auto fc = forecast(params, probs, y[static_cast<std::size_t>(t)]);
        trace.fc_mean[t] = fc.mean;
        trace.fc_var[t] = fc.variance;
        trace.cum_loglik[t] = state.log_likelihood();
        trace.snapshot_index[t] = static_cast<int>(trace.snapshots.size()) - 1;
    };
    record(0);
    for (int t = 1; t < len; ++t) {
        filter_step(state, params, y[static_cast<std::size_t>(t)]);
        if (t % batch_m == 0) {
            params = em_update(state, params);
            trace.snapshots.push_back(params);
            trace.snapshot_times.push_back(t);
        }
        record(t);
    }
    return trace;
}

ModelSelection select_num_states(std::span<const double> y,
                                 std::span<const int> candidates, int batch_m) {
    if (candidates.empty()) {
        throw Error(ErrorCode::invalid_argument, "no candidate state counts");
    }
    ModelSelection sel;
    double best_sbic = std::numeric_limits<double>::infinity();
    const double n_steps = static_cast<double>(y.size() - 1);
    for (int n_states : candidates) {
        auto trace = run_filter_em(y, n_states, batch_m);
        ModelSelection::Candidate c;
        c.n_states = n_states;
        c.log_lik = trace.final_log_lik();
        const int k = n_states * (n_states - 1) + 3 * n_states;
        c.sbic = -2.0 * c.log_lik + k * std::log(n_steps);
        c.forecast_mse = trace.forecast_mse();
        sel.candidates.push_back(c);
        if (c.sbic < best_sbic) {
            best_sbic = c.sbic;
            sel.best_n = n_states;
        }
    }
    return sel;
}

}  // namespace statarb
