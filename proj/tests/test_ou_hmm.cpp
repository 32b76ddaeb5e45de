#include <cmath>
#include <numeric>

#include "doctest.h"
#include "statarb/error.hpp"
#include "statarb/ou_hmm.hpp"
#include "statarb/rng.hpp"
#include "support/enum_oracle.hpp"
#include "support/synthetic.hpp"

using namespace statarb;
using test_support::enumerate_filters;
using test_support::regime_switching_ar1;
using test_support::two_state_params;

namespace {

std::vector<double> simulate_ar1_series(Rng& rng, int n, double gamma,
                                        double alpha, double eta, double y0) {
    std::vector<double> y(static_cast<std::size_t>(n));
    double level = y0;
    for (int t = 0; t < n; ++t) {
        level = gamma + alpha * level + eta * rng.normal();
        y[static_cast<std::size_t>(t)] = level;
    }
    return y;
}

struct OlsAr1 {
    double gamma = 0.0, alpha = 0.0, eta2 = 0.0;
};

// Closed-form AR(1) OLS over rows 1..t of the series (y[0] is the seed).
OlsAr1 ols_ar1(std::span<const double> y, std::size_t t) {
    const double n = static_cast<double>(t);
    double sy = 0, syl = 0, syy = 0, syl2 = 0, sy2 = 0;
    for (std::size_t r = 1; r <= t; ++r) {
        sy += y[r];
        syl += y[r - 1];
        syy += y[r] * y[r - 1];
        syl2 += y[r - 1] * y[r - 1];
        sy2 += y[r] * y[r];
    }
    OlsAr1 fit;
    fit.alpha = (n * syy - sy * syl) / (n * syl2 - syl * syl);
    fit.gamma = (sy - fit.alpha * syl) / n;
    fit.eta2 = (sy2 - 2 * fit.alpha * syy - 2 * fit.gamma * sy +
                fit.alpha * fit.alpha * syl2 + 2 * fit.alpha * fit.gamma * syl +
                fit.gamma * fit.gamma * n) /
               n;
    return fit;
}

}  // namespace

TEST_CASE("discrete/continuous parameter mapping against reference points") {
    HmmParams p;
    p.gamma.resize(2);
    p.alpha.resize(2);
    p.eta.resize(2);
    p.gamma << 0.1632, 0.0869;
    p.alpha << 0.8077, 0.7313;
    p.eta << 1.4312, 1.4832;
    p.pi.resize(2, 2);
    p.pi << 0.7138, 0.3360,
            0.2862, 0.6640;

    auto cp = to_continuous(p, 1.0 / 250.0);
    CHECK(cp.a(0) == doctest::Approx(53.3830).epsilon(0.005));
    CHECK(cp.beta(0) == doctest::Approx(0.8490).epsilon(0.005));
    CHECK(cp.xi(0) == doctest::Approx(25.0833).epsilon(0.005));
    CHECK(cp.a(1) == doctest::Approx(78.2361).epsilon(0.005));
    CHECK(cp.beta(1) == doctest::Approx(0.3233).epsilon(0.005));
    CHECK(cp.xi(1) == doctest::Approx(27.2027).epsilon(0.005));

    SUBCASE("round trip is exact") {
        auto back = to_discrete(cp);
        for (int i = 0; i < 2; ++i) {
            CHECK(back.gamma(i) == doctest::Approx(p.gamma(i)).epsilon(1e-12));
            CHECK(back.alpha(i) == doctest::Approx(p.alpha(i)).epsilon(1e-12));
            CHECK(back.eta(i) == doctest::Approx(p.eta(i)).epsilon(1e-12));
        }
    }
    SUBCASE("alpha outside (0,1) is rejected") {
        HmmParams bad = p;
        bad.alpha(0) = 1.0;
        CHECK_THROWS_AS(to_continuous(bad, 1.0 / 250.0), Error);
    }
}

TEST_CASE("init_params fits the first 20 observations") {
    // Started away from the stationary mean so the prefix identifies the
    // slope; the fit must coincide with the closed-form OLS oracle.
    Rng rng(5);
    auto y = simulate_ar1_series(rng, 60, 0.1, 0.8, 0.01, 2.0);

    auto p1 = init_params(y, 1);
    auto oracle = ols_ar1(std::span<const double>(y.data(), 20), 19);
    CHECK(p1.gamma(0) == doctest::Approx(oracle.gamma).epsilon(1e-10));
    CHECK(p1.alpha(0) == doctest::Approx(oracle.alpha).epsilon(1e-10));
    CHECK(std::abs(p1.gamma(0) - 0.1) < 0.05);
    CHECK(std::abs(p1.alpha(0) - 0.8) < 0.05);
    CHECK(p1.eta(0) > 0.0);

    SUBCASE("two-state spacing factors") {
        auto p2 = init_params(y, 2);
        CHECK(p2.gamma(0) == doctest::Approx(1.3 * p1.gamma(0)));
        CHECK(p2.gamma(1) == doctest::Approx(0.7 * p1.gamma(0)));
        CHECK(p2.alpha(0) == doctest::Approx(1.3 * p1.alpha(0)));
        CHECK(p2.eta(1) == doctest::Approx(0.7 * p1.eta(0)));
        CHECK(p2.pi(0, 0) == doctest::Approx(0.6));
        CHECK(p2.pi(1, 1) == doctest::Approx(0.5));
        CHECK_NOTHROW(p2.validate());
    }
    SUBCASE("three-state transition initialization is column stochastic") {
        auto p3 = init_params(y, 3);
        CHECK(p3.gamma(1) == doctest::Approx(p1.gamma(0)));
        CHECK(p3.pi(0, 0) == doctest::Approx(0.5));
        CHECK(p3.pi(0, 1) == doctest::Approx(0.25));
        CHECK(p3.pi(1, 0) == doctest::Approx(0.3));
        CHECK(p3.pi(1, 1) == doctest::Approx(0.4));
        CHECK(p3.pi(2, 0) == doctest::Approx(0.2));
        CHECK(p3.pi(2, 2) == doctest::Approx(0.6));
        for (int j = 0; j < 3; ++j) {
            CHECK(p3.pi.col(j).sum() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("degenerate prefix is rejected") {
        std::vector<double> constant(30, 1.0);
        CHECK_THROWS_AS(init_params(constant, 1), Error);
        std::vector<double> shorty(10, 1.0);
        CHECK_THROWS_AS(init_params(shorty, 1), Error);
    }
}

TEST_CASE("observation density diagonal") {
    HmmParams p;
    p.gamma = Eigen::VectorXd::Zero(2);
    p.alpha = Eigen::VectorXd::Zero(2);
    p.eta = Eigen::VectorXd::Ones(2);
    p.pi = Eigen::MatrixXd::Identity(2, 2);

    SUBCASE("vanishing exponent") {
        auto d = observation_density_diag(p, 3.7, 0.0);
        CHECK(d(0) == doctest::Approx(1.0));
        CHECK(d(1) == doctest::Approx(1.0));
    }
    SUBCASE("pure persistence at equal observations") {
        p.alpha = Eigen::VectorXd::Ones(2);
        const double c = 1.3;
        auto d = observation_density_diag(p, c, c);
        CHECK(d(0) == doctest::Approx(std::exp(c * c / 2.0)));
    }
    SUBCASE("identical states give identical entries") {
        auto d = observation_density_diag(p, 0.4, -0.2);
        CHECK(d(0) == d(1));
    }
}

TEST_CASE("single-state filter collapses to deterministic counting") {
    HmmParams p;
    p.gamma = Eigen::VectorXd::Constant(1, 0.1);
    p.alpha = Eigen::VectorXd::Constant(1, 0.5);
    p.eta = Eigen::VectorXd::Constant(1, 0.2);
    p.pi = Eigen::MatrixXd::Ones(1, 1);

    Rng rng(19);
    auto y = simulate_ar1_series(rng, 40, 0.1, 0.5, 0.2, 0.0);
    FilterState state(1, y[0]);
    for (std::size_t t = 1; t < y.size(); ++t) {
        filter_step(state, p, y[t]);
        CHECK(state.state_probabilities()(0) == doctest::Approx(1.0));
        CHECK(state.occupations()(0) ==
              doctest::Approx(static_cast<double>(t)).epsilon(1e-12));
        CHECK(state.jump_counts()(0, 0) ==
              doctest::Approx(static_cast<double>(t)).epsilon(1e-12));
    }
}

TEST_CASE("filtered quantities match exhaustive path enumeration") {
    // 50 seeded observation paths for each state count; all filters compared
    // at 1e-9 relative tolerance.
    for (int n_states : {2, 3}) {
        for (int seed = 0; seed < 50; ++seed) {
            Rng rng = Rng::stream(900 + n_states, static_cast<std::uint64_t>(seed));
            HmmParams p;
            p.gamma.resize(n_states);
            p.alpha.resize(n_states);
            p.eta.resize(n_states);
            p.pi.resize(n_states, n_states);
            for (int i = 0; i < n_states; ++i) {
                p.gamma(i) = 0.3 * rng.normal();
                p.alpha(i) = 0.3 + 0.4 * rng.uniform();
                p.eta(i) = 0.2 + 0.5 * rng.uniform();
            }
            for (int j = 0; j < n_states; ++j) {
                double sum = 0.0;
                for (int i = 0; i < n_states; ++i) {
                    p.pi(i, j) = 0.1 + rng.uniform();
                    sum += p.pi(i, j);
                }
                p.pi.col(j) /= sum;
            }
            const int T = 5 + static_cast<int>(rng.uniform() * 3.99);  // 5..8
            std::vector<double> y(static_cast<std::size_t>(T) + 1);
            for (auto& v : y) v = rng.normal();

            FilterState state(n_states, y[0]);
            for (int t = 1; t <= T; ++t) {
                filter_step(state, p, y[static_cast<std::size_t>(t)]);
            }
            auto oracle = enumerate_filters(p, y);

            auto close = [](double a, double b) {
                return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
            };
            for (int i = 0; i < n_states; ++i) {
                CHECK(close(state.state_probabilities()(i), oracle.x_hat(i)));
                CHECK(close(state.occupations()(i), oracle.occ(i)));
                CHECK(close(state.level_sum_y()(i), oracle.sum_y(i)));
                CHECK(close(state.level_sum_ylag()(i), oracle.sum_ylag(i)));
                CHECK(close(state.level_sum_yy()(i), oracle.sum_yy(i)));
                CHECK(close(state.level_sum_y2()(i), oracle.sum_y2(i)));
                CHECK(close(state.level_sum_ylag2()(i), oracle.sum_ylag2(i)));
                for (int j = 0; j < n_states; ++j) {
                    CHECK(close(state.jump_counts()(i, j), oracle.jumps(i, j)));
                }
            }
            CHECK(close(state.log_likelihood(), oracle.log_lik));
        }
    }
}

TEST_CASE("filter recursions are scale invariant") {
    auto p = two_state_params();
    Rng rng(23);
    auto path = regime_switching_ar1(rng, 30, p);
    FilterState a(2, 0.0), b(2, 0.0);
    for (int t = 0; t < 15; ++t) {
        filter_step(a, p, path.y[static_cast<std::size_t>(t)]);
        filter_step(b, p, path.y[static_cast<std::size_t>(t)]);
    }
    b.scale(1e3);
    filter_step(a, p, path.y[15]);
    filter_step(b, p, path.y[15]);
    for (int i = 0; i < 2; ++i) {
        CHECK(a.state_probabilities()(i) ==
              doctest::Approx(b.state_probabilities()(i)).epsilon(1e-12));
        CHECK(a.occupations()(i) ==
              doctest::Approx(b.occupations()(i)).epsilon(1e-12));
    }
}

TEST_CASE("occupation identity and probability-vector invariant") {
    auto p = two_state_params();
    Rng rng(29);
    auto path = regime_switching_ar1(rng, 200, p);
    FilterState state(2, 0.0);
    for (std::size_t t = 0; t < path.y.size(); ++t) {
        filter_step(state, p, path.y[t]);
        auto probs = state.state_probabilities();
        CHECK(probs.minCoeff() >= 0.0);
        CHECK(probs.sum() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(state.occupations().sum() ==
              doctest::Approx(static_cast<double>(t + 1)).epsilon(1e-6));
    }
}

TEST_CASE("log-likelihood is invariant to the rescaling schedule") {
    auto p = two_state_params();
    Rng rng(31);
    auto path = regime_switching_ar1(rng, 60, p);
    FilterState every_step(2, 0.0), every_third(2, 0.0);
    for (std::size_t t = 0; t < path.y.size(); ++t) {
        filter_step(every_step, p, path.y[t], true);
        filter_step(every_third, p, path.y[t], false);
        if (t % 3 == 2) every_third.rescale();
    }
    CHECK(every_step.log_likelihood() ==
          doctest::Approx(every_third.log_likelihood()).epsilon(1e-8));
}

TEST_CASE("filter underflow raises a diagnostic error") {
    HmmParams p;
    p.gamma = Eigen::VectorXd::Zero(1);
    p.alpha = Eigen::VectorXd::Zero(1);
    p.eta = Eigen::VectorXd::Constant(1, 1e-4);
    p.pi = Eigen::MatrixXd::Ones(1, 1);
    FilterState state(1, 0.0);
    // One step with an observation hundreds of sigmas away: the density is
    // exactly zero in double precision.
    CHECK_THROWS_WITH_AS(filter_step(state, p, 1.0),
                         doctest::Contains("underflow"), Error);
}

TEST_CASE("single-state EM update equals closed-form OLS at every batch") {
    Rng rng(37);
    auto y = simulate_ar1_series(rng, 500, 0.5, 0.5, 0.1, 1.0);
    auto trace = run_filter_em(y, 1, 10);
    REQUIRE(trace.snapshots.size() > 5);
    for (std::size_t s = 1; s < trace.snapshots.size(); ++s) {
        const int t = trace.snapshot_times[s];
        auto fit = ols_ar1(y, static_cast<std::size_t>(t));
        const auto& p = trace.snapshots[s];
        CHECK(p.gamma(0) == doctest::Approx(fit.gamma).epsilon(1e-8));
        CHECK(p.alpha(0) == doctest::Approx(fit.alpha).epsilon(1e-8));
        CHECK(p.eta(0) * p.eta(0) == doctest::Approx(fit.eta2).epsilon(1e-8));
    }
}

TEST_CASE("EM keeps parameters of never-visited states") {
    auto prev = two_state_params(0.2, -0.2, 0.7, 0.1);
    FilterState state(2, 0.0);
    // Hand-built statistics: state 2 never visited.
    state.q << 1.0, 0.0;
    state.occ.setZero();
    state.occ(0, 0) = 10.0;  // sigma(O^1 X) mass on component 1
    state.jump.setZero();
    state.jump(0, 0) = 10.0;
    state.sum_y.setZero();
    state.sum_ylag.setZero();
    state.sum_yy.setZero();
    state.sum_y2.setZero();
    state.sum_ylag2.setZero();
    state.sum_y(0, 0) = 2.0;
    state.sum_ylag(0, 0) = 1.0;
    state.sum_yy(0, 0) = 0.5;
    state.sum_y2(0, 0) = 1.5;
    state.sum_ylag2(0, 0) = 0.9;
    auto next = em_update(state, prev);
    CHECK(next.gamma(1) == prev.gamma(1));
    CHECK(next.alpha(1) == prev.alpha(1));
    CHECK(next.eta(1) == prev.eta(1));
    CHECK(next.pi.col(1) == prev.pi.col(1));
    for (int j = 0; j < 2; ++j) {
        CHECK(next.pi.col(j).sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("EM truncates explosive updates to a factor of ten") {
    HmmParams prev;
    prev.gamma = Eigen::VectorXd::Constant(1, 0.01);
    prev.alpha = Eigen::VectorXd::Constant(1, 0.5);
    prev.eta = Eigen::VectorXd::Constant(1, 0.01);
    prev.pi = Eigen::MatrixXd::Ones(1, 1);
    FilterState state(1, 0.0);
    // Statistics implying eta around 50x the previous estimate.
    const double t = 100.0;
    state.q << 1.0;
    state.occ(0, 0) = t;
    state.jump(0, 0) = t;
    state.sum_y(0, 0) = 0.0;
    state.sum_ylag(0, 0) = 0.0;
    state.sum_yy(0, 0) = 0.0;
    state.sum_ylag2(0, 0) = t;       // keeps the regression well posed
    state.sum_y2(0, 0) = t * 0.25;   // residual variance 0.25 -> eta 0.5
    auto next = em_update(state, prev);
    CHECK(next.eta(0) == doctest::Approx(0.1));  // 10 x previous
    CHECK(std::abs(next.gamma(0)) <= 0.1 + 1e-15);
}

TEST_CASE("forecast moments") {
    auto p = two_state_params(1.0, -1.0, 0.5, 0.3);
    SUBCASE("degenerate filtered state") {
        Eigen::VectorXd e1(2);
        e1 << 1.0, 0.0;
        auto f = forecast(p, e1, 2.0);
        CHECK(f.mean == doctest::Approx(1.0 + 0.5 * 2.0));
        CHECK(f.variance == doctest::Approx(0.09));
    }
    SUBCASE("mixed state contracts the parameters") {
        Eigen::VectorXd half(2);
        half << 0.5, 0.5;
        auto f = forecast(p, half, 2.0);
        CHECK(f.mean == doctest::Approx(1.0));  // 0 + 0.5 * 2
        CHECK(f.variance == doctest::Approx(0.09));
        CHECK(f.variance > 0.0);
    }
    SUBCASE("invalid probability vector is rejected") {
        Eigen::VectorXd bad(2);
        bad << 0.7, 0.7;
        CHECK_THROWS_AS(forecast(p, bad, 1.0), Error);
    }
}

TEST_CASE("two-state parameter recovery on synthetic data") {
    auto truth = two_state_params(0.15, -0.15, 0.8, 0.05, 0.9);
    Rng rng(41);
    auto path = regime_switching_ar1(rng, 1100, truth);
    auto trace = run_filter_em(path.y, 2, 10);
    const auto& p = trace.final_params();
    const double g1 = p.gamma(0), g2 = p.gamma(1);
    CHECK(g1 * g2 < 0.0);  // opposite signs
    const double hi = std::max(g1, g2), lo = std::min(g1, g2);
    CHECK(std::abs(hi - 0.15) < 0.05);
    CHECK(std::abs(lo + 0.15) < 0.05);
}

TEST_CASE("batch size changes the path but not the fit quality") {
    auto truth = two_state_params(0.15, -0.15, 0.8, 0.05, 0.9);
    Rng rng(46);
    auto path = regime_switching_ar1(rng, 1100, truth);
    const auto& y = path.y;
    auto every = run_filter_em(y, 2, 1);
    auto batched = run_filter_em(y, 2, 10);
    CHECK(std::abs(every.final_log_lik() - batched.final_log_lik()) <
          0.05 * std::abs(batched.final_log_lik()));
    // Snapshot times follow the batch parameter.
    for (std::size_t s = 1; s < batched.snapshot_times.size(); ++s) {
        CHECK(batched.snapshot_times[s] % 10 == 0);
    }
}

TEST_CASE("state-count selection by Schwarz criterion") {
    SUBCASE("AR(1) data favors one state") {
        int hits = 0;
        for (int s = 0; s < 10; ++s) {
            Rng rng = Rng::stream(1040, static_cast<std::uint64_t>(s));
            auto y = simulate_ar1_series(rng, 600, 0.3, 0.6, 0.1, 0.75);
            std::vector<int> candidates = {1, 2};
            if (select_num_states(y, candidates, 10).best_n == 1) ++hits;
        }
        CHECK(hits > 5);
    }
    SUBCASE("well-separated two-state data favors two states") {
        auto truth = two_state_params(0.15, -0.15, 0.8, 0.05, 0.9);
        int hits = 0;
        for (int s = 0; s < 10; ++s) {
            Rng rng = Rng::stream(1050, static_cast<std::uint64_t>(s));
            auto path = regime_switching_ar1(rng, 900, truth);
            std::vector<int> candidates = {1, 2};
            if (select_num_states(path.y, candidates, 10).best_n == 2) ++hits;
        }
        CHECK(hits > 5);
    }
    SUBCASE("singleton candidate set") {
        Rng rng(47);
        auto y = simulate_ar1_series(rng, 100, 0.1, 0.5, 0.1, 0.2);
        std::vector<int> candidates = {1};
        auto sel = select_num_states(y, candidates, 10);
        CHECK(sel.best_n == 1);
        CHECK(sel.candidates.size() == 1);
        CHECK(sel.candidates[0].forecast_mse > 0.0);
    }
}

TEST_CASE("transition columns remain stochastic across a long run") {
    auto truth = two_state_params();
    Rng rng(53);
    auto path = regime_switching_ar1(rng, 400, truth);
    auto trace = run_filter_em(path.y, 2, 10);
    for (const auto& snap : trace.snapshots) {
        for (int j = 0; j < 2; ++j) {
            CHECK(snap.pi.col(j).sum() == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(snap.pi.col(j).minCoeff() >= 0.0);
            CHECK(snap.pi.col(j).maxCoeff() <= 1.0);
        }
        CHECK(snap.eta.minCoeff() > 0.0);
    }
}
