#include "statarb/unit_root.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "asymptotic_tables.hpp"
#include "ols.hpp"
#include "statarb/error.hpp"

namespace statarb {

namespace {

struct AdfRegression {
    double tau = 0.0;
    double sbic = 0.0;
};

// Rows t = first_row .. n-1 of
//   dy_t = c (+ b*t) + rho*y_{t-1} + sum_{i=1..p} phi_i dy_{t-i} + e_t
AdfRegression adf_regression(std::span<const double> y, int p, int first_row,
                             Deterministic det) {
    const int n = static_cast<int>(y.size());
    const int rows = n - first_row;
    const int k = (det == Deterministic::constant ? 2 : 3) + p;
    if (rows <= k + 1) {
        throw Error(ErrorCode::insufficient_data, "ADF: series too short");
    }
    Eigen::MatrixXd x(rows, k);
    Eigen::VectorXd dy(rows);
    for (int r = 0; r < rows; ++r) {
        const int t = first_row + r;
        int c = 0;
        x(r, c++) = 1.0;
        if (det == Deterministic::constant_trend) x(r, c++) = static_cast<double>(t);
        x(r, c++) = y[t - 1];
        for (int i = 1; i <= p; ++i) x(r, c++) = y[t - i] - y[t - i - 1];
        dy(r) = y[t] - y[t - 1];
    }
    auto fit = detail::ols(x, dy, "ADF");
    const int rho_idx = det == Deterministic::constant ? 1 : 2;
    AdfRegression out;
    out.tau = fit.coef(rho_idx) / fit.std_err(rho_idx);
    out.sbic = rows * std::log(fit.ssr / rows) + k * std::log(static_cast<double>(rows));
    return out;
}

}  // namespace

UnitRootReport adf_test(std::span<const double> series, int max_lag,
                        Deterministic det) {
    const int n = static_cast<int>(series.size());
    if (max_lag < 0) {
        throw Error(ErrorCode::invalid_argument, "ADF: max_lag must be >= 0");
    }
    if (n <= max_lag + 2) {
        throw Error(ErrorCode::insufficient_data, "ADF: series too short");
    }
    // Lag order by Schwarz criterion on the common sample, then refit on the
    // full sample available for the chosen lag.
    int best_p = 0;
    double best_sbic = std::numeric_limits<double>::infinity();
    for (int p = 0; p <= max_lag; ++p) {
        double sbic = adf_regression(series, p, max_lag + 1, det).sbic;
        if (sbic < best_sbic) {
            best_sbic = sbic;
            best_p = p;
        }
    }
    auto reg = adf_regression(series, best_p, best_p + 1, det);

    UnitRootReport report;
    report.test = "ADF";
    report.statistic = reg.tau;
    report.lags_used = best_p;
    report.deterministic = det;
    const auto& table = det == Deterministic::constant
                            ? tables::kDfTauConstQuantiles
                            : tables::kDfTauTrendQuantiles;
    report.p_value = tables::cdf_from_quantiles(table, reg.tau);
    return report;
}

UnitRootReport kpss_test(std::span<const double> series,
                         std::optional<int> bandwidth, Deterministic det) {
    const int n = static_cast<int>(series.size());
    if (n < 20) {
        throw Error(ErrorCode::insufficient_data, "KPSS: need at least 20 observations");
    }
    int l = bandwidth.value_or(
        static_cast<int>(std::floor(4.0 * std::pow(n / 100.0, 0.25))));
    if (l < 0 || l >= n) {
        throw Error(ErrorCode::invalid_argument, "KPSS: invalid bandwidth");
    }

    // Residuals around a constant or a linear trend.
    Eigen::VectorXd e(n);
    if (det == Deterministic::constant) {
        double mean = 0.0;
        for (double v : series) mean += v;
        mean /= n;
        for (int t = 0; t < n; ++t) e(t) = series[t] - mean;
    } else {
        Eigen::MatrixXd x(n, 2);
        Eigen::VectorXd yv(n);
        for (int t = 0; t < n; ++t) {
            x(t, 0) = 1.0;
            x(t, 1) = static_cast<double>(t + 1);
            yv(t) = series[t];
        }
        e = detail::ols(x, yv, "KPSS").residuals;
    }

    double gamma0 = e.squaredNorm() / n;
    UnitRootReport report;
    report.test = "KPSS";
    report.lags_used = l;
    report.deterministic = det;
    if (gamma0 == 0.0) {
        // Exactly constant input: zero partial sums, statistic 0.
        report.statistic = 0.0;
    } else {
        double lrv = gamma0;
        for (int j = 1; j <= l; ++j) {
            double gj = 0.0;
            for (int t = j; t < n; ++t) gj += e(t) * e(t - j);
            gj /= n;
            lrv += 2.0 * (1.0 - j / (l + 1.0)) * gj;
        }
        double s = 0.0, cum = 0.0;
        for (int t = 0; t < n; ++t) {
            cum += e(t);
            s += cum * cum;
        }
        report.statistic = s / (static_cast<double>(n) * n * lrv);
    }

    // Standard asymptotic critical values (levels 10%, 5%, 2.5%, 1%).
    static constexpr double kLevels[4] = {0.10, 0.05, 0.025, 0.01};
    const double* crit;
    if (det == Deterministic::constant) {
        static constexpr double kConstCrit[4] = {0.347, 0.463, 0.574, 0.739};
        crit = kConstCrit;
    } else {
        static constexpr double kTrendCrit[4] = {0.119, 0.146, 0.176, 0.216};
        crit = kTrendCrit;
    }
    const double stat = report.statistic;
    if (stat <= crit[0]) {
        report.p_value = 0.10;
        report.significance_band = "p > 0.10";
    } else if (stat >= crit[3]) {
        report.p_value = 0.01;
        report.significance_band = "p <= 0.01";
    } else {
        for (int i = 0; i < 3; ++i) {
            if (stat < crit[i + 1]) {
                double w = (stat - crit[i]) / (crit[i + 1] - crit[i]);
                report.p_value = kLevels[i] + w * (kLevels[i + 1] - kLevels[i]);
                char buf[48];
                std::snprintf(buf, sizeof(buf), "%.3g < p <= %.3g", kLevels[i + 1],
                              kLevels[i]);
                report.significance_band = buf;
                break;
            }
        }
    }
    return report;
}

}  // namespace statarb
