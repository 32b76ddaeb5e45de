#include "statarb/var.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ols.hpp"
#include "statarb/error.hpp"

namespace statarb {

namespace {

struct VarDesign {
    Eigen::MatrixXd x;  // rows x (1 + k*p)
    Eigen::MatrixXd y;  // rows x k
};

// Rows t = first_row .. n-1 of F_t on [1, F_{t-1}, ..., F_{t-p}].
VarDesign var_design(const PricePanel& panel, int p, Eigen::Index first_row) {
    const Eigen::Index n = panel.size(), k = panel.k();
    const Eigen::Index rows = n - first_row;
    VarDesign d;
    d.x.resize(rows, 1 + k * p);
    d.y.resize(rows, k);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Eigen::Index t = first_row + r;
        d.x(r, 0) = 1.0;
        for (int lag = 1; lag <= p; ++lag) {
            d.x.block(r, 1 + (lag - 1) * k, 1, k) = panel.prices.row(t - lag);
        }
        d.y.row(r) = panel.prices.row(t);
    }
    return d;
}

double log_det_spd(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::numerical_error,
                    "VAR: residual covariance not positive definite");
    }
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

VarModel fit_var_rows(const PricePanel& panel, int p, Eigen::Index first_row) {
    const Eigen::Index k = panel.k();
    auto d = var_design(panel, p, first_row);
    const Eigen::Index rows = d.x.rows(), ncoef = d.x.cols();
    if (rows <= ncoef) {
        throw Error(ErrorCode::insufficient_data, "VAR: panel too short for lag order");
    }

    VarModel model;
    model.p = p;
    model.n_obs = rows;
    model.intercept.resize(k);
    model.intercept_std_err.resize(k);
    model.coefficients.assign(p, Eigen::MatrixXd(k, k));
    model.coef_std_err.assign(p, Eigen::MatrixXd(k, k));
    Eigen::MatrixXd resid(rows, k);
    for (Eigen::Index eq = 0; eq < k; ++eq) {
        auto fit = detail::ols(d.x, d.y.col(eq), "VAR");
        model.intercept(eq) = fit.coef(0);
        model.intercept_std_err(eq) = fit.std_err(0);
        for (int lag = 0; lag < p; ++lag) {
            model.coefficients[lag].row(eq) = fit.coef.segment(1 + lag * k, k);
            model.coef_std_err[lag].row(eq) = fit.std_err.segment(1 + lag * k, k);
        }
        resid.col(eq) = fit.residuals;
    }
    model.residual_covariance = resid.transpose() * resid / static_cast<double>(rows);

    const double ld = log_det_spd(model.residual_covariance);
    const double n = static_cast<double>(rows);
    model.log_likelihood =
        -0.5 * n * (k * std::log(2.0 * std::numbers::pi) + ld + k);
    model.sbic = ld + std::log(n) / n * static_cast<double>(k * ncoef);

    // Companion-form eigenvalue moduli for the stability check.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k * p, k * p);
    for (int lag = 0; lag < p; ++lag) {
        companion.block(0, lag * k, k, k) = model.coefficients[lag];
    }
    if (p > 1) {
        companion.block(k, 0, k * (p - 1), k * (p - 1)) =
            Eigen::MatrixXd::Identity(k * (p - 1), k * (p - 1));
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    model.companion_moduli = es.eigenvalues().array().abs();
    std::sort(model.companion_moduli.begin(), model.companion_moduli.end(),
              std::greater<double>());
    return model;
}

}  // namespace

VarModel fit_var(const PricePanel& panel, int p) {
    if (p < 1) throw Error(ErrorCode::invalid_argument, "VAR: p must be >= 1");
    return fit_var_rows(panel, p, p);
}

int select_var_lag(const PricePanel& panel, int p_max) {
    if (p_max < 1) throw Error(ErrorCode::invalid_argument, "VAR: p_max must be >= 1");
    int best_p = 1;
    double best_sbic = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= p_max; ++p) {
        double sbic = fit_var_rows(panel, p, p_max).sbic;
        if (sbic < best_sbic) {
            best_sbic = sbic;
            best_p = p;
        }
    }
    return best_p;
}

}  // namespace statarb
