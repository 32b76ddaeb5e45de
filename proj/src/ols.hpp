// ols.hpp
// Small OLS helper shared by the regression-based estimators.

#pragma once

#include <Eigen/Dense>

#include "statarb/error.hpp"

namespace statarb::detail {

struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd std_err;
    Eigen::VectorXd residuals;
    double ssr = 0.0;
    double sigma2 = 0.0;  // SSR / (n - k)
    Eigen::MatrixXd xtx_inv;
};

inline OlsFit ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                  const char* context = "regression") {
    const Eigen::Index n = x.rows(), k = x.cols();
    if (n <= k) {
        throw Error(ErrorCode::insufficient_data,
                    std::string(context) + ": not enough observations");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(1e-10);
    if (qr.rank() < k) {
        throw Error(ErrorCode::numerical_error,
                    std::string(context) + ": rank-deficient regressor matrix");
    }
    OlsFit fit;
    fit.coef = qr.solve(y);
    fit.residuals = y - x * fit.coef;
    fit.ssr = fit.residuals.squaredNorm();
    fit.sigma2 = fit.ssr / static_cast<double>(n - k);
    fit.xtx_inv = (x.transpose() * x).ldlt().solve(
        Eigen::MatrixXd::Identity(k, k));
    fit.std_err = (fit.sigma2 * fit.xtx_inv.diagonal().array()).sqrt();
    return fit;
}

}  // namespace statarb::detail
