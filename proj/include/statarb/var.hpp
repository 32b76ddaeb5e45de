// var.hpp
// Vector autoregression: OLS estimation, Schwarz-criterion lag selection,
// stability diagnostics.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "statarb/series.hpp"

namespace statarb {

struct VarModel {
    int p = 1;
    Eigen::VectorXd intercept;                    // k
    std::vector<Eigen::MatrixXd> coefficients;    // p matrices, k x k
    Eigen::VectorXd intercept_std_err;            // k
    std::vector<Eigen::MatrixXd> coef_std_err;    // p matrices, k x k
    Eigen::MatrixXd residual_covariance;          // ML estimate, k x k
    double log_likelihood = 0.0;
    double sbic = 0.0;
    Eigen::VectorXd companion_moduli;             // eigenvalue moduli, descending
    Eigen::Index n_obs = 0;                       // effective sample size

    bool is_stable() const {
        return companion_moduli.size() > 0 && companion_moduli(0) < 1.0;
    }
};

// Equation-by-equation OLS of F_t on an intercept and p lags.
VarModel fit_var(const PricePanel& panel, int p);

// argmin over p in 1..p_max of the Schwarz criterion, all candidates fit on
// the common effective sample starting at row p_max.
int select_var_lag(const PricePanel& panel, int p_max);

}  // namespace statarb
