// johansen.hpp
// Johansen trace test (restricted constant), VECM estimation and spread
// construction.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "statarb/series.hpp"

namespace statarb {

enum class DetCase { restricted_constant };

struct CointegrationResult {
    Eigen::VectorXd eigenvalues;      // descending, each in [0, 1)
    Eigen::VectorXd trace_stats;      // indexed by r = 0..k-1
    Eigen::VectorXd critical_values;  // 5% level
    Eigen::VectorXd p_values;
    int selected_rank = 0;            // smallest r not rejected at 5%
    Eigen::VectorXd beta;             // cointegration vector, beta(0) = 1
    double c0 = 0.0;                  // constant inside the relation
    Eigen::VectorXd alpha;            // adjustment coefficients
    std::vector<Eigen::MatrixXd> short_run;  // Pi_1..Pi_{p-1} (VECM fit only)
    int lag_order = 1;                // VAR lag order p
    Eigen::Index n_obs = 0;           // effective sample size
};

struct SpreadSeries {
    std::vector<Date> dates;
    std::vector<double> values;  // c0 + beta' F_t
    Eigen::VectorXd beta;
    double c0 = 0.0;
};

// Trace test via reduced-rank regression of the VAR(p) in error-correction
// form with the constant restricted to the cointegrating relation.
CointegrationResult johansen_trace(const PricePanel& panel, int p,
                                   DetCase det_case = DetCase::restricted_constant);

// Same eigenproblem from precomputed product-moment matrices. S01 is
// k x (k+1), S11 is (k+1) x (k+1) with the constant as the last coordinate.
CointegrationResult johansen_from_moments(const Eigen::MatrixXd& s00,
                                          const Eigen::MatrixXd& s01,
                                          const Eigen::MatrixXd& s11,
                                          Eigen::Index n_obs);

// Full VECM at cointegration rank r (only r = 1 is supported): beta, c0,
// alpha and the short-run matrices.
CointegrationResult fit_vecm(const PricePanel& panel, int p, int r);

SpreadSeries build_spread(const PricePanel& panel, const CointegrationResult& result);

}  // namespace statarb
