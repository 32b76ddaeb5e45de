#include "statarb/johansen.hpp"

#include <cmath>

#include "asymptotic_tables.hpp"
#include "ols.hpp"
#include "statarb/error.hpp"

namespace statarb {

namespace {

struct EigenSolution {
    Eigen::VectorXd values;   // descending, k entries
    Eigen::MatrixXd vectors;  // (k+1) x k, columns matched to values
};

// Generalized eigenproblem |mu * S11 - S10 S00^-1 S01| = 0, reduced to a
// symmetric problem through the Cholesky factor of S11. The (k+1)-dimensional
// problem has one structurally zero eigenvalue; the k largest are returned.
EigenSolution solve_eigenproblem(const Eigen::MatrixXd& s00,
                                 const Eigen::MatrixXd& s01,
                                 const Eigen::MatrixXd& s11) {
    const Eigen::Index k = s00.rows();
    Eigen::LLT<Eigen::MatrixXd> llt11(s11);
    Eigen::LLT<Eigen::MatrixXd> llt00(s00);
    if (llt11.info() != Eigen::Success || llt00.info() != Eigen::Success) {
        throw Error(ErrorCode::numerical_error,
                    "johansen: product-moment matrix not positive definite");
    }
    Eigen::MatrixXd s10 = s01.transpose();                       // (k+1) x k
    Eigen::MatrixXd a = llt11.matrixL().solve(s10);              // L^-1 S10
    Eigen::MatrixXd m = a * llt00.solve(a.transpose());          // symmetric
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::numerical_error, "johansen: eigensolver failed");
    }
    EigenSolution out;
    out.values.resize(k);
    out.vectors.resize(k + 1, k);
    // SelfAdjointEigenSolver sorts ascending; keep the k largest, descending.
    for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index src = k - i;  // skip nothing; k+1 values, drop smallest
        double mu = es.eigenvalues()(src);
        out.values(i) = std::min(std::max(mu, 0.0), 1.0 - 1e-14);
        out.vectors.col(i) =
            llt11.matrixL().transpose().solve(es.eigenvectors().col(src));
    }
    return out;
}

void fill_trace_results(CointegrationResult& res, const EigenSolution& eig,
                        Eigen::Index k, Eigen::Index n_obs) {
    if (static_cast<std::size_t>(k) > tables::kTraceMaxDim) {
        throw Error(ErrorCode::invalid_argument,
                    "johansen: critical values embedded for up to 6 variables");
    }
    res.eigenvalues = eig.values;
    res.trace_stats.resize(k);
    res.critical_values.resize(k);
    res.p_values.resize(k);
    res.n_obs = n_obs;
    for (Eigen::Index r = 0; r < k; ++r) {
        double sum = 0.0;
        for (Eigen::Index i = r; i < k; ++i) sum += std::log1p(-eig.values(i));
        res.trace_stats(r) = -static_cast<double>(n_obs) * sum;
        const auto& grid = tables::kTraceRcQuantiles[static_cast<std::size_t>(k - r - 1)];
        res.critical_values(r) = tables::quantile_from_grid(grid, 0.95);
        res.p_values(r) = 1.0 - tables::cdf_from_quantiles(grid, res.trace_stats(r));
    }
    res.selected_rank = static_cast<int>(k);
    for (Eigen::Index r = 0; r < k; ++r) {
        if (res.trace_stats(r) < res.critical_values(r)) {
            res.selected_rank = static_cast<int>(r);
            break;
        }
    }
    // Leading relation, normalized on the first series.
    Eigen::VectorXd v = eig.vectors.col(0);
    if (v(0) == 0.0) {
        throw Error(ErrorCode::numerical_error,
                    "johansen: leading eigenvector has zero first component");
    }
    v /= v(0);
    res.beta = v.head(k);
    res.c0 = v(k);
}

struct VecmDesign {
    Eigen::MatrixXd z0;  // rows x k, dF_t
    Eigen::MatrixXd z1;  // rows x (k+1), [F_{t-1}; 1]
    Eigen::MatrixXd z2;  // rows x (p-1)k, lagged differences
};

VecmDesign vecm_design(const PricePanel& panel, int p) {
    const Eigen::Index n = panel.size(), k = panel.k();
    const Eigen::Index rows = n - p;
    if (rows <= k * p + k + 2) {
        throw Error(ErrorCode::insufficient_data, "johansen: panel too short");
    }
    VecmDesign d;
    d.z0.resize(rows, k);
    d.z1.resize(rows, k + 1);
    d.z2.resize(rows, (p - 1) * k);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Eigen::Index t = p + r;
        d.z0.row(r) = panel.prices.row(t) - panel.prices.row(t - 1);
        d.z1.row(r).head(k) = panel.prices.row(t - 1);
        d.z1(r, k) = 1.0;
        for (int lag = 1; lag < p; ++lag) {
            d.z2.block(r, (lag - 1) * k, 1, k) =
                panel.prices.row(t - lag) - panel.prices.row(t - lag - 1);
        }
    }
    return d;
}

Eigen::MatrixXd residualize(const Eigen::MatrixXd& z, const Eigen::MatrixXd& on) {
    if (on.cols() == 0) return z;
    return z - on * (on.householderQr().solve(z));
}

// Adjustment coefficients and short-run matrices by OLS of dF_t on the
// error-correction term and the lagged differences.
void fill_vecm_ols(CointegrationResult& res, const VecmDesign& d, int p) {
    const Eigen::Index rows = d.z0.rows(), k = d.z0.cols();
    Eigen::VectorXd ect = d.z1.leftCols(k) * res.beta;
    ect.array() += res.c0;
    Eigen::MatrixXd x(rows, 1 + d.z2.cols());
    x.col(0) = ect;
    if (d.z2.cols() > 0) x.rightCols(d.z2.cols()) = d.z2;
    res.alpha.resize(k);
    res.short_run.assign(p - 1, Eigen::MatrixXd(k, k));
    for (Eigen::Index eq = 0; eq < k; ++eq) {
        auto fit = detail::ols(x, d.z0.col(eq), "VECM");
        res.alpha(eq) = fit.coef(0);
        for (int lag = 0; lag < p - 1; ++lag) {
            res.short_run[lag].row(eq) = fit.coef.segment(1 + lag * k, k);
        }
    }
}

CointegrationResult johansen_impl(const PricePanel& panel, int p) {
    if (p < 1) throw Error(ErrorCode::invalid_argument, "johansen: p must be >= 1");
    auto d = vecm_design(panel, p);
    const Eigen::Index rows = d.z0.rows(), k = d.z0.cols();
    Eigen::MatrixXd r0 = residualize(d.z0, d.z2);
    Eigen::MatrixXd r1 = residualize(d.z1, d.z2);
    const double n = static_cast<double>(rows);
    Eigen::MatrixXd s00 = r0.transpose() * r0 / n;
    Eigen::MatrixXd s01 = r0.transpose() * r1 / n;
    Eigen::MatrixXd s11 = r1.transpose() * r1 / n;

    CointegrationResult res;
    res.lag_order = p;
    fill_trace_results(res, solve_eigenproblem(s00, s01, s11), k, rows);
    fill_vecm_ols(res, d, p);
    return res;
}

}  // namespace

CointegrationResult johansen_trace(const PricePanel& panel, int p, DetCase det_case) {
    if (det_case != DetCase::restricted_constant) {
        throw Error(ErrorCode::invalid_argument,
                    "johansen: only the restricted-constant case is supported");
    }
    return johansen_impl(panel, p);
}

CointegrationResult johansen_from_moments(const Eigen::MatrixXd& s00,
                                          const Eigen::MatrixXd& s01,
                                          const Eigen::MatrixXd& s11,
                                          Eigen::Index n_obs) {
    const Eigen::Index k = s00.rows();
    if (s01.rows() != k || s01.cols() != k + 1 || s11.rows() != k + 1 ||
        s11.cols() != k + 1) {
        throw Error(ErrorCode::dimension_mismatch,
                    "johansen: moment matrices have inconsistent shapes");
    }
    CointegrationResult res;
    auto eig = solve_eigenproblem(s00, s01, s11);
    fill_trace_results(res, eig, k, n_obs);
    // alpha from the moments: S01 b (b' S11 b)^-1 with b the normalized vector.
    Eigen::VectorXd b(k + 1);
    b.head(k) = res.beta;
    b(k) = res.c0;
    res.alpha = s01 * b / (b.transpose() * s11 * b)(0);
    return res;
}

CointegrationResult fit_vecm(const PricePanel& panel, int p, int r) {
    if (r != 1) {
        throw Error(ErrorCode::invalid_argument,
                    "VECM: only cointegration rank 1 is supported");
    }
    return johansen_impl(panel, p);
}

SpreadSeries build_spread(const PricePanel& panel, const CointegrationResult& result) {
    if (panel.k() != result.beta.size()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "build_spread: panel width does not match the cointegration vector");
    }
    SpreadSeries s;
    s.dates = panel.dates;
    s.beta = result.beta;
    s.c0 = result.c0;
    Eigen::VectorXd v = panel.prices * result.beta;
    v.array() += result.c0;
    s.values.assign(v.begin(), v.end());
    return s;
}

}  // namespace statarb
