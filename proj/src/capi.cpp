// C interface: translates exceptions from the C++ core into status codes and
// per-handle error messages.

#include "statarb/statarb_c.h"

#include <memory>
#include <string>
#include <vector>

#include "statarb/error.hpp"
#include "statarb/ou_hmm.hpp"
#include "statarb/pipeline.hpp"

struct sa_pipeline {
    statarb::RunConfig config;
    std::string last_error;
};

namespace {

sa_status guard(sa_pipeline* pipeline, auto&& fn) {
    try {
        fn();
        if (pipeline) pipeline->last_error.clear();
        return SA_OK;
    } catch (const statarb::Error& e) {
        if (pipeline) pipeline->last_error = e.what();
        return e.code() == statarb::ErrorCode::no_cointegration ? SA_NO_COINTEGRATION
                                                                : SA_ERROR;
    } catch (const std::exception& e) {
        if (pipeline) pipeline->last_error = e.what();
        return SA_ERROR;
    }
}

sa_status create_pipeline(sa_pipeline** out, auto&& make_config) {
    if (!out) return SA_ERROR;
    *out = nullptr;
    try {
        auto handle = std::make_unique<sa_pipeline>();
        handle->config = make_config();
        *out = handle.release();
        return SA_OK;
    } catch (...) {
        return SA_ERROR;
    }
}

}  // namespace

extern "C" {

const char* sa_version(void) { return "0.1.0"; }

sa_status sa_pipeline_create(const char* config_path, sa_pipeline** out) {
    if (!config_path) return SA_ERROR;
    return create_pipeline(
        out, [&] { return statarb::RunConfig::from_json_file(config_path); });
}

sa_status sa_pipeline_create_from_string(const char* config_json,
                                         sa_pipeline** out) {
    if (!config_json) return SA_ERROR;
    return create_pipeline(
        out, [&] { return statarb::RunConfig::from_json_text(config_json); });
}

void sa_pipeline_destroy(sa_pipeline* pipeline) { delete pipeline; }

sa_status sa_pipeline_set_output_dir(sa_pipeline* pipeline, const char* path) {
    if (!pipeline || !path) return SA_ERROR;
    pipeline->config.output_dir = path;
    return SA_OK;
}

sa_status sa_pipeline_set_seed(sa_pipeline* pipeline, uint64_t seed) {
    if (!pipeline) return SA_ERROR;
    pipeline->config.seed = seed;
    return SA_OK;
}

sa_status sa_pipeline_run_cointegrate(sa_pipeline* pipeline) {
    if (!pipeline) return SA_ERROR;
    return guard(pipeline, [&] { statarb::cmd_cointegrate(pipeline->config); });
}

sa_status sa_pipeline_run_filter(sa_pipeline* pipeline) {
    if (!pipeline) return SA_ERROR;
    return guard(pipeline, [&] { statarb::cmd_filter(pipeline->config); });
}

sa_status sa_pipeline_run_backtest(sa_pipeline* pipeline) {
    if (!pipeline) return SA_ERROR;
    return guard(pipeline, [&] { statarb::cmd_backtest(pipeline->config); });
}

sa_status sa_pipeline_run_risk(sa_pipeline* pipeline) {
    if (!pipeline) return SA_ERROR;
    return guard(pipeline, [&] { statarb::cmd_risk(pipeline->config); });
}

sa_status sa_pipeline_run_sweep(sa_pipeline* pipeline, const char* param,
                                const char* const* values, size_t n_values) {
    if (!pipeline || !param || (!values && n_values > 0)) return SA_ERROR;
    return guard(pipeline, [&] {
        std::vector<std::string> v(values, values + n_values);
        statarb::cmd_sweep(pipeline->config, param, v);
    });
}

const char* sa_pipeline_last_error(const sa_pipeline* pipeline) {
    return pipeline ? pipeline->last_error.c_str() : "";
}

sa_status sa_map_to_continuous(const double* gamma_alpha_eta, size_t n_states,
                               double delta, double* a_beta_xi_out) {
    if (!gamma_alpha_eta || !a_beta_xi_out || n_states == 0) return SA_ERROR;
    return guard(nullptr, [&] {
        const auto n = static_cast<Eigen::Index>(n_states);
        statarb::HmmParams p;
        p.gamma = Eigen::Map<const Eigen::VectorXd>(gamma_alpha_eta, n);
        p.alpha = Eigen::Map<const Eigen::VectorXd>(gamma_alpha_eta + n_states, n);
        p.eta = Eigen::Map<const Eigen::VectorXd>(gamma_alpha_eta + 2 * n_states, n);
        p.pi = Eigen::MatrixXd::Identity(n, n);
        auto cp = statarb::to_continuous(p, delta);
        Eigen::Map<Eigen::VectorXd>(a_beta_xi_out, n) = cp.a;
        Eigen::Map<Eigen::VectorXd>(a_beta_xi_out + n_states, n) = cp.beta;
        Eigen::Map<Eigen::VectorXd>(a_beta_xi_out + 2 * n_states, n) = cp.xi;
    });
}

sa_status sa_map_to_discrete(const double* a_beta_xi, size_t n_states,
                             double delta, double* gamma_alpha_eta_out) {
    if (!a_beta_xi || !gamma_alpha_eta_out || n_states == 0) return SA_ERROR;
    return guard(nullptr, [&] {
        const auto n = static_cast<Eigen::Index>(n_states);
        statarb::ContinuousParams cp;
        cp.a = Eigen::Map<const Eigen::VectorXd>(a_beta_xi, n);
        cp.beta = Eigen::Map<const Eigen::VectorXd>(a_beta_xi + n_states, n);
        cp.xi = Eigen::Map<const Eigen::VectorXd>(a_beta_xi + 2 * n_states, n);
        cp.delta = delta;
        auto p = statarb::to_discrete(cp);
        Eigen::Map<Eigen::VectorXd>(gamma_alpha_eta_out, n) = p.gamma;
        Eigen::Map<Eigen::VectorXd>(gamma_alpha_eta_out + n_states, n) = p.alpha;
        Eigen::Map<Eigen::VectorXd>(gamma_alpha_eta_out + 2 * n_states, n) = p.eta;
    });
}

}  // extern "C"
