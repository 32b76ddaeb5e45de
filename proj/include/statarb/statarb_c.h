/* statarb_c.h
 * C interface of the statarb shared library. Pipelines are opaque handles;
 * every call reports success through sa_status and leaves a message
 * retrievable with sa_pipeline_last_error.
 */

#ifndef STATARB_C_H
#define STATARB_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sa_pipeline sa_pipeline;

typedef enum sa_status {
    SA_OK = 0,
    SA_ERROR = 1,
    SA_NO_COINTEGRATION = 2,
} sa_status;

const char* sa_version(void);

/* Pipeline lifecycle. The configuration is a JSON document; see README. */
sa_status sa_pipeline_create(const char* config_path, sa_pipeline** out);
sa_status sa_pipeline_create_from_string(const char* config_json, sa_pipeline** out);
void sa_pipeline_destroy(sa_pipeline* pipeline);

/* Overrides applied on top of the configuration file. */
sa_status sa_pipeline_set_output_dir(sa_pipeline* pipeline, const char* path);
sa_status sa_pipeline_set_seed(sa_pipeline* pipeline, uint64_t seed);

/* Stages. Each writes its artifacts into the output directory and reads its
 * predecessors' artifacts from there. */
sa_status sa_pipeline_run_cointegrate(sa_pipeline* pipeline);
sa_status sa_pipeline_run_filter(sa_pipeline* pipeline);
sa_status sa_pipeline_run_backtest(sa_pipeline* pipeline);
sa_status sa_pipeline_run_risk(sa_pipeline* pipeline);

/* Sweep over "c", "t0" or "tB"; values are decimal costs or ISO dates. */
sa_status sa_pipeline_run_sweep(sa_pipeline* pipeline, const char* param,
                                const char* const* values, size_t n_values);

/* Message describing the last failing call on this handle ("" if none). */
const char* sa_pipeline_last_error(const sa_pipeline* pipeline);

/* Discrete <-> continuous parameter mapping for an n-state model. Inputs and
 * outputs are packed [gamma..., alpha..., eta...] and [a..., beta..., xi...];
 * delta is the time step in years. */
sa_status sa_map_to_continuous(const double* gamma_alpha_eta, size_t n_states,
                               double delta, double* a_beta_xi_out);
sa_status sa_map_to_discrete(const double* a_beta_xi, size_t n_states,
                             double delta, double* gamma_alpha_eta_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STATARB_C_H */
