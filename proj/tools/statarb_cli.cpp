// statarb command-line front end. Drives the shared library through its C
// interface only.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "statarb/statarb_c.h"

namespace {

struct PipelineDeleter {
    void operator()(sa_pipeline* p) const { sa_pipeline_destroy(p); }
};
using PipelinePtr = std::unique_ptr<sa_pipeline, PipelineDeleter>;

struct GlobalOptions {
    std::string config_path;
    std::string output_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int exit_code(sa_status status) {
    switch (status) {
        case SA_OK: return 0;
        case SA_NO_COINTEGRATION: return 2;
        default: return 1;
    }
}

int run_stage(const GlobalOptions& opts,
              sa_status (*stage)(sa_pipeline*), const char* name) {
    sa_pipeline* raw = nullptr;
    if (sa_pipeline_create(opts.config_path.c_str(), &raw) != SA_OK) {
        std::fprintf(stderr, "error: cannot load config '%s'\n",
                     opts.config_path.c_str());
        return 1;
    }
    PipelinePtr pipeline(raw);
    if (!opts.output_dir.empty()) {
        sa_pipeline_set_output_dir(pipeline.get(), opts.output_dir.c_str());
    }
    if (opts.seed_set) sa_pipeline_set_seed(pipeline.get(), opts.seed);
    sa_status status = stage(pipeline.get());
    if (status == SA_NO_COINTEGRATION) {
        std::fprintf(stderr, "%s: no cointegration — %s\n", name,
                     sa_pipeline_last_error(pipeline.get()));
    } else if (status != SA_OK) {
        std::fprintf(stderr, "%s: error — %s\n", name,
                     sa_pipeline_last_error(pipeline.get()));
    }
    return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cointegration-based statistical arbitrage pipeline"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "run configuration (JSON)")
        ->required();
    app.add_option("--out", opts.output_dir, "override the output directory");
    auto* seed_opt =
        app.add_option("--seed", opts.seed, "override the master seed");

    auto* cointegrate =
        app.add_subcommand("cointegrate", "unit roots, VAR lag, trace test, spread");
    auto* filter =
        app.add_subcommand("filter", "state-count selection and online filtering");
    auto* backtest =
        app.add_subcommand("backtest", "signals, ledgers and performance summary");
    auto* risk = app.add_subcommand("risk", "Monte Carlo VaR and return densities");

    auto* sweep = app.add_subcommand("sweep", "re-run the backtest over a grid");
    std::string sweep_param;
    std::vector<std::string> sweep_values;
    sweep->add_option("--param", sweep_param, "c, t0 or tB")->required();
    sweep->add_option("--values", sweep_values, "grid values")
        ->required()
        ->expected(-1);

    CLI11_PARSE(app, argc, argv);
    opts.seed_set = seed_opt->count() > 0;

    if (cointegrate->parsed()) {
        return run_stage(opts, &sa_pipeline_run_cointegrate, "cointegrate");
    }
    if (filter->parsed()) return run_stage(opts, &sa_pipeline_run_filter, "filter");
    if (backtest->parsed()) {
        return run_stage(opts, &sa_pipeline_run_backtest, "backtest");
    }
    if (risk->parsed()) return run_stage(opts, &sa_pipeline_run_risk, "risk");
    if (sweep->parsed()) {
        sa_pipeline* raw = nullptr;
        if (sa_pipeline_create(opts.config_path.c_str(), &raw) != SA_OK) {
            std::fprintf(stderr, "error: cannot load config '%s'\n",
                         opts.config_path.c_str());
            return 1;
        }
        PipelinePtr pipeline(raw);
        if (!opts.output_dir.empty()) {
            sa_pipeline_set_output_dir(pipeline.get(), opts.output_dir.c_str());
        }
        if (opts.seed_set) sa_pipeline_set_seed(pipeline.get(), opts.seed);
        std::vector<const char*> values;
        values.reserve(sweep_values.size());
        for (const auto& v : sweep_values) values.push_back(v.c_str());
        sa_status status = sa_pipeline_run_sweep(pipeline.get(), sweep_param.c_str(),
                                                 values.data(), values.size());
        if (status != SA_OK) {
            std::fprintf(stderr, "sweep: error — %s\n",
                         sa_pipeline_last_error(pipeline.get()));
        }
        return exit_code(status);
    }
    return 1;
}
