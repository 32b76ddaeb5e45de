// io.hpp
// Readers and writers for the pipeline artifacts. All numeric output goes
// through one fixed formatter so identical runs produce identical bytes.

#pragma once

#include <string>
#include <vector>

#include "statarb/johansen.hpp"
#include "statarb/ou_hmm.hpp"
#include "statarb/risk.hpp"
#include "statarb/strategy.hpp"
#include "statarb/unit_root.hpp"

namespace statarb {

std::string format_double(double v);  // "%.12g", nan -> "nan"

// --- spread ---------------------------------------------------------------
void write_spread_csv(const std::string& path, const SpreadSeries& spread);
// Reads dates and values; the weights are carried by the cointegration report.
SpreadSeries read_spread_csv(const std::string& path);

// --- filter trace ----------------------------------------------------------
void write_trace_csv(const std::string& path, const EstimateTrace& trace,
                     const std::vector<Date>& dates);

// Per-row view of a stored trace: forecasts, state probabilities and the
// parameter estimate in force after each step.
struct TraceArtifact {
    int n_states = 0;
    std::vector<Date> dates;
    std::vector<double> y;
    Eigen::MatrixXd probs;
    std::vector<double> fc_mean;  // forecast of y_{t+1} made at t
    std::vector<double> fc_var;
    std::vector<double> cum_loglik;
    std::vector<HmmParams> row_params;

    Eigen::Index size() const { return static_cast<Eigen::Index>(y.size()); }
};

TraceArtifact read_trace_csv(const std::string& path);

// --- reports ---------------------------------------------------------------
struct UnitRootBlock {
    std::string series;
    UnitRootReport adf_level;
    UnitRootReport adf_diff;
    UnitRootReport kpss_level;
};

struct CointegrationArtifact {
    Frequency frequency = Frequency::weekly;
    int lag_order = 1;
    std::vector<UnitRootBlock> unit_root;
    CointegrationResult result;
    UnitRootReport spread_adf;
    UnitRootReport spread_kpss;
    bool spread_tests_available = false;
};

void write_cointegration_json(const std::string& path,
                              const CointegrationArtifact& artifact);
// Reads back what downstream stages need: beta, c0, rank, lag order.
CointegrationArtifact read_cointegration_json(const std::string& path);

struct ModelSelectionArtifact {
    ModelSelection selection;
    int batch_m = 10;
    double delta = 1.0 / 250.0;
    HmmParams params_at_break;
    HmmParams params_final;
    // Unavailable when some persistence estimate lies outside (0, 1), i.e.
    // the fitted state is not a mean-reverting discretization.
    bool continuous_available = false;
    ContinuousParams continuous_at_break;
};

void write_model_selection_json(const std::string& path,
                                const ModelSelectionArtifact& artifact);

void write_ledger_csv(const std::string& path, const TradeLedger& ledger);

struct BacktestSummary {
    double cost_c = 0.0;
    std::vector<TradeLedger> ledgers;  // rows may be empty for summaries
};

void write_backtest_summary_json(const std::string& path,
                                 const BacktestSummary& summary);

void write_risk_report_json(const std::string& path, const RiskReport& report);
void write_kde_csv(const std::string& path, const KdeResult& kde);

struct SweepRow {
    std::string param;
    std::string value;
    std::string strategy;
    double annualized_return = 0.0;
    double sharpe = 0.0;
    bool sharpe_defined = false;
    int trade_count = 0;
    std::string status;  // "ok" or "no_cointegration"
};

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace statarb
