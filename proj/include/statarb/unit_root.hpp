// unit_root.hpp
// ADF unit-root test (lag order by Schwarz criterion, interpolated p-values)
// and the KPSS stationarity test with Bartlett-kernel long-run variance.

#pragma once

#include <optional>
#include <span>
#include <string>

namespace statarb {

enum class Deterministic { constant, constant_trend };

struct UnitRootReport {
    std::string test;          // "ADF" or "KPSS"
    double statistic = 0.0;
    double p_value = 0.0;      // ADF: interpolated; KPSS: clamped to [0.01, 0.10]
    int lags_used = 0;         // ADF: chosen lag; KPSS: bandwidth
    Deterministic deterministic = Deterministic::constant;
    // KPSS only: the significance band the statistic falls in, e.g. the
    // strongest tabulated level at which stationarity is rejected.
    std::string significance_band;
};

// Augmented Dickey-Fuller test. The lag order is chosen over 0..max_lag by
// minimizing the Schwarz criterion on a common effective sample, then the
// regression is refit at the chosen lag on the full available sample.
UnitRootReport adf_test(std::span<const double> series, int max_lag,
                        Deterministic det = Deterministic::constant);

// KPSS test. Null hypothesis is stationarity around a constant (or trend).
// bandwidth: explicit Bartlett truncation lag, or nullopt for the standard
// automatic rule floor(4 * (n/100)^(1/4)).
UnitRootReport kpss_test(std::span<const double> series,
                         std::optional<int> bandwidth = std::nullopt,
                         Deterministic det = Deterministic::constant);

}  // namespace statarb
