// asymptotic_tables.hpp
// Quantile grids of the simulated null distributions used by the unit-root
// and cointegration tests. Data lives in asymptotic_tables.cpp, which is
// produced by tools/gen_asymptotic_tables.py.

#pragma once

#include <array>
#include <cstddef>

namespace statarb::tables {

inline constexpr std::size_t kProbGridSize = 403;
inline constexpr std::size_t kTraceMaxDim = 6;

extern const std::array<double, kProbGridSize> kProbGrid;

// Dickey-Fuller tau, regression with constant / with constant and trend.
extern const std::array<double, kProbGridSize> kDfTauConstQuantiles;
extern const std::array<double, kProbGridSize> kDfTauTrendQuantiles;

// Johansen trace statistic, restricted constant, indexed by (k - r) - 1.
extern const std::array<std::array<double, kProbGridSize>, kTraceMaxDim>
    kTraceRcQuantiles;

// P(stat <= x) by monotone linear interpolation of a quantile grid, clamped
// to the grid's probability range at the ends.
double cdf_from_quantiles(const std::array<double, kProbGridSize>& quantiles,
                          double x);

// Quantile at probability p (linear interpolation on the grid).
double quantile_from_grid(const std::array<double, kProbGridSize>& quantiles,
                          double p);

}  // namespace statarb::tables
