#include <algorithm>

#include "asymptotic_tables.hpp"

namespace statarb::tables {

double cdf_from_quantiles(const std::array<double, kProbGridSize>& quantiles,
                          double x) {
    if (x <= quantiles.front()) return kProbGrid.front();
    if (x >= quantiles.back()) return kProbGrid.back();
    auto it = std::upper_bound(quantiles.begin(), quantiles.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - quantiles.begin());
    std::size_t lo = hi - 1;
    double q0 = quantiles[lo], q1 = quantiles[hi];
    double w = (q1 > q0) ? (x - q0) / (q1 - q0) : 0.0;
    return kProbGrid[lo] + w * (kProbGrid[hi] - kProbGrid[lo]);
}

double quantile_from_grid(const std::array<double, kProbGridSize>& quantiles,
                          double p) {
    if (p <= kProbGrid.front()) return quantiles.front();
    if (p >= kProbGrid.back()) return quantiles.back();
    auto it = std::upper_bound(kProbGrid.begin(), kProbGrid.end(), p);
    std::size_t hi = static_cast<std::size_t>(it - kProbGrid.begin());
    std::size_t lo = hi - 1;
    double p0 = kProbGrid[lo], p1 = kProbGrid[hi];
    double w = (p1 > p0) ? (p - p0) / (p1 - p0) : 0.0;
    return quantiles[lo] + w * (quantiles[hi] - quantiles[lo]);
}

}  // namespace statarb::tables
