// series.hpp
// Price series ingestion, alignment into panels, weekly resampling and
// train/test splitting.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "statarb/dates.hpp"

namespace statarb {

struct PriceSeries {
    std::string name;
    std::vector<Date> dates;     // strictly increasing
    std::vector<double> prices;  // finite, > 0

    std::size_t size() const { return dates.size(); }
};

enum class Frequency { daily, weekly };

// k >= 2 series over an identical date index; prices row t / column i.
struct PricePanel {
    std::vector<std::string> names;
    std::vector<Date> dates;
    Eigen::MatrixXd prices;
    Frequency frequency = Frequency::daily;

    Eigen::Index k() const { return prices.cols(); }
    Eigen::Index size() const { return prices.rows(); }
    std::vector<double> column(Eigen::Index i) const;
};

struct SampleSplit {
    Date t0;       // first date
    Date t_break;  // first test date
    Date t_end;    // last date

    void validate() const;  // t0 < t_break <= t_end
};

struct CsvSchema {
    std::string date_column = "date";
    std::string price_column = "price";
    std::string name;  // series label; defaults to the price column name
};

// Loads one series from a CSV file with a header row. Dates must be ISO-8601,
// strictly increasing, prices finite and positive; any malformed row fails the
// load with its line number.
PriceSeries load_csv(const std::string& path, const CsvSchema& schema);

// Restricts all series to the intersection of their date indices.
PricePanel align(const std::vector<PriceSeries>& series);

// One observation per ISO week: the last available daily observation.
PricePanel resample_weekly(const PricePanel& panel);

// Training panel covers dates < t_break, test panel dates >= t_break.
std::pair<PricePanel, PricePanel> split(const PricePanel& panel, const Date& t_break);

// Restricts the panel to [t0, t_end] and splits at t_break.
std::pair<PricePanel, PricePanel> split(const PricePanel& panel,
                                        const SampleSplit& sample);

// Rows with dates in [first, last].
PricePanel window(const PricePanel& panel, const Date& first, const Date& last);

}  // namespace statarb
