#include "statarb/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "statarb/error.hpp"

namespace statarb {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim whitespace and stray CR
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_price(const std::string& text) {
    if (text.empty()) {
        throw Error(ErrorCode::malformed_input, "empty price field");
    }
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw Error(ErrorCode::malformed_input, "unparsable price '" + text + "'");
    }
    if (!std::isfinite(v) || v <= 0.0) {
        throw Error(ErrorCode::malformed_input,
                    "price must be finite and > 0, got '" + text + "'");
    }
    return v;
}

}  // namespace

std::vector<double> PricePanel::column(Eigen::Index i) const {
    const auto col = prices.col(i);
    return std::vector<double>(col.begin(), col.end());
}

PriceSeries load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::malformed_input, path + ": missing header row");
    }
    auto header = split_line(line);
    auto find_col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw Error(ErrorCode::malformed_input,
                        path + ": no column named '" + name + "'");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t date_idx = find_col(schema.date_column);
    const std::size_t price_idx = find_col(schema.price_column);

    PriceSeries out;
    out.name = schema.name.empty() ? schema.price_column : schema.name;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_line(line);
        if (fields.size() <= std::max(date_idx, price_idx)) {
            throw Error(ErrorCode::malformed_input,
                        path + ":" + std::to_string(line_no) + ": too few fields");
        }
        Date d;
        double p;
        try {
            d = parse_date(fields[date_idx]);
            p = parse_price(fields[price_idx]);
        } catch (const Error& e) {
            throw Error(ErrorCode::malformed_input,
                        path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!out.dates.empty()) {
            if (d == out.dates.back()) {
                throw Error(ErrorCode::malformed_input,
                            path + ":" + std::to_string(line_no) + ": duplicate date " +
                                format_date(d));
            }
            if (d < out.dates.back()) {
                throw Error(ErrorCode::malformed_input,
                            path + ":" + std::to_string(line_no) +
                                ": dates not increasing at " + format_date(d));
            }
        }
        out.dates.push_back(d);
        out.prices.push_back(p);
    }
    if (out.dates.empty()) {
        throw Error(ErrorCode::malformed_input, path + ": no data rows");
    }
    return out;
}

PricePanel align(const std::vector<PriceSeries>& series) {
    if (series.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "align needs at least 2 series");
    }
    // Intersection of date indices, preserving order.
    std::vector<Date> common = series[0].dates;
    for (std::size_t i = 1; i < series.size(); ++i) {
        std::vector<Date> next;
        std::set_intersection(common.begin(), common.end(), series[i].dates.begin(),
                              series[i].dates.end(), std::back_inserter(next));
        common.swap(next);
    }
    if (common.empty()) {
        throw Error(ErrorCode::insufficient_data,
                    "series have no dates in common");
    }
    PricePanel panel;
    panel.dates = common;
    panel.prices.resize(static_cast<Eigen::Index>(common.size()),
                        static_cast<Eigen::Index>(series.size()));
    for (std::size_t i = 0; i < series.size(); ++i) {
        panel.names.push_back(series[i].name);
        std::size_t j = 0;
        for (std::size_t t = 0; t < common.size(); ++t) {
            while (series[i].dates[j] < common[t]) ++j;
            panel.prices(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(i)) =
                series[i].prices[j];
        }
    }
    panel.frequency = Frequency::daily;
    return panel;
}

PricePanel resample_weekly(const PricePanel& panel) {
    if (panel.frequency != Frequency::daily) {
        throw Error(ErrorCode::invalid_argument, "panel is not daily");
    }
    if (panel.size() == 0) {
        throw Error(ErrorCode::insufficient_data, "empty panel");
    }
    // Keep the last available row of every ISO week.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index t = 0; t < panel.size(); ++t) {
        const bool last_of_week =
            t + 1 == panel.size() ||
            iso_week(panel.dates[static_cast<std::size_t>(t)]) !=
                iso_week(panel.dates[static_cast<std::size_t>(t) + 1]);
        if (last_of_week) keep.push_back(t);
    }
    PricePanel out;
    out.names = panel.names;
    out.frequency = Frequency::weekly;
    out.prices.resize(static_cast<Eigen::Index>(keep.size()), panel.k());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        out.dates.push_back(panel.dates[static_cast<std::size_t>(keep[r])]);
        out.prices.row(static_cast<Eigen::Index>(r)) = panel.prices.row(keep[r]);
    }
    return out;
}

std::pair<PricePanel, PricePanel> split(const PricePanel& panel, const Date& t_break) {
    auto cut = std::lower_bound(panel.dates.begin(), panel.dates.end(), t_break);
    const auto n_train = static_cast<Eigen::Index>(cut - panel.dates.begin());
    if (n_train == 0 || n_train == panel.size()) {
        throw Error(ErrorCode::invalid_argument,
                    "break date " + format_date(t_break) +
                        " leaves an empty training or test sample");
    }
    PricePanel train, test;
    train.names = test.names = panel.names;
    train.frequency = test.frequency = panel.frequency;
    train.dates.assign(panel.dates.begin(), cut);
    test.dates.assign(cut, panel.dates.end());
    train.prices = panel.prices.topRows(n_train);
    test.prices = panel.prices.bottomRows(panel.size() - n_train);
    return {std::move(train), std::move(test)};
}

void SampleSplit::validate() const {
    if (!(t0 < t_break) || !(t_break <= t_end)) {
        throw Error(ErrorCode::invalid_argument,
                    "sample split needs t0 < t_break <= t_end");
    }
}

std::pair<PricePanel, PricePanel> split(const PricePanel& panel,
                                        const SampleSplit& sample) {
    sample.validate();
    return split(window(panel, sample.t0, sample.t_end), sample.t_break);
}

PricePanel window(const PricePanel& panel, const Date& first, const Date& last) {
    auto lo = std::lower_bound(panel.dates.begin(), panel.dates.end(), first);
    auto hi = std::upper_bound(panel.dates.begin(), panel.dates.end(), last);
    if (lo >= hi) {
        throw Error(ErrorCode::insufficient_data, "window selects no observations");
    }
    PricePanel out;
    out.names = panel.names;
    out.frequency = panel.frequency;
    out.dates.assign(lo, hi);
    const auto start = static_cast<Eigen::Index>(lo - panel.dates.begin());
    out.prices = panel.prices.middleRows(start, static_cast<Eigen::Index>(hi - lo));
    return out;
}

}  // namespace statarb
