// fixtures.hpp
// Disk fixtures for the pipeline tests: synthetic futures CSVs, a benchmark
// series and a matching run configuration.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "statarb/dates.hpp"
#include "statarb/rng.hpp"
#include "support/synthetic.hpp"

namespace test_support {

struct PipelineFixture {
    std::filesystem::path dir;
    std::string config_path;
    std::string out_dir;
    std::vector<statarb::Date> dates;
    std::size_t n_train = 0;
};

inline std::vector<statarb::Date> weekday_calendar(int n,
                                                   statarb::Date start = {2018, 3, 26}) {
    std::vector<statarb::Date> dates;
    std::int64_t serial = statarb::to_serial(start);
    while (static_cast<int>(dates.size()) < n) {
        statarb::Date d = statarb::from_serial(serial++);
        if (statarb::weekday(d) <= 5) dates.push_back(d);
    }
    return dates;
}

inline void write_series_csv(const std::filesystem::path& path,
                             const std::vector<statarb::Date>& dates,
                             const std::vector<double>& values) {
    std::ofstream out(path);
    out << "date,price\n";
    for (std::size_t i = 0; i < dates.size(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.10f", values[i]);
        out << statarb::format_date(dates[i]) << ',' << buf << '\n';
    }
}

// Synthetic triple: two random walks plus a linear combination disturbed by a
// two-state regime-switching spread, with a drifting benchmark series.
inline PipelineFixture make_pipeline_fixture(const std::string& name,
                                             std::uint64_t seed,
                                             bool cointegrated = true,
                                             int n_days = 1000,
                                             int n_test = 200,
                                             const std::string& frequency = "weekly") {
    namespace fs = std::filesystem;
    PipelineFixture fx;
    fx.dir = fs::temp_directory_path() / name;
    fs::create_directories(fx.dir);
    fx.out_dir = (fx.dir / "out").string();
    fx.dates = weekday_calendar(n_days);
    fx.n_train = static_cast<std::size_t>(n_days - n_test);

    statarb::Rng rng(seed);
    auto params = two_state_params(0.15, -0.15, 0.8, 0.05, 0.9);
    auto regime = regime_switching_ar1(rng, n_days, params);

    std::vector<double> f1(static_cast<std::size_t>(n_days));
    std::vector<double> f2(static_cast<std::size_t>(n_days));
    std::vector<double> f3(static_cast<std::size_t>(n_days));
    std::vector<double> bench(static_cast<std::size_t>(n_days));
    double w1 = 100.0, w2 = 90.0, w3 = 110.0, b = 3000.0;
    for (int t = 0; t < n_days; ++t) {
        w2 += 0.8 * rng.normal();
        w3 += 0.8 * rng.normal();
        b *= 1.0 + 0.0005 + 0.002 * rng.normal();
        f2[static_cast<std::size_t>(t)] = w2;
        f3[static_cast<std::size_t>(t)] = w3;
        bench[static_cast<std::size_t>(t)] = b;
        if (cointegrated) {
            f1[static_cast<std::size_t>(t)] =
                0.6982 * w2 + 0.3402 * w3 - 0.4322 +
                regime.y[static_cast<std::size_t>(t)];
        } else {
            // Independent third walk: no common trend.
            w1 += 0.8 * rng.normal();
            f1[static_cast<std::size_t>(t)] = w1;
        }
    }
    write_series_csv(fx.dir / "brent.csv", fx.dates, f1);
    write_series_csv(fx.dir / "shanghai.csv", fx.dates, f2);
    write_series_csv(fx.dir / "wti.csv", fx.dates, f3);
    write_series_csv(fx.dir / "benchmark.csv", fx.dates, bench);

    const statarb::Date t_break = fx.dates[fx.n_train];
    std::ofstream cfg(fx.dir / "config.json");
    cfg << R"({
  "data": {
    "series": [
      {"name": "B", "path": ")" << (fx.dir / "brent.csv").string() << R"("},
      {"name": "S", "path": ")" << (fx.dir / "shanghai.csv").string() << R"("},
      {"name": "W", "path": ")" << (fx.dir / "wti.csv").string() << R"("}
    ],
    "benchmark": {"name": "SP", "path": ")" << (fx.dir / "benchmark.csv").string()
        << R"("}
  },
  "dates": {"t0": ")" << statarb::format_date(fx.dates.front()) << R"(",
            "tB": ")" << statarb::format_date(t_break) << R"(",
            "T": ")" << statarb::format_date(fx.dates.back()) << R"("},
  "cointegration": {"frequency": ")" << frequency << R"(", "adf_max_lag": 8, "var_max_lag": 4},
  "hmm": {"candidates": [1, 2], "m": 10},
  "strategies": {"cost": 0.008},
  "risk": {"n_sim": 60, "levels": [0.99, 0.95, 0.90], "seed": 4242, "threads": 2},
  "output_dir": ")" << fx.out_dir << R"("
})";
    cfg.close();
    fx.config_path = (fx.dir / "config.json").string();
    return fx;
}

}  // namespace test_support
