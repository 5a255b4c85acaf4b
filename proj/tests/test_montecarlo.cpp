#include "fll/montecarlo.hpp"

#include "fll/analytic.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

using namespace fll;

namespace {

bool raises(errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

SimConfig base_config() {
    SimConfig config;
    config.n = 100;
    config.m = 2;
    config.samples = 5000;
    config.seed = 42;
    config.thresholds = default_c_grid();
    config.workers = 1;
    return config;
}

} // namespace

TEST_CASE("sampling is a pure function of seed and index") {
    const Word a = sample_word(50, 4, 7, 1234);
    const Word b = sample_word(50, 4, 7, 1234);
    CHECK(a == b);
    CHECK(a.size() == 50);
    CHECK(a.m() == 4);

    // different indices and seeds give different words at these sizes
    CHECK(sample_word(50, 4, 8, 1234) != a);
    CHECK(sample_word(50, 4, 7, 1235) != a);
}

TEST_CASE("sampled words are uniform: chi-square over Z_2^4") {
    const std::uint64_t trials = 1'000'000;
    std::vector<std::uint64_t> buckets(16, 0);
    for (std::uint64_t idx = 0; idx < trials; ++idx) {
        const Word w = sample_word(4, 2, idx, 987654321);
        std::size_t key = 0;
        for (std::uint32_t s : w.symbols()) key = key * 2 + s;
        ++buckets[key];
    }
    const double expected = static_cast<double>(trials) / 16.0;
    double chi_square = 0;
    for (std::uint64_t count : buckets) {
        const double diff = static_cast<double>(count) - expected;
        chi_square += diff * diff / expected;
    }
    // critical value for 15 degrees of freedom at significance 1e-3
    CHECK(chi_square < 37.697);
}

TEST_CASE("per-position symbol marginals stay within 5 sigma") {
    const std::uint64_t trials = 300'000;
    const std::uint64_t n = 8;
    const std::uint32_t m = 3;
    std::vector<std::uint64_t> counts(n * m, 0);
    for (std::uint64_t idx = 0; idx < trials; ++idx) {
        const Word w = sample_word(n, m, idx, 777);
        for (std::uint64_t pos = 0; pos < n; ++pos) ++counts[pos * m + w[pos]];
    }
    const double expected = static_cast<double>(trials) / m;
    const double sigma = std::sqrt(static_cast<double>(trials) * (1.0 / m) * (1.0 - 1.0 / m));
    for (std::uint64_t pos = 0; pos < n; ++pos) {
        for (std::uint32_t s = 0; s < m; ++s) {
            const double diff = std::abs(static_cast<double>(counts[pos * m + s]) - expected);
            REQUIRE(diff <= 5 * sigma);
        }
    }
}

TEST_CASE("config validation") {
    CHECK(raises(errc::invalid_config, [] {
        SimConfig c = base_config();
        c.samples = 0;
        c.validate();
    }));
    CHECK(raises(errc::invalid_config, [] {
        SimConfig c = base_config();
        c.n = 3;
        c.validate();
    }));
    CHECK(raises(errc::invalid_config, [] {
        SimConfig c = base_config();
        c.m = 1;
        c.validate();
    }));
    CHECK(raises(errc::invalid_config, [] {
        SimConfig c = base_config();
        c.thresholds = {0.5, 0.2};
        c.validate();
    }));
    CHECK(raises(errc::invalid_config, [] {
        SimConfig c = base_config();
        c.thresholds = {-0.1};
        c.validate();
    }));
}

TEST_CASE("single-sample report") {
    SimConfig config = base_config();
    config.samples = 1;
    const TailReport report = run_simulation(config);
    CHECK(report.histogram.size() == 1);
    CHECK(report.histogram.begin()->second == 1);
    for (const TailRow& row : report.rows) {
        CHECK((row.upper_freq == 0.0 || row.upper_freq == 1.0));
        CHECK((row.lower_freq == 0.0 || row.lower_freq == 1.0));
    }
}

TEST_CASE("reports are bit-identical across worker counts") {
    SimConfig config = base_config();
    config.samples = 2000;
    config.workers = 1;
    const TailReport one = run_simulation(config);
    config.workers = 3;
    const TailReport three = run_simulation(config);
    config.workers = 8;
    const TailReport eight = run_simulation(config);
    CHECK(report_csv(one) == report_csv(three));
    CHECK(report_csv(one) == report_csv(eight));
    CHECK(report_json(one) == report_json(three));
    CHECK(report_json(one) == report_json(eight));
    CHECK(one.histogram == three.histogram);
}

TEST_CASE("tail rows behave like a simulation of the bound") {
    SimConfig config = base_config();
    const TailReport report = run_simulation(config);

    std::uint64_t total = 0;
    for (const auto& [size, count] : report.histogram) total += count;
    CHECK(total == config.samples);

    double previous_upper = static_cast<double>(config.samples);
    double previous_bound = static_cast<double>(config.samples);
    for (const TailRow& row : report.rows) {
        CHECK(row.upper_count <= previous_upper);
        CHECK(row.bound_freq <= previous_bound);
        previous_upper = static_cast<double>(row.upper_count);
        previous_bound = row.bound_freq;
        // the empirical tail must fall below the Azuma expected frequency
        CHECK(static_cast<double>(row.upper_count) <= row.bound_freq);
        CHECK(static_cast<double>(row.lower_count) <= row.bound_freq);
    }

    const double n = static_cast<double>(config.n);
    const double tolerance = 5 * (n * std::sqrt(n - 1) / 2) *
                             (config.m + 1.0 / config.m) /
                             std::sqrt(static_cast<double>(config.samples));
    CHECK(std::abs(report.empirical_mean - report.expected_mean) <= tolerance);
}

TEST_CASE("sampled histogram support lies within the exhaustive range") {
    SimConfig config = base_config();
    config.n = 6;
    config.m = 2;
    config.samples = 2000;
    const TailReport report = run_simulation(config);
    const ExhaustiveBallStats stats = exhaustive_ball_stats(6, 2);
    CHECK(report.histogram.begin()->first >= stats.min);
    CHECK(report.histogram.rbegin()->first <= stats.max);
}

TEST_CASE("expected frequency expression") {
    const double expectation = to_double(expected_ball_size(100, 2));
    CHECK(expected_frequency(100, 2, 5000, expectation) == doctest::Approx(5000.0));
    const double tau = expectation + 100.0 * std::sqrt(99.0);
    CHECK(expected_frequency(100, 2, 5000, tau) ==
          doctest::Approx(5000.0 * std::exp(-2.0)).epsilon(1e-12));

    // m-ary scaling: tau = E + c (m + 1/m) n sqrt(n-1) gives N e^{-c^2/2}
    const double e3 = to_double(expected_ball_size(100, 3));
    const double tau3 = e3 + 1.5 * (3 + 1.0 / 3) * 100.0 * std::sqrt(99.0);
    CHECK(expected_frequency(100, 3, 5000, tau3) ==
          doctest::Approx(5000.0 * std::exp(-1.5 * 1.5 / 2)).epsilon(1e-12));

    double previous = 1e18;
    for (int k = 0; k <= 10; ++k) {
        const double value = expected_frequency(100, 2, 5000, expectation + 200.0 * k);
        CHECK(value <= previous);
        previous = value;
    }
}

TEST_CASE("csv and json report shapes") {
    SimConfig config = base_config();
    config.samples = 50;
    config.thresholds = {0.5, 1.0};
    const TailReport report = run_simulation(config);

    const std::string csv = report_csv(report);
    CHECK(csv.rfind("c,lambda,upper_count,lower_count,upper_freq,lower_freq,bound_freq\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3); // header + 2 rows

    const std::string json = report_json(report);
    CHECK(json.find("\"empirical_mean\"") != std::string::npos);
    CHECK(json.find("\"histogram\"") != std::string::npos);
    CHECK(json.find("\"workers\"") == std::string::npos);
}
