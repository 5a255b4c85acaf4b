#include "fll/montecarlo.hpp"

#include "fll/analytic.hpp"
#include "fll/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <thread>

namespace fll {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Substream state for one sample index: both inputs pass through the mixer
// before any output is drawn.
inline std::uint64_t stream_state(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    s = a ^ (stream_index * 0xD1B54A32D192ED03ull + 0x8BB84B93962EACC9ull);
    return splitmix64(s) ^ s;
}

// Unbiased uniform draw from Z_m by rejection.
inline std::uint32_t next_symbol(std::uint64_t& state, std::uint32_t m) {
    const std::uint64_t bound = UINT64_MAX / m * m;
    std::uint64_t r;
    do {
        r = splitmix64(state);
    } while (r >= bound);
    return static_cast<std::uint32_t>(r % m);
}

void fill_sample(std::vector<std::uint32_t>& buffer, std::uint64_t n, std::uint32_t m,
                 std::uint64_t stream_index, std::uint64_t seed) {
    buffer.resize(n);
    std::uint64_t state = stream_state(seed, stream_index);
    for (std::uint64_t i = 0; i < n; ++i) buffer[i] = next_symbol(state, m);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct WorkerTally {
    unsigned __int128 size_sum = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::vector<std::uint64_t> upper_counts;
    std::vector<std::uint64_t> lower_counts;
};

} // namespace

void SimConfig::validate() const {
    if (n <= 3) raise(errc::invalid_config, "simulation requires n > 3");
    if (m < 2) raise(errc::invalid_config, "alphabet size must be at least 2");
    if (samples < 1) raise(errc::invalid_config, "need at least one sample");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (thresholds[i] < 0 || !std::isfinite(thresholds[i])) {
            raise(errc::invalid_config, "thresholds must be finite and nonnegative");
        }
        if (i > 0 && thresholds[i] < thresholds[i - 1]) {
            raise(errc::invalid_config, "thresholds must be sorted ascending");
        }
    }
}

std::vector<double> default_c_grid() {
    std::vector<double> grid;
    grid.reserve(20);
    for (int k = 1; k <= 20; ++k) grid.push_back(k / 10.0);
    return grid;
}

Word sample_word(std::uint64_t n, std::uint32_t m, std::uint64_t stream_index,
                 std::uint64_t seed) {
    if (n < 1) raise(errc::empty_word, "words must be nonempty");
    std::vector<std::uint32_t> symbols;
    fill_sample(symbols, n, m, stream_index, seed);
    return Word(std::move(symbols), m);
}

double expected_frequency(std::uint64_t n, std::uint32_t m, std::uint64_t samples,
                          double tau) {
    const double expectation = to_double(expected_ball_size(n, m));
    const double scale = static_cast<double>(n) * std::sqrt(static_cast<double>(n - 1));
    const double deviation = tau - expectation;
    if (m == 2) {
        const double c = deviation / scale;
        return static_cast<double>(samples) * std::exp(-2 * c * c);
    }
    const double c = deviation / ((m + 1.0 / m) * scale);
    return static_cast<double>(samples) * std::exp(-c * c / 2);
}

TailReport run_simulation(const SimConfig& config) {
    config.validate();

    TailReport report;
    report.config = config;
    const std::uint64_t n = config.n;
    const std::uint32_t m = config.m;
    const std::uint64_t total = config.samples;
    const std::vector<double>& grid = config.thresholds;

    const Rational exact_mean = expected_ball_size(n, m);
    const double expectation = to_double(exact_mean);
    report.expected_mean = expectation;

    const double scale = static_cast<double>(n) * std::sqrt(static_cast<double>(n - 1));
    std::vector<double> lambdas(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        lambdas[k] = m == 2 ? grid[k] * scale : grid[k] * (m + 1.0 / m) * scale;
    }

    unsigned workers = config.workers;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total)));

    std::vector<WorkerTally> tallies(workers);
    auto run_range = [&](unsigned worker_id, std::uint64_t lo, std::uint64_t hi) {
        WorkerTally& tally = tallies[worker_id];
        tally.upper_counts.assign(grid.size(), 0);
        tally.lower_counts.assign(grid.size(), 0);
        std::vector<std::uint32_t> buffer;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            fill_sample(buffer, n, m, idx, config.seed);
            ProfileAccumulator acc;
            for (std::uint32_t s : buffer) acc.push(s);
            const std::uint64_t size = ball_size_u64(acc, n, m);
            tally.size_sum += size;
            ++tally.histogram[size];
            const double deviation = static_cast<double>(size) - expectation;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                if (deviation >= lambdas[k]) ++tally.upper_counts[k];
                if (deviation <= -lambdas[k]) ++tally.lower_counts[k];
            }
        }
    };

    if (workers == 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    // Associative, order-independent merge.
    unsigned __int128 size_sum = 0;
    std::vector<std::uint64_t> upper(grid.size(), 0), lower(grid.size(), 0);
    for (const WorkerTally& tally : tallies) {
        size_sum += tally.size_sum;
        for (const auto& [size, count] : tally.histogram) report.histogram[size] += count;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            upper[k] += tally.upper_counts.empty() ? 0 : tally.upper_counts[k];
            lower[k] += tally.lower_counts.empty() ? 0 : tally.lower_counts[k];
        }
    }
    report.empirical_mean = static_cast<double>(static_cast<long double>(size_sum) /
                                                static_cast<long double>(total));

    report.rows.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        TailRow row;
        row.c = grid[k];
        row.lambda = lambdas[k];
        row.upper_count = upper[k];
        row.lower_count = lower[k];
        row.upper_freq = static_cast<double>(upper[k]) / static_cast<double>(total);
        row.lower_freq = static_cast<double>(lower[k]) / static_cast<double>(total);
        row.bound_freq = m == 2
                             ? static_cast<double>(total) * std::exp(-2 * grid[k] * grid[k])
                             : static_cast<double>(total) * std::exp(-grid[k] * grid[k] / 2);
        report.rows.push_back(row);
    }
    return report;
}

std::string report_csv(const TailReport& report) {
    std::string out = "c,lambda,upper_count,lower_count,upper_freq,lower_freq,bound_freq\n";
    for (const TailRow& row : report.rows) {
        out += format_double(row.c);
        out += ',';
        out += format_double(row.lambda);
        out += ',';
        out += std::to_string(row.upper_count);
        out += ',';
        out += std::to_string(row.lower_count);
        out += ',';
        out += format_double(row.upper_freq);
        out += ',';
        out += format_double(row.lower_freq);
        out += ',';
        out += format_double(row.bound_freq);
        out += '\n';
    }
    return out;
}

std::string report_json(const TailReport& report) {
    nlohmann::ordered_json doc;
    doc["config"] = {
        {"n", report.config.n},
        {"m", report.config.m},
        {"samples", report.config.samples},
        {"seed", report.config.seed},
        {"thresholds", report.config.thresholds},
    };
    doc["empirical_mean"] = report.empirical_mean;
    doc["expected_mean"] = report.expected_mean;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [size, count] : report.histogram) {
        hist[std::to_string(size)] = count;
    }
    doc["histogram"] = std::move(hist);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const TailRow& row : report.rows) {
        doc["rows"].push_back({
            {"c", row.c},
            {"lambda", row.lambda},
            {"upper_count", row.upper_count},
            {"lower_count", row.lower_count},
            {"upper_freq", row.upper_freq},
            {"lower_freq", row.lower_freq},
            {"bound_freq", row.bound_freq},
        });
    }
    return doc.dump(2) + "\n";
}

} // namespace fll
