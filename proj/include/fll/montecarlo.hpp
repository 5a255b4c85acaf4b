#pragma once

#include "fll/word.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fll {

struct SimConfig {
    std::uint64_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<double> thresholds; // c-values, ascending
    unsigned workers = 0;           // 0 = pick automatically

    void validate() const; // throws invalid_config
};

/// The default c-grid {0.1, 0.2, ..., 2.0}.
std::vector<double> default_c_grid();

/// One row of the tail comparison at threshold c. bound_freq is the
/// expected-frequency expression N e^{-2c^2} (m = 2) or N e^{-c^2/2} (m > 2);
/// the empirical columns are counts and counts/N.
struct TailRow {
    double c = 0;
    double lambda = 0;
    std::uint64_t upper_count = 0;
    std::uint64_t lower_count = 0;
    double upper_freq = 0;
    double lower_freq = 0;
    double bound_freq = 0;
};

struct TailReport {
    SimConfig config;
    double empirical_mean = 0;
    double expected_mean = 0; // E[|L_1|] as a double
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::vector<TailRow> rows;
};

/// Uniform word over Z_m^n, a pure function of (seed, stream_index);
/// independent of worker count and scheduling.
Word sample_word(std::uint64_t n, std::uint32_t m, std::uint64_t stream_index,
                 std::uint64_t seed);

/// Samples N words, records |L_1| per sample, and compares the empirical
/// tail counts against the Azuma-bound frequencies for each c.
TailReport run_simulation(const SimConfig& config);

/// N e^{-2((tau-E)/(n sqrt(n-1)))^2} for m = 2; for m > 2 the exponent is
/// -c^2/2 with c = (tau-E)/((m+1/m) n sqrt(n-1)). Symmetric in tau - E, so
/// the same expression serves the mirrored lower tail.
double expected_frequency(std::uint64_t n, std::uint32_t m, std::uint64_t samples,
                          double tau);

/// CSV: header then one row per c.
std::string report_csv(const TailReport& report);

/// JSON document embedding the histogram. The worker count is an execution
/// detail and is not serialized, so reports are byte-identical across
/// worker counts.
std::string report_json(const TailReport& report);

} // namespace fll
