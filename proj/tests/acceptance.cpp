// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every check is exact rational equality unless stated in the line itself.

#include "fll/analytic.hpp"
#include "fll/martingale.hpp"
#include "fll/metric.hpp"
#include "fll/montecarlo.hpp"
#include "fll/verify.hpp"

#include <cmath>
#include <cstdio>
#include <string>

using namespace fll;

namespace {

int failures = 0;

void report(int index, bool passed, const std::string& label, const std::string& detail) {
    std::printf("[%d] %s %s (%s)\n", index, passed ? "PASS" : "FAIL", label.c_str(),
                detail.c_str());
    if (!passed) ++failures;
}

bool criterion_ball_formula(std::string& detail) {
    CheckResult total;
    total.name = "ball";
    for (const auto& [m, n_max] : standard_grid()) {
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            total.merge(verify_ball_formula(m, n));
        }
    }
    detail = std::to_string(total.checks) + " words, " + std::to_string(total.failures) +
             " mismatches";
    return total.passed();
}

bool criterion_mean_ball(std::string& detail) {
    std::uint64_t points = 0, bad = 0;
    for (const auto& [m, n_max] : standard_grid()) {
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            if (exhaustive_ball_stats(n, m).mean != expected_ball_size(n, m)) ++bad;
            ++points;
        }
    }
    detail = std::to_string(points) + " grid points, " + std::to_string(bad) +
             " failures; verifies the corrected +2/m^n term";
    return bad == 0;
}

bool criterion_component_means(std::string& detail) {
    CheckResult total;
    total.name = "expect";
    for (const auto& [m, n_max] : standard_grid()) {
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            total.merge(verify_expectations(m, n));
        }
    }
    const bool pinned = expected_sum_s2(3, 2) == Rational(11) / 2 &&
                        expected_h(3, 2) == Rational(7) / 4 &&
                        expected_h(5, 3) == 2 - rational_pow(3, -4);
    detail = std::to_string(total.checks) + " means compared, " +
             std::to_string(total.failures) + " failures";
    return total.passed() && pinned;
}

bool criterion_binary_martingale(std::string& detail) {
    CheckResult total;
    total.name = "binary";
    for (std::uint64_t n = 1; n <= 10; ++n) {
        total.merge(verify_binary_martingale(n));
    }
    detail = std::to_string(total.checks) + " checks, " + std::to_string(total.failures) +
             " failures";
    return total.passed();
}

bool criterion_mary_sandwich(std::string& detail) {
    CheckResult total;
    total.name = "mary";
    total.merge(verify_mary_sandwich(3, 7));
    total.merge(verify_mary_sandwich_sampled(4, 6, 10'000, 2022));
    total.merge(verify_mary_sandwich_sampled(5, 6, 10'000, 2022));
    detail = std::to_string(total.checks) + " checks, " + std::to_string(total.failures) +
             " failures";
    return total.passed();
}

bool criterion_identity_chain(std::string& detail) {
    std::uint64_t bad = 0;
    for (std::uint64_t n = 2; n <= 8; ++n) {
        for (std::uint32_t m = 2; m <= 5; ++m) {
            if (g_mn(0, n, m) + 2 != expected_ball_size(n, m)) ++bad;
        }
    }
    detail = "28 pairs, " + std::to_string(bad) + " failures";
    return bad == 0;
}

bool criterion_simulation(std::string& detail) {
    bool passed = true;
    std::string parts;
    for (std::uint32_t m = 2; m <= 5; ++m) {
        SimConfig config;
        config.n = 100;
        config.m = m;
        config.samples = 5000;
        config.seed = 20220311;
        config.thresholds = default_c_grid();
        config.workers = 0;
        const TailReport report = run_simulation(config);

        bool tails_ok = true;
        for (const TailRow& row : report.rows) {
            if (static_cast<double>(row.upper_count) > row.bound_freq ||
                static_cast<double>(row.lower_count) > row.bound_freq) {
                tails_ok = false;
            }
        }
        const double n = 100.0;
        const double tolerance =
            5 * (n * std::sqrt(n - 1) / 2) * (m + 1.0 / m) / std::sqrt(5000.0);
        const bool mean_ok =
            std::abs(report.empirical_mean - report.expected_mean) <= tolerance;
        if (!tails_ok || !mean_ok) passed = false;
        parts += (parts.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) +
                 (tails_ok && mean_ok ? " ok" : " FAILED");
    }
    detail = "n=100 N=5000 seed=20220311: " + parts;
    return passed;
}

bool criterion_distance(std::string& detail) {
    CheckResult total;
    total.name = "distance";
    total.merge(verify_distance_equivalence(2, 6));
    total.merge(verify_distance_equivalence(3, 4));
    total.merge(verify_metric_axioms(2, 5));
    detail = std::to_string(total.checks) + " checks, " + std::to_string(total.failures) +
             " failures";
    return total.passed();
}

} // namespace

int main() {
    std::string detail;

    bool ok = criterion_ball_formula(detail);
    report(1, ok, "formula-oracle equivalence over the full grid", detail);

    ok = criterion_mean_ball(detail);
    report(2, ok, "exhaustive mean of |L_1| equals the corrected closed form", detail);

    ok = criterion_component_means(detail);
    report(3, ok, "component expectations equal their closed forms", detail);

    ok = criterion_binary_martingale(detail);
    report(4, ok, "binary martingale exactness (n <= 10)", detail);

    ok = criterion_mary_sandwich(detail);
    report(5, ok, "m-ary sandwich and bounded increments", detail);

    ok = criterion_identity_chain(detail);
    report(6, ok, "g_{m,n}(0) + 2 equals the mean ball size", detail);

    ok = criterion_simulation(detail);
    report(7, ok, "empirical tails below the bound frequencies", detail);

    ok = criterion_distance(detail);
    report(8, ok, "distance fast path and metric axioms", detail);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
