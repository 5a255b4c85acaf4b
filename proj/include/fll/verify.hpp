#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fll {

struct CheckResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;

    bool passed() const { return failures == 0; }
    void merge(const CheckResult& other);
};

/// The exhaustive test grid: (m, n_max) pairs with every n in [2, n_max]
/// cross-checked formula-vs-enumeration.
std::vector<std::pair<std::uint32_t, std::uint64_t>> standard_grid();

/// ball_size_formula(x) == |fll_ball(x,1)| for every x in Z_m^n.
CheckResult verify_ball_formula(std::uint32_t m, std::uint64_t n);

/// Exhaustive means of rho, a, sum s, sum s^2, h, t, |L_1| equal their
/// closed forms as exact rationals (n >= 2).
CheckResult verify_expectations(std::uint32_t m, std::uint64_t n);

/// Binary martingale: z_binary == z_bruteforce for every prefix at every i,
/// the tower property, Z_1 = Z_0, Z_n = f_n, |increment| <= n/2, the closed
/// two-case increment form, and f_n(x) + n/2 + 1 = |L_1(x)|.
CheckResult verify_binary_martingale(std::uint64_t n);

/// m-ary martingale (m >= 3), exhaustive over prefixes: brute-force Z_i lies
/// within z_mary_bounds, |increment| <= n(m + 1/m), and the tower property.
CheckResult verify_mary_sandwich(std::uint32_t m, std::uint64_t n);

/// Same checks on sampled words (tower omitted); deterministic in the seed.
CheckResult verify_mary_sandwich_sampled(std::uint32_t m, std::uint64_t n,
                                         std::uint64_t samples, std::uint64_t seed);

/// Fast LCS distance equals the definitional sphere-intersection distance on
/// all pairs of Z_m^n.
CheckResult verify_distance_equivalence(std::uint32_t m, std::uint64_t n);

/// Identity, symmetry, triangle inequality on all of Z_m^n.
CheckResult verify_metric_axioms(std::uint32_t m, std::uint64_t n);

/// g_{m,n}(0) + 2 == expected_ball_size(n, m) exactly.
CheckResult verify_identity_chain(std::uint32_t m, std::uint64_t n);

} // namespace fll
