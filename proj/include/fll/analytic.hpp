#pragma once

#include "fll/rational.hpp"
#include "fll/word.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace fll {

/// |L_1(x)| split into the terms of the closed form
///   rho(x)(mn-n-1) + 2 - (1/2) sum s_i^2 + (3/2) sum s_i - a(x).
/// Terms are scaled by 2 so the halves stay exact integers.
struct BallSizeBreakdown {
    Int rho_term;       // 2 rho (mn-n-1)
    Int constant_term;  // 4
    Int s_squared_term; // -sum s_i^2
    Int s_linear_term;  // 3 sum s_i
    Int a_term;         // -2 a
    Int total;          // |L_1(x)|
};

BallSizeBreakdown ball_size_formula(const Word& x);

/// Same closed form on machine integers, for enumeration and sampling loops.
std::uint64_t ball_size_u64(const ProfileAccumulator& acc, std::uint64_t n,
                            std::uint32_t m);

/// f_n(y) = rho(y) n - (1/2) sum s_i^2 for binary y; the ambient length n is
/// a free parameter independent of y's own length.
Rational f_n(const Word& y, std::uint64_t ambient_n);

/// f_{m,n}(y) = rho(y)(mn-n-1) - (1/2) sum s_i^2 + (3/2) sum s_i - a(y).
Rational f_mn(const Word& y, std::uint64_t ambient_n, std::uint32_t m);

// Expectations over uniform Z_m^n, as reduced exact rationals.
Rational expected_h(std::uint64_t n, std::uint32_t m);         // 2 - 1/m^{n-1}, n >= 1
Rational expected_t(std::uint64_t n, std::uint32_t m);         // = expected_h by reversal symmetry
Rational expected_rho(std::uint64_t n, std::uint32_t m);       // n >= 2
Rational expected_a(std::uint64_t n, std::uint32_t m);         // n >= 2
Rational expected_sum_s(std::uint64_t n, std::uint32_t m);     // n >= 2
Rational expected_sum_s2(std::uint64_t n, std::uint32_t m);    // n >= 2, includes the +2/m^n term
Rational expected_ball_size(std::uint64_t n, std::uint32_t m); // n >= 2

struct ExhaustiveBallStats {
    Rational mean;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::map<std::uint64_t, std::uint64_t> histogram; // |L_1| -> count
};

/// Exact statistics of |L_1| over all of Z_m^n. Guarded at m^n <= 10^7.
ExhaustiveBallStats exhaustive_ball_stats(std::uint64_t n, std::uint32_t m);

/// CSV rows "size,count", ascending by size.
std::string histogram_csv(const std::map<std::uint64_t, std::uint64_t>& histogram);

enum class Statistic { rho, a, sum_s, sum_s2, h, t, ball };

struct ExpectationResult {
    Rational value;
    bool from_enumeration; // true when n is below the formula domain
};

/// Closed form when the formulas apply (n >= 2, or n >= 1 for h/t);
/// exhaustive enumeration below that, flagged.
ExpectationResult expectation(Statistic stat, std::uint64_t n, std::uint32_t m);

} // namespace fll
