#include "fll/analytic.hpp"

#include "fll/error.hpp"

namespace fll {

namespace {

void check_expectation_domain(std::uint64_t n, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n < 2) raise(errc::domain_too_small, "expectation formulas require n > 1");
}

Int int_from_u128(unsigned __int128 v) {
    Int high = static_cast<std::uint64_t>(v >> 64);
    return (high << 64) + static_cast<std::uint64_t>(v);
}

// m^n <= limit without overflowing.
bool space_within(std::uint32_t m, std::uint64_t n, std::uint64_t limit) {
    unsigned __int128 size = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        size *= m;
        if (size > limit) return false;
    }
    return true;
}

constexpr std::uint64_t kSpaceLimit = 10'000'000;

} // namespace

BallSizeBreakdown ball_size_formula(const Word& x) {
    const SegmentProfile p = profile(x);
    const std::uint64_t n = x.size();
    const Int k = Int(n) * (x.m() - 1) - 1; // mn - n - 1

    BallSizeBreakdown b;
    b.rho_term = 2 * Int(p.rho) * k;
    b.constant_term = 4;
    b.s_squared_term = -Int(p.sum_s2());
    b.s_linear_term = 3 * Int(p.sum_s());
    b.a_term = -2 * Int(p.a);
    const Int doubled =
        b.rho_term + b.constant_term + b.s_squared_term + b.s_linear_term + b.a_term;
    b.total = doubled / 2; // always even: the ball size is an integer
    return b;
}

std::uint64_t ball_size_u64(const ProfileAccumulator& acc, std::uint64_t n,
                            std::uint32_t m) {
    const __int128 k = static_cast<__int128>(n) * (m - 1) - 1;
    const __int128 doubled = 2 * static_cast<__int128>(acc.rho) * k + 4 -
                             static_cast<__int128>(acc.sum_s2()) +
                             3 * static_cast<__int128>(acc.sum_s()) -
                             2 * static_cast<__int128>(acc.a());
    return static_cast<std::uint64_t>(doubled / 2);
}

Rational f_n(const Word& y, std::uint64_t ambient_n) {
    if (y.m() != 2) raise(errc::not_binary, "f_n is defined for binary words");
    const ProfileAccumulator acc = accumulate(y.symbols());
    // 2 f_n = 2 rho n - sum s_i^2
    const Int doubled = 2 * Int(acc.rho) * Int(ambient_n) - Int(acc.sum_s2());
    return Rational(doubled) / 2;
}

Rational f_mn(const Word& y, std::uint64_t ambient_n, std::uint32_t m) {
    if (y.m() != m) raise(errc::alphabet_mismatch, "word alphabet differs from m");
    const ProfileAccumulator acc = accumulate(y.symbols());
    const Int k = Int(ambient_n) * (m - 1) - 1;
    // 2 f_{m,n} = 2 rho (mn-n-1) - sum s_i^2 + 3 sum s_i - 2 a
    const Int doubled = 2 * Int(acc.rho) * k - Int(acc.sum_s2()) +
                        3 * Int(acc.sum_s()) - 2 * Int(acc.a());
    return Rational(doubled) / 2;
}

Rational expected_h(std::uint64_t n, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n < 1) raise(errc::domain_too_small, "expected_h requires n >= 1");
    return Rational(2) - rational_pow(m, -static_cast<std::int64_t>(n - 1));
}

Rational expected_t(std::uint64_t n, std::uint32_t m) {
    return expected_h(n, m);
}

Rational expected_rho(std::uint64_t n, std::uint32_t m) {
    check_expectation_domain(n, m);
    return Rational(n) - Rational(Int(n) - 1) / m;
}

Rational expected_a(std::uint64_t n, std::uint32_t m) {
    check_expectation_domain(n, m);
    return Rational(1) +
           Rational(Int(n - 2) * (m - 1) * (m - 2)) / (Int(m) * m) +
           Rational(Int(n) - 1) / m;
}

Rational expected_sum_s(std::uint64_t n, std::uint32_t m) {
    check_expectation_domain(n, m);
    return Rational(n) + Rational(Int(n - 2) * (m - 1) * (m - 2)) / (Int(m) * m);
}

Rational expected_sum_s2(std::uint64_t n, std::uint32_t m) {
    check_expectation_domain(n, m);
    const Rational m2 = Rational(Int(m) * m);
    const Rational inv_mn = rational_pow(m, -static_cast<std::int64_t>(n));
    return Rational(Int(n) * (4 * Int(m) * m - 3 * Int(m) + 2)) / m2 +
           Rational(6 * Int(m) - 4) / m2 - 4 -
           Rational(2) / (m - 1) * (Rational(1) - inv_mn) +
           2 * inv_mn; // the corrected final term
}

Rational expected_ball_size(std::uint64_t n, std::uint32_t m) {
    check_expectation_domain(n, m);
    const Rational n2 = Rational(Int(n) * n);
    const Int m_pow = int_pow(m, n - 1);
    return n2 * (Rational(m) + Rational(1) / m - 2) + 2 - Rational(n) / m +
           Rational(m_pow - 1) / (Rational(m_pow) * (m - 1));
}

ExhaustiveBallStats exhaustive_ball_stats(std::uint64_t n, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n < 1) raise(errc::domain_too_small, "word length must be at least 1");
    if (!space_within(m, n, kSpaceLimit)) {
        raise(errc::space_too_large, "m^n exceeds the enumeration guard");
    }

    ExhaustiveBallStats stats;
    unsigned __int128 sum = 0;
    std::uint64_t min = UINT64_MAX;
    std::uint64_t max = 0;
    for_each_word(m, n, [&](std::span<const std::uint32_t>, const ProfileAccumulator& acc) {
        const std::uint64_t size = ball_size_u64(acc, n, m);
        sum += size;
        min = std::min(min, size);
        max = std::max(max, size);
        ++stats.histogram[size];
    });
    stats.min = min;
    stats.max = max;
    stats.mean = Rational(int_from_u128(sum)) / Rational(int_pow(m, n));
    return stats;
}

std::string histogram_csv(const std::map<std::uint64_t, std::uint64_t>& histogram) {
    std::string out;
    for (const auto& [size, count] : histogram) {
        out += std::to_string(size);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

ExpectationResult expectation(Statistic stat, std::uint64_t n, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n < 1) raise(errc::domain_too_small, "word length must be at least 1");

    const bool formula_ok = (stat == Statistic::h || stat == Statistic::t) ? true : n >= 2;
    if (formula_ok) {
        switch (stat) {
            case Statistic::rho: return {expected_rho(n, m), false};
            case Statistic::a: return {expected_a(n, m), false};
            case Statistic::sum_s: return {expected_sum_s(n, m), false};
            case Statistic::sum_s2: return {expected_sum_s2(n, m), false};
            case Statistic::h: return {expected_h(n, m), false};
            case Statistic::t: return {expected_t(n, m), false};
            case Statistic::ball: return {expected_ball_size(n, m), false};
        }
    }

    // Below the formula domain: exact mean by enumeration.
    if (!space_within(m, n, kSpaceLimit)) {
        raise(errc::space_too_large, "m^n exceeds the enumeration guard");
    }
    unsigned __int128 sum = 0;
    for_each_word(m, n, [&](std::span<const std::uint32_t>, const ProfileAccumulator& acc) {
        switch (stat) {
            case Statistic::rho: sum += acc.rho; break;
            case Statistic::a: sum += acc.a(); break;
            case Statistic::sum_s: sum += acc.sum_s(); break;
            case Statistic::sum_s2: sum += acc.sum_s2(); break;
            case Statistic::h: sum += acc.h(); break;
            case Statistic::t: sum += acc.t(); break;
            case Statistic::ball: sum += ball_size_u64(acc, n, m); break;
        }
    });
    return {Rational(int_from_u128(sum)) / Rational(int_pow(m, n)), true};
}

} // namespace fll
