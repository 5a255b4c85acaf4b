#include "fll/martingale.hpp"

#include "fll/error.hpp"

#include <algorithm>
#include <cmath>

namespace fll {

namespace {

constexpr std::uint64_t kSpaceLimit = 10'000'000;

bool space_within(std::uint32_t m, std::uint64_t n, std::uint64_t limit) {
    unsigned __int128 size = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        size *= m;
        if (size > limit) return false;
    }
    return true;
}

Int int_from_i128(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-v)
                                     : static_cast<unsigned __int128>(v);
    Int high = static_cast<std::uint64_t>(mag >> 64);
    Int out = (high << 64) + static_cast<std::uint64_t>(mag);
    return negative ? -out : out;
}

// 2*f for the full word held in the accumulator.
__int128 doubled_f(const ProfileAccumulator& acc, std::uint64_t ambient_n,
                   std::uint32_t m, FKind target) {
    if (target == FKind::binary_f) {
        return 2 * static_cast<__int128>(acc.rho) * ambient_n -
               static_cast<__int128>(acc.sum_s2());
    }
    const __int128 k = static_cast<__int128>(ambient_n) * (m - 1) - 1;
    return 2 * static_cast<__int128>(acc.rho) * k -
           static_cast<__int128>(acc.sum_s2()) +
           3 * static_cast<__int128>(acc.sum_s()) -
           2 * static_cast<__int128>(acc.a());
}

Rational conditional_expectation(const ProfileAccumulator& prefix_acc,
                                 std::uint64_t suffix_len, std::uint64_t ambient_n,
                                 std::uint32_t m, FKind target) {
    if (!space_within(m, suffix_len, kSpaceLimit)) {
        raise(errc::space_too_large, "suffix space exceeds the enumeration guard");
    }
    __int128 sum = 0;
    std::uint64_t count = 0;
    for_each_extension(prefix_acc, m, suffix_len, [&](const ProfileAccumulator& acc) {
        sum += doubled_f(acc, ambient_n, m, target);
        ++count;
    });
    return Rational(int_from_i128(sum)) / Rational(2 * Int(count));
}

} // namespace

Rational z_binary(std::uint64_t ambient_n) {
    if (ambient_n < 1) raise(errc::domain_too_small, "ambient n must be at least 1");
    const std::int64_t n = static_cast<std::int64_t>(ambient_n);
    // n^2/2 - n + 2 - 1/2^{n-1}
    return Rational(Int(n) * n) / 2 - n + 2 - rational_pow(2, -(n - 1));
}

Rational z_binary(const Word& prefix, std::uint64_t i, std::uint64_t ambient_n) {
    if (prefix.m() != 2) raise(errc::not_binary, "binary martingale requires m = 2");
    if (prefix.size() != i) raise(errc::prefix_length_mismatch, "prefix length differs from i");
    if (i < 1 || i > ambient_n) raise(errc::index_out_of_range, "need 1 <= i <= n");

    const std::int64_t n = static_cast<std::int64_t>(ambient_n);
    const std::int64_t si = static_cast<std::int64_t>(i);
    const ProfileAccumulator acc = accumulate(prefix.symbols());
    return f_n(prefix, ambient_n) + Rational(Int(n) * n) / 2 - Rational(Int(si) * n) / 2 +
           2 - Rational(3 * (Int(n) - si)) / 2 - rational_pow(2, -(n - si - 1)) -
           Rational(acc.t()) * (Rational(1) - rational_pow(2, -(n - si)));
}

Rational z_bruteforce(std::uint64_t ambient_n, std::uint32_t m, FKind target) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (target == FKind::binary_f && m != 2) {
        raise(errc::not_binary, "binary target requires m = 2");
    }
    return conditional_expectation(ProfileAccumulator{}, ambient_n, ambient_n, m, target);
}

Rational z_bruteforce(const Word& prefix, std::uint64_t ambient_n, FKind target) {
    if (target == FKind::binary_f && prefix.m() != 2) {
        raise(errc::not_binary, "binary target requires m = 2");
    }
    if (prefix.size() > ambient_n) {
        raise(errc::prefix_length_mismatch, "prefix longer than ambient n");
    }
    const ProfileAccumulator acc = accumulate(prefix.symbols());
    return conditional_expectation(acc, ambient_n - prefix.size(), ambient_n,
                                   prefix.m(), target);
}

Rational z_increment_binary(const Word& x, std::uint64_t i) {
    if (x.m() != 2) raise(errc::not_binary, "binary martingale requires m = 2");
    const std::uint64_t n = x.size();
    if (i < 2 || i > n) raise(errc::index_out_of_range, "need 2 <= i <= n");

    const ProfileAccumulator acc = accumulate(
        std::span<const std::uint32_t>(x.symbols().data(), i - 1));
    const std::int64_t sn = static_cast<std::int64_t>(n);
    const std::int64_t si = static_cast<std::int64_t>(i);
    const Rational magnitude =
        Rational(sn) / 2 -
        Rational(acc.t()) * (Rational(1) - rational_pow(2, -(sn - si + 1)));
    return x[i - 2] != x[i - 1] ? magnitude : -magnitude;
}

Rational f_partition_binary(const Word& y, std::uint64_t i, std::uint64_t ambient_n) {
    if (y.m() != 2) raise(errc::not_binary, "binary partition requires m = 2");
    const std::uint64_t len = y.size();
    if (i < 1 || i >= len) raise(errc::index_out_of_range, "need 1 <= i <= n'-1");

    const Word left = y.prefix(i);
    const Word right = y.subword(i + 1, len);
    const Rational sum = f_n(left, ambient_n) + f_n(right, ambient_n);
    if (y[i - 1] == y[i]) return sum - Rational(ambient_n);
    const std::uint64_t t_left = accumulate(left.symbols()).t();
    const std::uint64_t h_right = accumulate(right.symbols()).h();
    return sum - Rational(Int(t_left) * h_right);
}

std::pair<Rational, Rational> f_partition_mary_bounds(const Word& y, std::uint64_t i,
                                                      std::uint64_t ambient_n) {
    const std::uint32_t m = y.m();
    if (m < 3 || ambient_n < 2 || y.size() < 3) {
        raise(errc::domain_too_small, "requires m > 2, n > 1, and |y| > 2");
    }
    const std::uint64_t len = y.size();
    if (i < 1 || i >= len) raise(errc::index_out_of_range, "need 1 <= i <= n'-1");

    const Word left = y.prefix(i);
    const Word right = y.subword(i + 1, len);
    const Rational sum = f_mn(left, ambient_n, m) + f_mn(right, ambient_n, m);
    if (y[i - 1] == y[i]) {
        const Rational exact = sum - (Rational(Int(ambient_n) * (m - 1)) - 1);
        return {exact, exact};
    }
    const std::uint64_t t_left = accumulate(left.symbols()).t();
    const std::uint64_t h_right = accumulate(right.symbols()).h();
    return {sum + 1 - Rational(Int(t_left) * h_right), sum};
}

Rational g_mn(std::uint64_t i, std::uint64_t n, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n < 2) raise(errc::domain_too_small, "g_{m,n} requires n > 1");
    if (i > n - 1) raise(errc::index_out_of_range, "need 0 <= i <= n-1");

    const std::int64_t exp = static_cast<std::int64_t>(n - i);
    const Rational inv_m_pow = rational_pow(m, -exp); // 1/m^{n-i}
    return Rational(Int(n) * Int(n - i)) * (Rational(m) + Rational(1) / m - 2) -
           Rational(n) / m + Rational(1) / (m - 1) -
           inv_m_pow / (m - 1) + Rational(i) - inv_m_pow;
}

std::pair<Rational, Rational> z_mary_bounds(const Word& prefix, std::uint64_t i,
                                            std::uint64_t n, std::uint32_t m) {
    if (m < 3) raise(errc::domain_too_small, "m-ary bounds require m > 2");
    if (n < 3) raise(errc::domain_too_small, "m-ary bounds require n > 2");
    if (prefix.m() != m) raise(errc::alphabet_mismatch, "prefix alphabet differs from m");
    if (prefix.size() != i) raise(errc::prefix_length_mismatch, "prefix length differs from i");
    if (i < 1 || i > n) raise(errc::index_out_of_range, "need 1 <= i <= n");

    if (i == 1) {
        const Rational z0 = g_mn(0, n, m); // Z_1 = Z_0 by shift symmetry
        return {z0, z0};
    }
    if (i == n) {
        const Rational zn = f_mn(prefix, n, m); // Z_n = f_{m,n}(x)
        return {zn, zn};
    }

    const Rational f = f_mn(prefix, n, m);
    const Rational g = g_mn(i, n, m);
    const Rational base = f + g - Rational(n) + Rational(n) / m;
    const std::uint64_t t_prefix = accumulate(prefix.symbols()).t();
    const Rational lower =
        base + 1 -
        Rational(Int(m) - 1) / m * Rational(t_prefix) *
            (Rational(2) - rational_pow(m, -static_cast<std::int64_t>(n - i - 1)));
    const Rational upper = base + Rational(1) / m;
    return {lower, upper};
}

AzumaResult azuma_bound(std::span<const double> increment_caps, double lambda) {
    if (lambda < 0) raise(errc::invalid_config, "lambda must be nonnegative");
    double sum_sq = 0;
    for (double c : increment_caps) {
        if (c < 0 || !std::isfinite(c)) {
            raise(errc::invalid_config, "caps must be finite and nonnegative");
        }
        sum_sq += c * c;
    }
    if (lambda == 0) return {1.0, false};
    if (sum_sq == 0) return {0.0, true}; // Z_n = Z_0 a.s.; positive deviation impossible
    const double bound = std::exp(-(lambda * lambda) / (2 * sum_sq));
    return {std::clamp(bound, 0.0, 1.0), false};
}

TailBound tail_bound(std::uint64_t n, std::uint32_t m, double c) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (n <= 3) raise(errc::domain_too_small, "tail bounds require n > 3");
    if (c < 0 || !std::isfinite(c)) raise(errc::invalid_config, "c must be finite and nonnegative");

    TailBound out;
    out.n = n;
    out.m = m;
    out.c = c;
    const double scale = static_cast<double>(n) * std::sqrt(static_cast<double>(n - 1));
    if (m == 2) {
        out.lambda = c * scale;
        out.probability_bound = std::clamp(std::exp(-2 * c * c), 0.0, 1.0);
    } else {
        out.lambda = c * (m + 1.0 / m) * scale;
        out.probability_bound = std::clamp(std::exp(-c * c / 2), 0.0, 1.0);
    }
    return out;
}

MartingaleTrace martingale_trace(const Word& w, bool force_bruteforce) {
    const std::uint64_t n = w.size();
    const bool exact = w.m() == 2 && !force_bruteforce;
    const FKind target = w.m() == 2 ? FKind::binary_f : FKind::mary_f;

    MartingaleTrace trace{w, n, {}, {}};
    trace.z_values.reserve(n + 1);
    trace.z_values.push_back(exact ? z_binary(n) : z_bruteforce(n, w.m(), target));
    for (std::uint64_t i = 1; i <= n; ++i) {
        const Word prefix = w.prefix(i);
        trace.z_values.push_back(exact ? z_binary(prefix, i, n)
                                       : z_bruteforce(prefix, n, target));
    }
    trace.increments.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        trace.increments.push_back(trace.z_values[i] - trace.z_values[i - 1]);
    }
    return trace;
}

std::string trace_csv(const MartingaleTrace& trace) {
    std::string out = "i,Z_i,increment\n";
    for (std::size_t i = 0; i < trace.z_values.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += to_string(trace.z_values[i]);
        out += ',';
        if (i > 0) out += to_string(trace.increments[i - 1]);
        out += '\n';
    }
    return out;
}

} // namespace fll
