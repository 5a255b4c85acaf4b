#pragma once

#include "fll/analytic.hpp"
#include "fll/rational.hpp"
#include "fll/word.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fll {

/// Which function the Doob martingale exposes coordinate by coordinate.
enum class FKind {
    binary_f, // f_n, binary alphabet
    mary_f,   // f_{m,n}, any alphabet
};

/// Z_0..Z_n for one word, with the per-step increments Z_i - Z_{i-1}.
struct MartingaleTrace {
    Word word;
    std::uint64_t ambient_n;
    std::vector<Rational> z_values;   // length n+1
    std::vector<Rational> increments; // length n
};

struct TailBound {
    std::uint64_t n;
    std::uint32_t m;
    double c;
    double lambda;            // deviation threshold in ball-size units
    double probability_bound; // e^{-2c^2} (m=2) or e^{-c^2/2} (m>2)
};

/// Z_0 of the binary f_n martingale: n^2/2 - n + 2 - 1/2^{n-1}.
Rational z_binary(std::uint64_t ambient_n);

/// Exact Z_i for the binary martingale, 1 <= i <= n, prefix = x_{[1,i]}:
///   f_n(prefix) + n^2/2 - in/2 + 2 - (3/2)(n-i) - 1/2^{n-i-1}
///   - t(prefix)(1 - 1/2^{n-i}).
Rational z_binary(const Word& prefix, std::uint64_t i, std::uint64_t ambient_n);

/// Z_0 by direct averaging of f over all of Z_m^n. Guarded at m^n <= 10^7.
Rational z_bruteforce(std::uint64_t ambient_n, std::uint32_t m, FKind target);

/// Z_i = E[f(x) | x_{[1,i]} = prefix] by enumerating all suffixes.
Rational z_bruteforce(const Word& prefix, std::uint64_t ambient_n, FKind target);

/// Z_i - Z_{i-1} for the binary martingale, 2 <= i <= n, from the closed
/// two-case form (sign decided by x_{i-1} vs x_i).
Rational z_increment_binary(const Word& x, std::uint64_t i);

/// Right-hand side of the binary partition identity: reconstructs f_n(y)
/// from f_n of the two parts split after position i.
Rational f_partition_binary(const Word& y, std::uint64_t i, std::uint64_t ambient_n);

/// m-ary partition sandwich [lower, upper] for f_{m,n}(y) from the parts
/// split after position i; exact (lower == upper) when y_i = y_{i+1}.
std::pair<Rational, Rational> f_partition_mary_bounds(const Word& y, std::uint64_t i,
                                                      std::uint64_t ambient_n);

/// g_{m,n}(i) = E[f_{m,n}(suffix of length n-i)] =
///   n(n-i)(m + 1/m - 2) - n/m + 1/(m-1) - 1/((m-1)m^{n-i}) + i - 1/m^{n-i}.
/// Valid for 0 <= i <= n-1 (at i = n-1 it reduces to mn-n-1, the f-value of
/// every single symbol).
Rational g_mn(std::uint64_t i, std::uint64_t n, std::uint32_t m);

/// Sandwich [lower, upper] on Z_i for the m-ary martingale (m >= 3).
/// 1 < i < n uses the printed bounds; i = 1 and i = n are the exact
/// endpoint cases Z_1 = Z_0 and Z_n = f_{m,n}(x).
std::pair<Rational, Rational> z_mary_bounds(const Word& prefix, std::uint64_t i,
                                            std::uint64_t n, std::uint32_t m);

struct AzumaResult {
    double bound;       // exp(-lambda^2 / (2 sum c_i^2)), clamped to [0,1]
    bool all_caps_zero; // degenerate martingale with positive lambda
};

AzumaResult azuma_bound(std::span<const double> increment_caps, double lambda);

/// Tail bound for |L_1| at deviation c n sqrt(n-1) (binary) or
/// c (m + 1/m) n sqrt(n-1) (m-ary). Requires n > 3.
TailBound tail_bound(std::uint64_t n, std::uint32_t m, double c);

/// Full trace for one word: exact closed form when binary, conditional
/// expectation by enumeration otherwise.
MartingaleTrace martingale_trace(const Word& w, bool force_bruteforce = false);

/// CSV "i,Z_i,increment" with rational p/q fields (increment blank at i = 0).
std::string trace_csv(const MartingaleTrace& trace);

} // namespace fll
