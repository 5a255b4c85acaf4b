#include "fll/verify.hpp"

#include "fll/analytic.hpp"
#include "fll/martingale.hpp"
#include "fll/metric.hpp"
#include "fll/montecarlo.hpp"

#include <algorithm>

namespace fll {

namespace {

std::vector<std::uint32_t> to_symbols(std::span<const std::uint32_t> view) {
    return std::vector<std::uint32_t>(view.begin(), view.end());
}

} // namespace

void CheckResult::merge(const CheckResult& other) {
    checks += other.checks;
    failures += other.failures;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> standard_grid() {
    return {{2, 12}, {3, 8}, {4, 6}, {5, 5}};
}

CheckResult verify_ball_formula(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "ball formula vs enumeration m=" + std::to_string(m) + " n=" + std::to_string(n);
    for_each_word(m, n, [&](std::span<const std::uint32_t> symbols,
                            const ProfileAccumulator& acc) {
        const Word x(to_symbols(symbols), m);
        const std::uint64_t formula = ball_size_u64(acc, n, m);
        const BallSizeBreakdown breakdown = ball_size_formula(x);
        const std::uint64_t enumerated = fll_ball(x, 1).size();
        ++result.checks;
        if (formula != enumerated || Int(formula) != breakdown.total) {
            ++result.failures;
            if (result.notes.size() < 8) {
                result.notes.push_back("mismatch at " + x.str() + ": formula=" +
                                       std::to_string(formula) + " enumerated=" +
                                       std::to_string(enumerated));
            }
        }
    });
    return result;
}

CheckResult verify_expectations(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "expectation formulas m=" + std::to_string(m) + " n=" + std::to_string(n);
    unsigned __int128 sum_rho = 0, sum_a = 0, sum_s = 0, sum_s2 = 0, sum_h = 0,
                      sum_t = 0, sum_ball = 0;
    std::uint64_t count = 0;
    for_each_word(m, n, [&](std::span<const std::uint32_t>, const ProfileAccumulator& acc) {
        sum_rho += acc.rho;
        sum_a += acc.a();
        sum_s += acc.sum_s();
        sum_s2 += acc.sum_s2();
        sum_h += acc.h();
        sum_t += acc.t();
        sum_ball += ball_size_u64(acc, n, m);
        ++count;
    });
    const Rational denom(count);
    auto check = [&](const char* what, unsigned __int128 sum, const Rational& expected) {
        ++result.checks;
        const Rational mean = Rational(static_cast<std::uint64_t>(sum)) / denom;
        if (mean != expected) {
            ++result.failures;
            result.notes.push_back(std::string("mean of ") + what + " = " +
                                   to_string(mean) + ", formula gives " +
                                   to_string(expected));
        }
    };
    check("rho", sum_rho, expected_rho(n, m));
    check("a", sum_a, expected_a(n, m));
    check("sum_s", sum_s, expected_sum_s(n, m));
    check("sum_s2", sum_s2, expected_sum_s2(n, m));
    check("h", sum_h, expected_h(n, m));
    check("t", sum_t, expected_t(n, m));
    check("ball", sum_ball, expected_ball_size(n, m));
    return result;
}

CheckResult verify_binary_martingale(std::uint64_t n) {
    CheckResult result;
    result.name = "binary martingale n=" + std::to_string(n);
    const Rational z0_closed = z_binary(n);
    const Rational z0_brute = z_bruteforce(n, 2, FKind::binary_f);
    ++result.checks;
    if (z0_closed != z0_brute) {
        ++result.failures;
        result.notes.push_back("Z_0 closed form vs brute force mismatch");
    }

    const Rational half_n = Rational(n) / 2;
    for (std::uint64_t i = 1; i <= n; ++i) {
        // parents of length i-1, children of length i
        for_each_word(2, i - 1, [&](std::span<const std::uint32_t> parent_symbols,
                                    const ProfileAccumulator&) {
            const Rational z_parent =
                i == 1 ? z0_closed
                       : z_binary(Word(to_symbols(parent_symbols), 2), i - 1, n);
            Rational child_sum = 0;
            for (std::uint32_t s = 0; s < 2; ++s) {
                std::vector<std::uint32_t> symbols = to_symbols(parent_symbols);
                symbols.push_back(s);
                const Word child(symbols, 2);
                const Rational z_closed = z_binary(child, i, n);
                const Rational z_brute = z_bruteforce(child, n, FKind::binary_f);
                child_sum += z_closed;
                ++result.checks;
                if (z_closed != z_brute) {
                    ++result.failures;
                    if (result.notes.size() < 8) {
                        result.notes.push_back("Z_i mismatch at prefix " + child.str());
                    }
                }
                const Rational increment = z_closed - z_parent;
                ++result.checks;
                if (abs(increment) > half_n) {
                    ++result.failures;
                    result.notes.push_back("increment above n/2 at prefix " + child.str());
                }
                if (i == 1) {
                    ++result.checks;
                    if (increment != 0) {
                        ++result.failures;
                        result.notes.push_back("Z_1 != Z_0 at prefix " + child.str());
                    }
                } else {
                    // closed two-case increment form, evaluated on any word
                    // extending this prefix (it only depends on x_{[1,i]})
                    std::vector<std::uint32_t> full = symbols;
                    full.resize(n, 0);
                    ++result.checks;
                    if (z_increment_binary(Word(full, 2), i) != increment) {
                        ++result.failures;
                        result.notes.push_back("increment closed form mismatch at " +
                                               child.str());
                    }
                }
            }
            // tower property: E_s[Z_i(parent||s)] = Z_{i-1}(parent)
            ++result.checks;
            if (child_sum / 2 != z_parent) {
                ++result.failures;
                result.notes.push_back("tower property violated at i=" + std::to_string(i));
            }
        });
    }

    // Z_n = f_n(x) and |L_1(x)| = f_n(x) + n/2 + 1
    for_each_word(2, n, [&](std::span<const std::uint32_t> symbols,
                            const ProfileAccumulator& acc) {
        const Word x(to_symbols(symbols), 2);
        const Rational f = f_n(x, n);
        result.checks += 2;
        if (z_binary(x, n, n) != f) {
            ++result.failures;
            result.notes.push_back("Z_n != f_n at " + x.str());
        }
        if (f + half_n + 1 != Rational(ball_size_u64(acc, n, 2))) {
            ++result.failures;
            result.notes.push_back("f_n + n/2 + 1 != |L_1| at " + x.str());
        }
    });
    return result;
}

namespace {

// Sandwich and increment checks for one child prefix; shared by the
// exhaustive and sampled m-ary drivers.
void check_mary_step(const Word& child, std::uint64_t i, std::uint64_t n,
                     std::uint32_t m, const Rational& z_child,
                     const Rational& z_parent, const Rational& cap,
                     CheckResult& result) {
    const auto [lower, upper] = z_mary_bounds(child, i, n, m);
    ++result.checks;
    if (z_child < lower || z_child > upper) {
        ++result.failures;
        if (result.notes.size() < 8) {
            result.notes.push_back("Z_i outside sandwich at prefix " + child.str() +
                                   " i=" + std::to_string(i));
        }
    }
    ++result.checks;
    if (abs(z_child - z_parent) > cap) {
        ++result.failures;
        if (result.notes.size() < 8) {
            result.notes.push_back("increment above n(m+1/m) at prefix " + child.str());
        }
    }
}

} // namespace

CheckResult verify_mary_sandwich(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "m-ary sandwich m=" + std::to_string(m) + " n=" + std::to_string(n);
    const Rational z0 = z_bruteforce(n, m, FKind::mary_f);
    ++result.checks;
    if (z0 != g_mn(0, n, m)) {
        ++result.failures;
        result.notes.push_back("Z_0 != g_{m,n}(0)");
    }
    const Rational cap = Rational(n) * (Rational(m) + Rational(1) / m);

    for (std::uint64_t i = 1; i <= n; ++i) {
        for_each_word(m, i - 1, [&](std::span<const std::uint32_t> parent_symbols,
                                    const ProfileAccumulator&) {
            const Rational z_parent =
                i == 1 ? z0
                       : z_bruteforce(Word(to_symbols(parent_symbols), m), n, FKind::mary_f);
            Rational child_sum = 0;
            for (std::uint32_t s = 0; s < m; ++s) {
                std::vector<std::uint32_t> symbols = to_symbols(parent_symbols);
                symbols.push_back(s);
                const Word child(symbols, m);
                const Rational z_child = z_bruteforce(child, n, FKind::mary_f);
                child_sum += z_child;
                check_mary_step(child, i, n, m, z_child, z_parent, cap, result);
            }
            ++result.checks;
            if (child_sum / m != z_parent) {
                ++result.failures;
                result.notes.push_back("tower property violated at i=" + std::to_string(i));
            }
        });
    }
    return result;
}

CheckResult verify_mary_sandwich_sampled(std::uint32_t m, std::uint64_t n,
                                         std::uint64_t samples, std::uint64_t seed) {
    CheckResult result;
    result.name = "m-ary sandwich (sampled) m=" + std::to_string(m) + " n=" +
                  std::to_string(n) + " N=" + std::to_string(samples);
    const Rational z0 = z_bruteforce(n, m, FKind::mary_f);
    ++result.checks;
    if (z0 != g_mn(0, n, m)) {
        ++result.failures;
        result.notes.push_back("Z_0 != g_{m,n}(0)");
    }
    const Rational cap = Rational(n) * (Rational(m) + Rational(1) / m);

    for (std::uint64_t idx = 0; idx < samples; ++idx) {
        const Word x = sample_word(n, m, idx, seed);
        Rational z_parent = z0;
        for (std::uint64_t i = 1; i <= n; ++i) {
            const Word child = x.prefix(i);
            const Rational z_child = z_bruteforce(child, n, FKind::mary_f);
            check_mary_step(child, i, n, m, z_child, z_parent, cap, result);
            z_parent = z_child;
        }
    }
    return result;
}

CheckResult verify_distance_equivalence(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "distance fast path vs definitional m=" + std::to_string(m) +
                  " n=" + std::to_string(n);
    std::vector<Word> words;
    for_each_word(m, n, [&](std::span<const std::uint32_t> symbols,
                            const ProfileAccumulator&) {
        words.emplace_back(to_symbols(symbols), m);
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            ++result.checks;
            if (fll_distance(words[i], words[j]) !=
                fll_distance_definitional(words[i], words[j])) {
                ++result.failures;
                if (result.notes.size() < 8) {
                    result.notes.push_back("paths disagree at (" + words[i].str() + ", " +
                                           words[j].str() + ")");
                }
            }
        }
    }
    return result;
}

CheckResult verify_metric_axioms(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "metric axioms m=" + std::to_string(m) + " n=" + std::to_string(n);
    std::vector<Word> words;
    for_each_word(m, n, [&](std::span<const std::uint32_t> symbols,
                            const ProfileAccumulator&) {
        words.emplace_back(to_symbols(symbols), m);
    });
    const std::size_t count = words.size();
    std::vector<std::uint64_t> dist(count * count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            dist[i * count + j] = fll_distance(words[i], words[j]);
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            result.checks += 2;
            if ((dist[i * count + j] == 0) != (i == j)) {
                ++result.failures;
                result.notes.push_back("identity axiom violated");
            }
            if (dist[i * count + j] != dist[j * count + i]) {
                ++result.failures;
                result.notes.push_back("symmetry axiom violated");
            }
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            for (std::size_t k = 0; k < count; ++k) {
                ++result.checks;
                if (dist[i * count + k] > dist[i * count + j] + dist[j * count + k]) {
                    ++result.failures;
                    if (result.notes.size() < 8) {
                        result.notes.push_back("triangle inequality violated");
                    }
                }
            }
        }
    }
    return result;
}

CheckResult verify_identity_chain(std::uint32_t m, std::uint64_t n) {
    CheckResult result;
    result.name = "g(0) + 2 == E[|L_1|] m=" + std::to_string(m) + " n=" + std::to_string(n);
    ++result.checks;
    if (g_mn(0, n, m) + 2 != expected_ball_size(n, m)) {
        ++result.failures;
        result.notes.push_back("identity chain broken");
    }
    return result;
}

} // namespace fll
