// Command-line front end: every subcommand is a thin adapter over the
// library; no numeric logic lives here.

#include "fll/analytic.hpp"
#include "fll/error.hpp"
#include "fll/martingale.hpp"
#include "fll/metric.hpp"
#include "fll/montecarlo.hpp"
#include "fll/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fll;

std::string render_profile(const SegmentProfile& p) {
    std::string out = "rho=" + std::to_string(p.rho) + " a=" + std::to_string(p.a) + " s=[";
    for (std::size_t i = 0; i < p.segment_lengths.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.segment_lengths[i]);
    }
    out += "] h=" + std::to_string(p.h) + " t=" + std::to_string(p.t);
    return out;
}

std::string render_rational(const Rational& value) {
    return to_string(value) + " = " + decimal_string(value);
}

unsigned workers_from_env() {
    if (const char* env = std::getenv("FLL_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 0; // auto
}

std::vector<double> parse_c_grid(const std::string& text) {
    std::vector<double> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            const double value = std::stod(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            grid.push_back(value);
        } catch (const std::exception&) {
            raise(errc::parse_error, "invalid c value '" + field + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return grid;
}

int run_stats(const std::string& word_text, std::uint32_t m) {
    const Word w = Word::parse(word_text, m);
    std::cout << render_profile(profile(w)) << "\n";
    return 0;
}

int run_ball(const std::string& word_text, std::uint32_t m, std::uint64_t radius,
             const std::string& method, bool list) {
    const Word w = Word::parse(word_text, m);
    if (radius < 1) raise(errc::invalid_config, "radius must be at least 1");

    std::optional<Int> formula_size;
    if (method == "formula" || method == "both") {
        if (radius != 1) {
            raise(errc::formula_unavailable,
                  "the closed form covers radius 1 only; use --method enumerate");
        }
        formula_size = ball_size_formula(w).total;
    }
    std::optional<WordSet> enumerated;
    if (method == "enumerate" || method == "both") {
        enumerated = fll_ball(w, radius);
    }

    if (method == "formula") {
        std::cout << formula_size->str() << "\n";
    } else if (method == "enumerate") {
        std::cout << enumerated->size() << "\n";
    } else {
        const bool match = *formula_size == Int(enumerated->size());
        std::cout << formula_size->str() << " " << enumerated->size() << " "
                  << (match ? "OK" : "MISMATCH") << "\n";
        if (!match) return 1;
    }
    if (list && enumerated) std::cout << enumerated->to_lines();
    return 0;
}

int run_distance(const std::string& x_text, const std::string& y_text, std::uint32_t m) {
    const Word x = Word::parse(x_text, m);
    const Word y = Word::parse(y_text, m);
    std::cout << fll_distance(x, y) << "\n";
    return 0;
}

int run_expect(std::uint32_t m, std::uint64_t n, const std::string& which) {
    Statistic stat;
    if (which == "rho") stat = Statistic::rho;
    else if (which == "a") stat = Statistic::a;
    else if (which == "sums") stat = Statistic::sum_s;
    else if (which == "sums2") stat = Statistic::sum_s2;
    else if (which == "h") stat = Statistic::h;
    else if (which == "t") stat = Statistic::t;
    else if (which == "ball") stat = Statistic::ball;
    else raise(errc::invalid_config, "unknown statistic '" + which + "'");

    const ExpectationResult result = expectation(stat, n, m);
    std::cout << render_rational(result.value);
    if (result.from_enumeration) std::cout << " (enumerated: n below formula domain)";
    std::cout << "\n";
    return 0;
}

int run_martingale(const std::string& word_text, std::uint32_t m,
                   const std::string& method) {
    const Word w = Word::parse(word_text, m);
    if (method == "exact" && m != 2) {
        raise(errc::not_binary, "the exact closed form exists for m = 2 only");
    }
    const bool force_brute = method == "bruteforce";
    std::cout << trace_csv(martingale_trace(w, force_brute));
    return 0;
}

int run_bounds(std::uint32_t m, std::uint64_t n, double c) {
    const TailBound bound = tail_bound(n, m, c);
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda=%.2f bound=%.5f", bound.lambda,
                  bound.probability_bound);
    std::cout << buf << "\n";
    return 0;
}

int run_simulate(std::uint32_t m, std::uint64_t n, std::uint64_t samples,
                 std::uint64_t seed, const std::string& c_grid_text,
                 const std::string& out_path, const std::string& format) {
    SimConfig config;
    config.n = n;
    config.m = m;
    config.samples = samples;
    config.seed = seed;
    config.thresholds = c_grid_text.empty() ? default_c_grid() : parse_c_grid(c_grid_text);
    config.workers = workers_from_env();

    const TailReport report = run_simulation(config);
    const std::string payload = format == "json" ? report_json(report) : report_csv(report);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) raise(errc::invalid_config, "cannot open output file " + out_path);
        out << payload;
    }
    return 0;
}

int run_verify(std::uint32_t m, std::uint64_t n_max, const std::string& suite) {
    bool all_passed = true;
    std::uint64_t total_checks = 0;

    auto report = [&](const CheckResult& result) {
        total_checks += result.checks;
        all_passed = all_passed && result.passed();
        std::cout << (result.passed() ? "ok   " : "FAIL ") << result.name << " ("
                  << result.checks << " checks, " << result.failures << " failures)\n";
        for (const std::string& note : result.notes) std::cout << "     " << note << "\n";
    };
    auto space_ok = [&](std::uint64_t n, std::uint64_t limit) {
        long double size = 1;
        for (std::uint64_t i = 0; i < n; ++i) size *= m;
        return size <= static_cast<long double>(limit);
    };

    if (suite == "ball" || suite == "all") {
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (!space_ok(n, 200'000)) {
                std::cout << "skip ball n=" << n << " (space too large)\n";
                continue;
            }
            report(verify_ball_formula(m, n));
        }
    }
    if (suite == "expect" || suite == "all") {
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (n < 2) {
                std::cout << "skip expect n=" << n
                          << " (DomainTooSmall: formulas require n > 1)\n";
                continue;
            }
            if (!space_ok(n, 10'000'000)) {
                std::cout << "skip expect n=" << n << " (space too large)\n";
                continue;
            }
            report(verify_expectations(m, n));
            report(verify_identity_chain(m, n));
        }
    }
    if (suite == "martingale" || suite == "all") {
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            if (!space_ok(n, 100'000)) {
                std::cout << "skip martingale n=" << n << " (space too large)\n";
                continue;
            }
            if (m == 2) {
                report(verify_binary_martingale(n));
            } else if (n >= 3) {
                report(verify_mary_sandwich(m, n));
            } else {
                std::cout << "skip martingale n=" << n
                          << " (DomainTooSmall: sandwich requires n > 2)\n";
            }
        }
    }

    std::cout << (all_passed ? "PASS" : "FAIL") << " (" << total_checks << " checks)\n";
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-length Levenshtein ball statistics"};
    app.require_subcommand(1);

    std::string word_text, word_text2;
    std::uint32_t m = 2;
    std::uint64_t n = 0, radius = 1, samples = 5000, seed = 0, n_max = 6;
    double c = 1.0;
    std::string method = "both", which = "ball", suite = "all";
    std::string c_grid_text, out_path, format = "csv";
    bool list_members = false;

    auto* stats = app.add_subcommand("stats", "run/segment statistics of a word");
    stats->add_option("word", word_text)->required();
    stats->add_option("--m", m, "alphabet size")->required();

    auto* ball = app.add_subcommand("ball", "FLL ball size (closed form and/or enumeration)");
    ball->add_option("word", word_text)->required();
    ball->add_option("--m", m)->required();
    ball->add_option("--radius", radius)->default_val(1);
    ball->add_option("--method", method)
        ->check(CLI::IsMember({"formula", "enumerate", "both"}))
        ->default_val("both");
    ball->add_flag("--list", list_members, "also print the ball members");

    auto* distance = app.add_subcommand("distance", "FLL distance between two words");
    distance->add_option("x", word_text)->required();
    distance->add_option("y", word_text2)->required();
    distance->add_option("--m", m)->required();

    auto* expect = app.add_subcommand("expect", "exact expectation of a statistic");
    expect->add_option("--m", m)->required();
    expect->add_option("--n", n)->required();
    expect->add_option("--which", which)
        ->check(CLI::IsMember({"rho", "a", "sums", "sums2", "h", "t", "ball"}))
        ->required();

    auto* mart = app.add_subcommand("martingale", "Doob martingale trace as CSV");
    mart->add_option("word", word_text)->required();
    mart->add_option("--m", m)->required();
    mart->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "exact", "bruteforce"}))
        ->default_val("auto");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo tail-frequency report");
    simulate->add_option("--m", m)->required();
    simulate->add_option("--n", n)->required();
    simulate->add_option("--samples", samples)->required();
    simulate->add_option("--seed", seed)->default_val(0);
    simulate->add_option("--c-grid", c_grid_text, "comma-separated c values");
    simulate->add_option("--out", out_path, "output file (stdout when omitted)");
    simulate->add_option("--format", format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");

    auto* bounds = app.add_subcommand("bounds", "Azuma tail bound at threshold c");
    bounds->add_option("--m", m)->required();
    bounds->add_option("--n", n)->required();
    bounds->add_option("--c", c)->required();

    auto* verify = app.add_subcommand("verify", "exhaustive formula-vs-oracle conformance");
    verify->add_option("--m", m)->required();
    verify->add_option("--n-max", n_max)->required();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"ball", "expect", "martingale", "all"}))
        ->default_val("all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed()) return run_stats(word_text, m);
        if (ball->parsed()) return run_ball(word_text, m, radius, method, list_members);
        if (distance->parsed()) return run_distance(word_text, word_text2, m);
        if (expect->parsed()) return run_expect(m, n, which);
        if (mart->parsed()) return run_martingale(word_text, m, method);
        if (simulate->parsed())
            return run_simulate(m, n, samples, seed, c_grid_text, out_path, format);
        if (bounds->parsed()) return run_bounds(m, n, c);
        if (verify->parsed()) return run_verify(m, n_max, suite);
    } catch (const fll::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
