#pragma once

#include "fll/error.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fll {

/// An m-ary word: a nonempty sequence of symbols over Z_m, m >= 2.
/// Immutable value type; all statistics are recomputed on demand.
class Word {
public:
    Word(std::vector<std::uint32_t> symbols, std::uint32_t m);

    /// Digits "001100101" for m <= 10, comma-separated integers otherwise.
    static Word parse(std::string_view text, std::uint32_t m);

    const std::vector<std::uint32_t>& symbols() const noexcept { return symbols_; }
    std::uint32_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return symbols_[i]; }

    /// x_{[1,len]} (1-based in the usual notation); len >= 1.
    Word prefix(std::size_t len) const;
    /// x_{[first,last]}, 1-based inclusive bounds.
    Word subword(std::size_t first, std::size_t last) const;

    std::string str() const;

    bool operator==(const Word& other) const noexcept {
        return symbols_ == other.symbols_;
    }
    std::strong_ordering operator<=>(const Word& other) const noexcept {
        return symbols_ <=> other.symbols_;
    }

private:
    std::vector<std::uint32_t> symbols_;
    std::uint32_t m_;
};

/// Run / alternating-segment decomposition of a word.
///
/// A run is a maximal block of identical adjacent symbols. An alternating
/// segment is a maximal interval of the form abab... (a != b). For m >= 3,
/// when a segment ends at position k-1 because x_k differs from both x_{k-1}
/// and x_{k-2}, the next segment starts at k-1 (the two segments overlap in
/// one position); when it ends because x_k = x_{k-1}, the next starts at k.
struct SegmentProfile {
    std::uint64_t rho = 0;                      // number of runs
    std::uint64_t a = 0;                        // number of alternating segments
    std::vector<std::uint64_t> segment_lengths; // s_1..s_a, left to right
    std::uint64_t h = 0;                        // s_1
    std::uint64_t t = 0;                        // s_a
    std::vector<std::uint64_t> run_lengths;

    std::uint64_t sum_s() const;
    std::uint64_t sum_s2() const;

    bool operator==(const SegmentProfile&) const = default;
};

SegmentProfile profile(const Word& w);

/// Test oracle: enumerates every interval, tests the abab... form directly,
/// and keeps intervals maximal under inclusion. O(n^3); n <= 20 recommended.
SegmentProfile brute_force_profile(const Word& w);

/// Each symbol mapped to (symbol + k) mod m.
Word shift_word(const Word& w, std::uint32_t k);

Word reverse_word(const Word& w);

/// O(1)-per-symbol accumulator for the scalar segment statistics. Used by the
/// exhaustive enumeration and conditional-expectation engines, where building
/// a full SegmentProfile per word would dominate the runtime.
struct ProfileAccumulator {
    std::uint64_t count = 0;     // symbols consumed
    std::uint64_t rho = 0;
    std::uint64_t closed_a = 0;  // segments closed so far
    std::uint64_t closed_sum_s = 0;
    std::uint64_t closed_sum_s2 = 0;
    std::uint64_t first_seg = 0; // 0 until the first segment closes
    std::uint64_t cur_seg = 0;   // length of the open segment
    std::uint32_t last = 0;      // last symbol
    std::uint32_t prev = 0;      // second-to-last symbol (valid when count >= 2)

    void push(std::uint32_t s) {
        if (count == 0) {
            rho = 1;
            cur_seg = 1;
        } else if (s == last) {
            close_segment();
            cur_seg = 1;
        } else {
            ++rho;
            if (cur_seg == 1) {
                cur_seg = 2;
            } else if (s == prev) {
                ++cur_seg;
            } else {
                close_segment();
                cur_seg = 2; // restarts one position back (overlap)
            }
        }
        prev = last;
        last = s;
        ++count;
    }

    std::uint64_t a() const { return closed_a + (count > 0 ? 1 : 0); }
    std::uint64_t sum_s() const { return closed_sum_s + cur_seg; }
    std::uint64_t sum_s2() const { return closed_sum_s2 + cur_seg * cur_seg; }
    std::uint64_t h() const { return first_seg != 0 ? first_seg : cur_seg; }
    std::uint64_t t() const { return cur_seg; }

private:
    void close_segment() {
        ++closed_a;
        closed_sum_s += cur_seg;
        closed_sum_s2 += cur_seg * cur_seg;
        if (first_seg == 0) first_seg = cur_seg;
    }
};

ProfileAccumulator accumulate(std::span<const std::uint32_t> symbols);

/// Visits every extension of `base` by `depth` more symbols over Z_m, in
/// lexicographic order of the appended suffix. The callback receives the
/// accumulator of base+suffix. Keeps one accumulator snapshot per position
/// so each suffix costs O(1) amortized.
template <typename Fn>
void for_each_extension(const ProfileAccumulator& base, std::uint32_t m,
                        std::uint64_t depth, Fn&& fn) {
    if (depth == 0) {
        fn(base);
        return;
    }
    std::vector<std::uint32_t> symbols(depth, 0);
    std::vector<ProfileAccumulator> states(depth + 1);
    states[0] = base;
    std::size_t d = 0;
    while (true) {
        while (d < depth) {
            states[d + 1] = states[d];
            states[d + 1].push(symbols[d]);
            ++d;
        }
        fn(states[depth]);
        // advance odometer
        std::size_t pos = depth;
        while (pos > 0 && symbols[pos - 1] + 1 == m) {
            symbols[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return;
        ++symbols[pos - 1];
        d = pos - 1;
    }
}

/// Visits every word of Z_m^n in lexicographic order. The callback receives
/// the symbol buffer and the accumulator of the full word.
template <typename Fn>
void for_each_word(std::uint32_t m, std::uint64_t n, Fn&& fn) {
    std::vector<std::uint32_t> symbols(n, 0);
    std::vector<ProfileAccumulator> states(n + 1); // states[i] = after i symbols
    std::size_t depth = 0;
    while (true) {
        while (depth < n) {
            states[depth + 1] = states[depth];
            states[depth + 1].push(symbols[depth]);
            ++depth;
        }
        fn(std::span<const std::uint32_t>(symbols), states[n]);
        // advance odometer
        std::size_t pos = n;
        while (pos > 0 && symbols[pos - 1] + 1 == m) {
            symbols[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return;
        ++symbols[pos - 1];
        depth = pos - 1;
    }
}

} // namespace fll
