#include "fll/word.hpp"

#include <algorithm>
#include <charconv>

namespace fll {

namespace {

constexpr std::uint32_t kMaxAlphabet = 1u << 16;

void check_alphabet(std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    if (m > kMaxAlphabet) raise(errc::invalid_config, "alphabet size above 2^16");
}

} // namespace

Word::Word(std::vector<std::uint32_t> symbols, std::uint32_t m)
    : symbols_(std::move(symbols)), m_(m) {
    check_alphabet(m);
    if (symbols_.empty()) raise(errc::empty_word, "words must be nonempty");
    for (std::uint32_t s : symbols_) {
        if (s >= m_) {
            raise(errc::symbol_out_of_range,
                  "symbol " + std::to_string(s) + " not in Z_" + std::to_string(m_));
        }
    }
}

Word Word::parse(std::string_view text, std::uint32_t m) {
    check_alphabet(m);
    std::vector<std::uint32_t> symbols;
    if (m <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                raise(errc::parse_error, std::string("invalid digit '") + c + "'");
            }
            symbols.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view field =
                text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc() || ptr != field.data() + field.size()) {
                raise(errc::parse_error, "invalid symbol '" + std::string(field) + "'");
            }
            symbols.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Word(std::move(symbols), m);
}

Word Word::prefix(std::size_t len) const {
    return subword(1, len);
}

Word Word::subword(std::size_t first, std::size_t last) const {
    if (first < 1 || last > size() || first > last) {
        raise(errc::index_out_of_range, "subword bounds out of range");
    }
    return Word(std::vector<std::uint32_t>(symbols_.begin() + first - 1,
                                           symbols_.begin() + last),
                m_);
}

std::string Word::str() const {
    std::string out;
    if (m_ <= 10) {
        out.reserve(size());
        for (std::uint32_t s : symbols_) out += static_cast<char>('0' + s);
    } else {
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) out += ',';
            out += std::to_string(symbols_[i]);
        }
    }
    return out;
}

std::uint64_t SegmentProfile::sum_s() const {
    std::uint64_t total = 0;
    for (std::uint64_t s : segment_lengths) total += s;
    return total;
}

std::uint64_t SegmentProfile::sum_s2() const {
    std::uint64_t total = 0;
    for (std::uint64_t s : segment_lengths) total += s * s;
    return total;
}

SegmentProfile profile(const Word& w) {
    const auto& x = w.symbols();
    const std::size_t n = x.size();
    SegmentProfile p;

    std::size_t run_start = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (x[k] != x[k - 1]) {
            p.run_lengths.push_back(k - run_start);
            run_start = k;
        }
    }
    p.run_lengths.push_back(n - run_start);
    p.rho = p.run_lengths.size();

    std::size_t seg_start = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const bool extends =
            x[k] != x[k - 1] && (k == seg_start + 1 || x[k] == x[k - 2]);
        if (!extends) {
            p.segment_lengths.push_back(k - seg_start);
            seg_start = (x[k] != x[k - 1]) ? k - 1 : k;
        }
    }
    p.segment_lengths.push_back(n - seg_start);

    p.a = p.segment_lengths.size();
    p.h = p.segment_lengths.front();
    p.t = p.segment_lengths.back();
    return p;
}

SegmentProfile brute_force_profile(const Word& w) {
    const auto& x = w.symbols();
    const std::size_t n = x.size();

    // All alternating intervals [i,j], 0-based inclusive.
    auto is_alternating = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = i + 1; k <= j; ++k) {
            if (x[k] == x[k - 1]) return false;
            if (k >= i + 2 && x[k] != x[k - 2]) return false;
        }
        return true;
    };

    std::vector<std::pair<std::size_t, std::size_t>> alternating;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (is_alternating(i, j)) alternating.emplace_back(i, j);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> maximal;
    for (const auto& [i, j] : alternating) {
        bool contained = false;
        for (const auto& [p2, q2] : alternating) {
            if ((p2 != i || q2 != j) && p2 <= i && j <= q2) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.emplace_back(i, j);
    }
    std::sort(maximal.begin(), maximal.end());

    SegmentProfile p;
    for (const auto& [i, j] : maximal) p.segment_lengths.push_back(j - i + 1);
    p.a = p.segment_lengths.size();
    p.h = p.segment_lengths.front();
    p.t = p.segment_lengths.back();

    std::size_t run_start = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (x[k] != x[k - 1]) {
            p.run_lengths.push_back(k - run_start);
            run_start = k;
        }
    }
    p.run_lengths.push_back(n - run_start);
    p.rho = p.run_lengths.size();
    return p;
}

Word shift_word(const Word& w, std::uint32_t k) {
    std::vector<std::uint32_t> symbols = w.symbols();
    const std::uint32_t m = w.m();
    for (auto& s : symbols) s = (s + k) % m;
    return Word(std::move(symbols), m);
}

Word reverse_word(const Word& w) {
    std::vector<std::uint32_t> symbols = w.symbols();
    std::reverse(symbols.begin(), symbols.end());
    return Word(std::move(symbols), w.m());
}

ProfileAccumulator accumulate(std::span<const std::uint32_t> symbols) {
    ProfileAccumulator acc;
    for (std::uint32_t s : symbols) acc.push(s);
    return acc;
}

} // namespace fll
