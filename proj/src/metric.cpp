#include "fll/metric.hpp"

#include <algorithm>

namespace fll {

namespace {

void check_same_shape(const Word& x, const Word& y) {
    if (x.size() != y.size()) raise(errc::length_mismatch, "words differ in length");
    if (x.m() != y.m()) raise(errc::alphabet_mismatch, "words differ in alphabet");
}

void delete_rec(const std::vector<std::uint32_t>& x, std::size_t pos,
                std::uint64_t remaining, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
    if (remaining == 0) {
        std::vector<std::uint32_t> full = cur;
        full.insert(full.end(), x.begin() + pos, x.end());
        out.push_back(std::move(full));
        return;
    }
    if (x.size() - pos < remaining) return;
    // delete x[pos]
    delete_rec(x, pos + 1, remaining - 1, cur, out);
    // keep x[pos]
    cur.push_back(x[pos]);
    delete_rec(x, pos + 1, remaining, cur, out);
    cur.pop_back();
}

std::vector<std::vector<std::uint32_t>> insert_one(
    const std::vector<std::uint32_t>& u, std::uint32_t m) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve((u.size() + 1) * m);
    for (std::size_t pos = 0; pos <= u.size(); ++pos) {
        for (std::uint32_t s = 0; s < m; ++s) {
            std::vector<std::uint32_t> y;
            y.reserve(u.size() + 1);
            y.insert(y.end(), u.begin(), u.begin() + pos);
            y.push_back(s);
            y.insert(y.end(), u.begin() + pos, u.end());
            out.push_back(std::move(y));
        }
    }
    return out;
}

WordSet set_from_raw(std::vector<std::vector<std::uint32_t>> raw, std::uint32_t m) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Word> words;
    words.reserve(raw.size());
    for (auto& symbols : raw) words.emplace_back(std::move(symbols), m);
    return WordSet::from_words(std::move(words));
}

// Union of two sorted-unique vectors, result sorted-unique.
void merge_into(std::vector<std::vector<std::uint32_t>>& target,
                std::vector<std::vector<std::uint32_t>> fresh) {
    std::vector<std::vector<std::uint32_t>> merged;
    merged.reserve(target.size() + fresh.size());
    std::set_union(target.begin(), target.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
    target = std::move(merged);
}

// One-step ball expansion of z into the sorted accumulator: insert one symbol
// into each single-deletion subsequence, deduplicating per deletion center so
// memory stays at O(|ball|). Deleting from a length-1 word passes through the
// empty word and reaches every single symbol.
void expand_one_step(const std::vector<std::uint32_t>& z, std::uint32_t m,
                     std::vector<std::vector<std::uint32_t>>& ball) {
    const std::size_t n = z.size();
    std::vector<std::uint32_t> u;
    for (std::size_t del = 0; del < n; ++del) {
        u.assign(z.begin(), z.end());
        u.erase(u.begin() + del);
        auto inserted = insert_one(u, m);
        std::sort(inserted.begin(), inserted.end());
        inserted.erase(std::unique(inserted.begin(), inserted.end()), inserted.end());
        merge_into(ball, std::move(inserted));
    }
}

} // namespace

WordSet WordSet::from_words(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (!words.empty()) {
        const std::size_t n = words.front().size();
        const std::uint32_t m = words.front().m();
        for (const Word& w : words) {
            if (w.size() != n) raise(errc::length_mismatch, "mixed lengths in word set");
            if (w.m() != m) raise(errc::alphabet_mismatch, "mixed alphabets in word set");
        }
    }
    WordSet set;
    set.elems_ = std::move(words);
    return set;
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(elems_.begin(), elems_.end(), w);
}

bool WordSet::intersects(const WordSet& other) const {
    // both sorted: linear merge scan
    auto it = elems_.begin();
    auto jt = other.elems_.begin();
    while (it != elems_.end() && jt != other.elems_.end()) {
        if (*it == *jt) return true;
        if (*it < *jt) ++it;
        else ++jt;
    }
    return false;
}

std::string WordSet::to_lines() const {
    std::string out;
    for (const Word& w : elems_) {
        out += w.str();
        out += '\n';
    }
    return out;
}

WordSet deletion_sphere(const Word& x, std::uint64_t t) {
    if (t >= x.size()) raise(errc::radius_too_large, "deletion radius >= word length");
    if (t == 0) return WordSet::from_words({x});
    std::vector<std::vector<std::uint32_t>> raw;
    std::vector<std::uint32_t> cur;
    delete_rec(x.symbols(), 0, t, cur, raw);
    return set_from_raw(std::move(raw), x.m());
}

WordSet insertion_sphere(const Word& x, std::uint64_t t) {
    std::vector<std::vector<std::uint32_t>> frontier = {x.symbols()};
    for (std::uint64_t step = 0; step < t; ++step) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& u : frontier) {
            auto ins = insert_one(u, x.m());
            next.insert(next.end(), std::make_move_iterator(ins.begin()),
                        std::make_move_iterator(ins.end()));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
    }
    return set_from_raw(std::move(frontier), x.m());
}

Int insertion_count(std::uint64_t n, std::uint64_t r, std::uint32_t m) {
    if (m < 2) raise(errc::alphabet_too_small, "alphabet size must be at least 2");
    Int total = 0;
    Int binom = 1; // C(n+r, i)
    Int mm1_pow = 1;
    for (std::uint64_t i = 0; i <= r; ++i) {
        total += binom * mm1_pow;
        binom = binom * (Int(n) + Int(r) - Int(i)) / (Int(i) + 1);
        mm1_pow *= (m - 1);
    }
    return total;
}

std::uint64_t lcs_length(const Word& x, const Word& y) {
    const auto& a = x.symbols();
    const auto& b = y.symbols();
    std::vector<std::uint64_t> row(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::uint64_t diag = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint64_t above = row[j];
            row[j] = (a[i - 1] == b[j - 1]) ? diag + 1 : std::max(row[j], row[j - 1]);
            diag = above;
        }
    }
    return row[b.size()];
}

std::uint64_t fll_distance(const Word& x, const Word& y) {
    check_same_shape(x, y);
    return x.size() - lcs_length(x, y);
}

std::uint64_t fll_distance_definitional(const Word& x, const Word& y) {
    check_same_shape(x, y);
    const std::uint64_t n = x.size();
    // t = n always succeeds: D_n is the empty word for both.
    for (std::uint64_t t = 0; t < n; ++t) {
        if (deletion_sphere(x, t).intersects(deletion_sphere(y, t))) return t;
    }
    return n;
}

WordSet fll_ball(const Word& x, std::uint64_t t) {
    if (t > x.size()) raise(errc::radius_too_large, "ball radius exceeds word length");
    std::vector<std::vector<std::uint32_t>> ball = {x.symbols()};
    std::vector<std::vector<std::uint32_t>> frontier = {x.symbols()};
    for (std::uint64_t step = 0; step < t && !frontier.empty(); ++step) {
        const std::vector<std::vector<std::uint32_t>> before = ball;
        for (const auto& z : frontier) expand_one_step(z, x.m(), ball);
        // next round expands only the words added in this one
        frontier.clear();
        std::set_difference(ball.begin(), ball.end(), before.begin(), before.end(),
                            std::back_inserter(frontier));
    }
    return set_from_raw(std::move(ball), x.m());
}

} // namespace fll
