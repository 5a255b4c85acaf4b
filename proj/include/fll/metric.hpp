#pragma once

#include "fll/rational.hpp"
#include "fll/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fll {

/// A canonicalized set of words: sorted, deduplicated, uniform length and
/// alphabet. Deterministic iteration order makes serialized output bit-exact.
class WordSet {
public:
    WordSet() = default;
    static WordSet from_words(std::vector<Word> words);

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(const Word& w) const;
    bool intersects(const WordSet& other) const;

    const std::vector<Word>& elements() const noexcept { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    /// Newline-separated word strings, lexicographically sorted.
    std::string to_lines() const;

    bool operator==(const WordSet&) const = default;

private:
    std::vector<Word> elems_;
};

/// D_t(x): all length n-t subsequences of x. Requires 0 <= t < n.
WordSet deletion_sphere(const Word& x, std::uint64_t t);

/// I_t(x): all length n+t supersequences of x over Z_m.
WordSet insertion_sphere(const Word& x, std::uint64_t t);

/// |I_r(x)| = sum_{i=0}^{r} C(n+r, i) (m-1)^i, independent of x.
Int insertion_count(std::uint64_t n, std::uint64_t r, std::uint32_t m);

std::uint64_t lcs_length(const Word& x, const Word& y);

/// FLL distance d_l(x,y) = n - LCS(x,y). Fast quadratic-DP path.
std::uint64_t fll_distance(const Word& x, const Word& y);

/// Definitional path: the smallest t with D_t(x) and D_t(y) intersecting.
/// Kept for testing the fast path; exponential in t.
std::uint64_t fll_distance_definitional(const Word& x, const Word& y);

/// L_t(x) = {y in Z_m^n : d_l(x,y) <= t}. Enumerated as the t-fold closure of
/// the one-step delete-then-insert expansion. Requires t <= n.
WordSet fll_ball(const Word& x, std::uint64_t t);

} // namespace fll
