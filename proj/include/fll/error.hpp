#pragma once

#include <stdexcept>
#include <string>

namespace fll {

// Error identities used across the library. Tests match on the code, not on
// the message text.
enum class errc {
    symbol_out_of_range,
    empty_word,
    alphabet_too_small,
    radius_too_large,
    length_mismatch,
    alphabet_mismatch,
    not_binary,
    prefix_length_mismatch,
    index_out_of_range,
    domain_too_small,
    space_too_large,
    invalid_config,
    formula_unavailable,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace fll
