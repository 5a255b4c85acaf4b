#include "fll/rational.hpp"

#include <cstdlib>

namespace fll {

Int int_pow(std::uint64_t base, std::uint64_t exponent) {
    Int result = 1;
    Int b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

Rational rational_pow(std::uint64_t base, std::int64_t exponent) {
    const Int p = int_pow(base, static_cast<std::uint64_t>(std::llabs(exponent)));
    if (exponent >= 0) return Rational(p);
    return Rational(1) / Rational(p);
}

std::string to_string(const Rational& value) {
    return value.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::string decimal_string(const Rational& value, int max_fraction_digits) {
    Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    Int integral = num / den;
    Int rem = num % den;
    out += integral.str();
    if (rem == 0 || max_fraction_digits <= 0) return out;

    std::string frac;
    for (int i = 0; i < max_fraction_digits && rem != 0; ++i) {
        rem *= 10;
        frac += static_cast<char>('0' + (rem / den).convert_to<int>());
        rem %= den;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) {
        out += '.';
        out += frac;
    }
    return out;
}

} // namespace fll
