#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace idcode {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts an optional sign, then either an integer, a decimal fraction
// ("3.25"), or an explicit quotient ("13/4").
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + text + "'"); };
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    auto read_digits = [&](BigInt& out) -> size_t {
        size_t start = pos;
        out = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out = out * 10 + (text[pos++] - '0');
        return pos - start;
    };
    BigInt whole;
    if (read_digits(whole) == 0) fail();
    Rational value(whole);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        BigInt frac;
        size_t digits = read_digits(frac);
        if (digits == 0) fail();
        BigInt scale = 1;
        for (size_t i = 0; i < digits; ++i) scale *= 10;
        value += Rational(frac, scale);
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        BigInt den;
        if (read_digits(den) == 0 || den == 0) fail();
        value = Rational(whole, den);
    }
    if (pos != text.size()) fail();
    return negative ? -value : value;
}

// "p/q", or just "p" for integers.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace idcode
