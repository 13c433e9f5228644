#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "conevol/errors.hpp"

namespace conevol {

// Every geometric quantity in the library is an exact rational. The GMP
// backend keeps values canonical (reduced, positive denominator), so == and
// < are exact and values are safe as map keys.
using ExactScalar = boost::multiprecision::mpq_rational;
using ExactInt = boost::multiprecision::mpz_int;

/// Parses the literal grammar `-?[0-9]+(/[0-9]+)?`. The denominator must be
/// positive; the value is reduced on construction, so "2/4" parses to 1/2.
inline ExactScalar parse_rational(std::string_view text) {
    auto fail = [&] {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) fail();
    std::string num_str(text.substr(0, pos));

    std::string den_str = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin || pos != text.size()) fail();
        den_str = std::string(text.substr(den_begin));
    }

    ExactInt den(den_str);
    if (den == 0) fail();
    // Division canonicalizes; the mpq string constructor would not.
    return ExactScalar(ExactInt(num_str)) / ExactScalar(den);
}

/// Canonical text form "p/q", with "/q" omitted for integers.
inline std::string rational_literal(const ExactScalar& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

/// Rough operand size, used to prefer small pivots during elimination.
inline std::size_t bit_length(const ExactScalar& x) {
    if (x == 0) return 0;
    ExactInt num = boost::multiprecision::abs(numerator(x));
    ExactInt den = denominator(x);
    return static_cast<std::size_t>(boost::multiprecision::msb(num)) +
           static_cast<std::size_t>(boost::multiprecision::msb(den)) + 2;
}

inline ExactInt factorial(int n) {
    ExactInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace conevol
