#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace perdet {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational. cpp_rational keeps gcd(num,den)=1, den>0 and 0 = 0/1,
// which is exactly the normal form we need.
using Rational = boost::multiprecision::cpp_rational;

using Complex = std::complex<double>;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::optional<long> as_long(const Rational& r) {
    if (!is_integer(r)) return std::nullopt;
    const BigInt& n = numerator(r);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        return std::nullopt;
    return static_cast<long>(n);
}

// Floor of a rational as a BigInt.
inline BigInt rat_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

// Parse "num/den" or "num" (optionally signed). Throws on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() { throw std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace perdet
