#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace semispace {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Reduced "p/q" form; the denominator is omitted when it is 1.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

// 12 significant digits, matching the serialized float format.
inline std::string to_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string to_decimal(const Rational& r) {
    return to_decimal(to_double(r));
}

}  // namespace semispace
