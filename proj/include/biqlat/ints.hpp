#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace biqlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_int division truncates toward zero; these give the floor variants.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

// Nearest integer, halves rounding up: floor(x + 1/2).
inline Int round_nearest(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    return floor_div(2 * num + den, 2 * den);
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline std::string int_str(const Int& z) { return z.str(); }

// "p" when the denominator is 1, "p/q" otherwise (always lowest terms).
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::optional<Int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return std::nullopt;
    return Int(std::string(s));
}

inline std::optional<Rat> parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

}  // namespace biqlat
