#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cliquegap/errors.hpp"

namespace cg {

// Exact non-negative rational on machine integers. Probabilities and the δ/ε
// parameters stay exact end to end; nothing in this library compares floats.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw ParameterError("rational with zero denominator");
        normalize();
    }

    void normalize() {
        const std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    static Rational parse(const std::string& text);
};

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

inline bool operator<(const Rational& a, const Rational& b) {
    return (unsigned __int128)(a.num) * b.den < (unsigned __int128)(b.num) * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

inline Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

// a - b, clamped at zero for a < b.
inline Rational monus(const Rational& a, const Rational& b) {
    const unsigned __int128 lhs = (unsigned __int128)(a.num) * b.den;
    const unsigned __int128 rhs = (unsigned __int128)(b.num) * a.den;
    if (lhs <= rhs) return Rational(0, 1);
    return Rational(static_cast<std::uint64_t>(lhs - rhs), a.den * b.den);
}

// ⌈k · q⌉ in exact integer arithmetic.
inline std::uint64_t ceil_scale(std::uint64_t k, const Rational& q) {
    const unsigned __int128 prod = (unsigned __int128)(k)*q.num;
    return static_cast<std::uint64_t>((prod + q.den - 1) / q.den);
}

inline Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoull(text), 1);
        return Rational(std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParameterError("cannot parse rational '" + text + "'");
    }
}

} // namespace cg
