// Exact rational arithmetic on 64-bit integers.
//
// Complexity values are exact half-integers (and other small fractions), so
// everything here is integer-based; there is no floating point anywhere in the
// library. Rationals are kept normalized: positive denominator, gcd(num, den) = 1.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shadowcalc {

/** An exact rational number p/q with q > 0 and gcd(p, q) = 1. */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

/** Render as "p" when integral, else "p/q" (the JSON convention throughout). */
inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

/**
 * Parse "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on
 * malformed input; this is the parser behind every --r / --cmax style flag.
 */
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument("trailing junk");
            return Rational(n);
        }
        const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("missing part");
        const std::int64_t n = std::stoll(ns, &used);
        if (used != ns.size()) throw std::invalid_argument("trailing junk");
        const std::int64_t d = std::stoll(ds, &used);
        if (used != ds.size()) throw std::invalid_argument("trailing junk");
        return Rational(n, d);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

} // namespace shadowcalc
