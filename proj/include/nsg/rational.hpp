#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "nsg/checked.hpp"

namespace nsg {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator, so equality is
/// structural. Every arithmetic step is overflow-checked and throws
/// `overflow_error` rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(i64 n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (den_ == 0)
            throw precondition_error("rational with zero denominator");
        normalize();
    }

    i64 num() const noexcept { return num_; }
    i64 den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i64 g = std::gcd(a.den_, b.den_);
        i64 lhs = checked_mul(a.num_, b.den_ / g);
        i64 rhs = checked_mul(b.num_, a.den_ / g);
        return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
    }
    friend Rational operator-(const Rational& a) { return {checked_sub(0, a.num_), a.den_}; }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-reduce first to keep intermediates small
        i64 g1 = std::gcd(a.num_, b.den_);
        i64 g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw precondition_error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    // "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts the format produced by to_string.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked_sub(0, num_);
            den_ = checked_sub(0, den_);
        }
        i64 g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

} // namespace nsg
