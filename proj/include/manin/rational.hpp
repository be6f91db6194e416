#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include "manin/bigint.hpp"
#include "manin/errors.hpp"
#include "manin/ints.hpp"

namespace manin {

// Exact rational number: arbitrary-precision numerator over a positive
// denominator, always stored in lowest terms.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw error("rational with zero denominator");
        normalize();
    }

    template <std::integral T, std::integral U>
    Rational(T n, U d) : Rational(BigInt(n), BigInt(d)) {}

    // Accepts "p/q" or a bare integer; decimal notation is rejected so the
    // command line stays exact.
    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
        if (s.find('/', slash + 1) != std::string_view::npos)
            throw parse_error("rational literal has more than one '/'");
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw error("inverse of zero");
        return Rational(den_, num_);
    }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        return Rational(num_.pow(static_cast<std::uint64_t>(e)),
                        den_.pow(static_cast<std::uint64_t>(e)));
    }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.sign() < 0) q = q - BigInt(1);
        return q;
    }

    BigInt ceil() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.sign() > 0) q = q + BigInt(1);
        return q;
    }

    // Canonical "num/den" form; the denominator is always printed so the
    // serialized value is unambiguous and bit-exact.
    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g > BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational rational_from_int(Int v) { return Rational(static_cast<long long>(v)); }

} // namespace manin
