#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "manin/errors.hpp"

namespace manin {

// Arbitrary-precision signed integer, sign-magnitude with base-10^9 limbs.
// Magnitudes in this project stay small (a few hundred decimal digits), so
// schoolbook multiplication and per-digit long division are plenty.
class BigInt {
public:
    BigInt() = default;

    template <std::integral T>
    BigInt(T value) {
        long long v = static_cast<long long>(value);
        if (v < 0) {
            sign_ = -1;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
            store_magnitude(m);
        } else if (v > 0) {
            sign_ = 1;
            store_magnitude(static_cast<unsigned long long>(v));
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw parse_error("empty integer literal");
        int sign = 1;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            sign = (s[0] == '-') ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) throw parse_error("sign without digits in integer literal");
        BigInt r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw parse_error("invalid digit in integer literal");
            r = r.mul_small(10);
            r = add_magnitudes_small(r, static_cast<std::uint32_t>(c - '0'));
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign and |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw error("division by zero");
        if (a.is_zero()) {
            q = BigInt();
            r = BigInt();
            return;
        }
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> quot(a.limbs_.size(), 0);
        std::vector<std::uint32_t> rem; // little-endian magnitude, running remainder
        for (std::size_t idx = a.limbs_.size(); idx-- > 0;) {
            rem.insert(rem.begin(), a.limbs_[idx]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            // binary search the largest digit d with b*d <= rem
            std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
            while (lo <= hi) {
                std::uint32_t mid = lo + (hi - lo) / 2;
                std::vector<std::uint32_t> t = mul_mag_small(b.limbs_, mid);
                if (cmp_mag(t, rem) <= 0) {
                    digit = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            if (digit) {
                std::vector<std::uint32_t> t = mul_mag_small(b.limbs_, digit);
                rem = sub_mag(rem, t);
            }
            quot[idx] = digit;
        }
        q.limbs_ = std::move(quot);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rem);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = std::move(b);
            b = std::move(t);
        }
        return a;
    }

    BigInt pow(std::uint64_t e) const {
        BigInt base = *this, result(1);
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    bool fits_int64() const {
        static const BigInt lo(std::numeric_limits<std::int64_t>::min());
        static const BigInt hi(std::numeric_limits<std::int64_t>::max());
        return *this >= lo && *this <= hi;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw arithmetic_overflow_error("bigint does not fit in 64 bits");
        std::int64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return sign_ < 0 ? -v : v;
    }

private:
    static constexpr std::uint32_t kBase = 1000000000;

    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros, empty iff zero

    void store_magnitude(unsigned long long m) {
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    BigInt mul_small(std::uint32_t m) const {
        BigInt r;
        r.limbs_ = mul_mag_small(limbs_, m);
        r.sign_ = r.limbs_.empty() ? 0 : sign_;
        return r;
    }

    static BigInt add_magnitudes_small(const BigInt& a, std::uint32_t v) {
        BigInt b(static_cast<long long>(v));
        if (a.sign_ < 0) b.sign_ = -b.sign_; // keep digit accumulation sign-consistent
        return a + b;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag_small(const std::vector<std::uint32_t>& a,
                                                    std::uint32_t m) {
        std::vector<std::uint32_t> r;
        if (m == 0) return r;
        r.reserve(a.size() + 1);
        std::uint64_t carry = 0;
        for (std::uint32_t limb : a) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            r.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        while (carry) {
            r.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace manin
