#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulam {

class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact signed integer backed by 128 bits. Every arithmetic operation is
/// overflow-checked and throws OverflowError instead of wrapping. Capacity
/// covers 2^n for all n <= 126, well beyond the swept parameter ranges.
class ExactInt {
public:
    constexpr ExactInt() : v_(0) {}
    constexpr ExactInt(long long x) : v_(x) {}

    static ExactInt pow2(unsigned e) {
        if (e >= 127)
            throw OverflowError("pow2: exponent " + std::to_string(e) + " exceeds capacity");
        ExactInt r;
        r.v_ = static_cast<__int128>(1) << e;
        return r;
    }

    ExactInt operator+(const ExactInt& o) const {
        ExactInt r;
        if (__builtin_add_overflow(v_, o.v_, &r.v_))
            throw OverflowError("ExactInt addition overflow");
        return r;
    }
    ExactInt operator-(const ExactInt& o) const {
        ExactInt r;
        if (__builtin_sub_overflow(v_, o.v_, &r.v_))
            throw OverflowError("ExactInt subtraction overflow");
        return r;
    }
    ExactInt operator*(const ExactInt& o) const {
        ExactInt r;
        if (__builtin_mul_overflow(v_, o.v_, &r.v_))
            throw OverflowError("ExactInt multiplication overflow");
        return r;
    }
    /// Exact division; throws if the divisor is zero or does not divide evenly.
    ExactInt div_exact(const ExactInt& o) const {
        if (o.v_ == 0)
            throw std::domain_error("ExactInt division by zero");
        if (v_ % o.v_ != 0)
            throw std::domain_error("ExactInt inexact division");
        ExactInt r;
        r.v_ = v_ / o.v_;
        return r;
    }
    /// Euclidean remainder: result in [0, |m|).
    ExactInt mod_euclid(const ExactInt& m) const {
        if (m.v_ <= 0)
            throw std::domain_error("mod_euclid: modulus must be positive");
        ExactInt r;
        r.v_ = v_ % m.v_;
        if (r.v_ < 0)
            r.v_ += m.v_;
        return r;
    }
    /// Ceiling of this/2 (exact over integers of either sign).
    ExactInt ceil_half() const {
        ExactInt r;
        r.v_ = (v_ >= 0) ? (v_ + 1) / 2 : v_ / 2;
        return r;
    }

    ExactInt& operator+=(const ExactInt& o) { return *this = *this + o; }
    ExactInt& operator*=(const ExactInt& o) { return *this = *this * o; }

    bool operator==(const ExactInt& o) const { return v_ == o.v_; }
    bool operator!=(const ExactInt& o) const { return v_ != o.v_; }
    bool operator<(const ExactInt& o) const { return v_ < o.v_; }
    bool operator<=(const ExactInt& o) const { return v_ <= o.v_; }
    bool operator>(const ExactInt& o) const { return v_ > o.v_; }
    bool operator>=(const ExactInt& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }

    long long to_int64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN)
            throw OverflowError("ExactInt does not fit in 64 bits");
        return static_cast<long long>(v_);
    }

    std::string str() const {
        if (v_ == 0)
            return "0";
        __int128 x = v_;
        bool neg = x < 0;
        std::string digits;
        while (x != 0) {
            int d = static_cast<int>(x % 10);
            if (d < 0)
                d = -d;
            digits.push_back(static_cast<char>('0' + d));
            x /= 10;
        }
        if (neg)
            digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    __int128 v_;
};

inline ExactInt gcd(ExactInt a, ExactInt b) {
    // Euclid on non-negative values; gcd(0, x) = x.
    if (a < ExactInt(0))
        a = ExactInt(0) - a;
    if (b < ExactInt(0))
        b = ExactInt(0) - b;
    while (!b.is_zero()) {
        ExactInt r = a.mod_euclid(b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace ulam
