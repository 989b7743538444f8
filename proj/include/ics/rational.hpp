#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator, used by the
// exact characteristic-polynomial path and by test oracles. Overflow is
// detected and reported, never wrapped.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "ics/errors.hpp"

namespace ics {

class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : num_(value), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Exact conversion: every finite double is a dyadic rational. Throws
    // NotRational when the dyadic form does not fit in 64 bits (e.g. 1.0/3.0).
    static Rational from_double_exact(double x) {
        if (!std::isfinite(x)) fail(ErrorCode::not_rational, "non-finite value");
        if (x == 0.0) return Rational(0);
        int exp2 = 0;
        const double mant_scaled = std::frexp(x, &exp2); // x = mant_scaled * 2^exp2, |mant| in [0.5, 1)
        auto mant = static_cast<long long>(std::ldexp(mant_scaled, 53));
        int e = exp2 - 53;
        while (mant != 0 && (mant & 1) == 0) {
            mant >>= 1;
            ++e;
        }
        if (e >= 0) {
            if (e > 62) fail(ErrorCode::not_rational, "dyadic exponent too large");
            return Rational(checked(static_cast<__int128>(mant) << e), 1);
        }
        if (-e > 62) fail(ErrorCode::not_rational, "dyadic denominator too large");
        return Rational(mant, 1LL << -e);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return make(num, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(ErrorCode::overflow, "rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::overflow, "rational arithmetic overflow");
        return static_cast<long long>(v);
    }

    static Rational make(__int128 num, __int128 den) {
        if (den == 0) fail(ErrorCode::overflow, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = checked(num);
        r.den_ = checked(den);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() { *this = make(num_, den_); }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace ics
