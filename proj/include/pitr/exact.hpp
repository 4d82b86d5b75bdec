#pragma once

// Checked 128-bit integer arithmetic and a reduced rational built on it.
// Every quantity the library computes is an exact combinatorial count; an
// operation that would leave the 128-bit range throws ArithmeticOverflow
// instead of wrapping.

#include <pitr/error.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace pitr {

using wide = __int128;

namespace exact {

inline wide add(wide a, wide b) {
    wide r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit add overflow");
    return r;
}

inline wide sub(wide a, wide b) {
    wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit sub overflow");
    return r;
}

inline wide mul(wide a, wide b) {
    wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit mul overflow");
    return r;
}

inline wide pow(wide base, unsigned exponent) {
    wide r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = mul(r, base);
    return r;
}

/// Quotient that must be exact; a nonzero remainder means the caller's
/// algebra is wrong, which is reported as an overflow-class defect.
inline wide div_exact(wide num, wide den) {
    if (den == 0 || num % den != 0) throw ArithmeticOverflow("inexact division");
    return num / den;
}

inline wide abs(wide v) { return v < 0 ? sub(0, v) : v; }

inline wide gcd(wide a, wide b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(wide v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // magnitude via unsigned to cover the minimum value
    unsigned __int128 m = neg ? (unsigned __int128)0 - (unsigned __int128)v : (unsigned __int128)v;
    std::string out;
    while (m != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
}

} // namespace exact

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;

    Rational(wide num, wide den = 1) {
        if (den == 0) throw ArithmeticOverflow("zero denominator");
        if (den < 0) {
            num = exact::sub(0, num);
            den = exact::sub(0, den);
        }
        wide g = exact::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    wide num() const { return num_; }
    wide den() const { return den_; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        wide lhs = exact::mul(a.num_, b.den_);
        wide rhs = exact::mul(b.num_, a.den_);
        return lhs <=> rhs;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(exact::sub(exact::mul(a.num_, b.den_), exact::mul(b.num_, a.den_)),
                        exact::mul(a.den_, b.den_));
    }

    Rational abs() const { return Rational(exact::abs(num_), den_); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string fraction() const { return exact::to_string(num_) + "/" + exact::to_string(den_); }

    /// Fixed-point rendering with round-half-even at the last place.
    std::string decimal(unsigned places = 6) const {
        wide scale = exact::pow(10, places);
        bool neg = num_ < 0;
        wide n = exact::mul(exact::abs(num_), scale);
        wide q = n / den_;
        wide rem = n % den_;
        wide twice = exact::mul(rem, 2);
        if (twice > den_ || (twice == den_ && q % 2 == 1)) q = exact::add(q, 1);
        std::string digits = exact::to_string(q);
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        std::string out = digits.substr(0, digits.size() - places);
        if (places > 0) out += "." + digits.substr(digits.size() - places);
        return (neg && q != 0 ? "-" : "") + out;
    }

private:
    wide num_ = 0;
    wide den_ = 1;
};

} // namespace pitr
