#pragma once

// Bases, the alphabet-size decomposition l_A = p^(n-1) + d, and shortlex
// enumeration of base-p digit strings.

#include <pitr/error.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace pitr {

inline constexpr std::uint32_t kMaxBase = 1u << 16;
/// Largest alphabet a file (and the container header) may declare.
inline constexpr std::uint64_t kMaxFileAlphabet = std::numeric_limits<std::uint32_t>::max();

/// Number of distinct values a single pit can take; 2 <= p <= 2^16.
class Base {
public:
    std::uint32_t value() const noexcept { return p_; }
    friend bool operator==(Base, Base) = default;
    friend auto operator<=>(Base, Base) = default;

private:
    explicit constexpr Base(std::uint32_t p) noexcept : p_(p) {}
    friend Base validate_base(std::uint64_t p);

    std::uint32_t p_;
};

inline Base validate_base(std::uint64_t p) {
    if (p < 2 || p > kMaxBase)
        throw BaseOutOfRange("base " + std::to_string(p) + " outside [2, 65536]");
    return Base(static_cast<std::uint32_t>(p));
}

namespace detail {

/// p^e, or nullopt-like sentinel 0 when it does not fit in 64 bits.
inline std::uint64_t pow_u64(std::uint64_t p, unsigned e) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, p, &r)) return 0;
    }
    return r;
}

} // namespace detail

/// Alphabet decomposition l_A = p^(rank-1) + remainder with
/// 0 < remainder <= p^rank - p^(rank-1).
struct CodeParams {
    Base base;
    std::uint64_t alphabet;
    unsigned rank;
    std::uint64_t remainder;

    std::uint32_t p() const noexcept { return base.value(); }
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// The rank is the smallest n with p^n >= l_A, so l_A = p^m lands on rank m
/// with the maximal remainder p^m - p^(m-1).
///
/// Alphabets beyond kMaxFileAlphabet are accepted here because inner codec
/// passes recode block alphabets p^g that can exceed it.
inline CodeParams decompose(std::uint64_t alphabet, Base base) {
    if (alphabet < 2) throw AlphabetTooSmall("alphabet size " + std::to_string(alphabet) + " < 2");
    const std::uint64_t p = base.value();
    unsigned rank = 1;
    std::uint64_t lower = 1; // p^(rank-1)
    while (true) {
        std::uint64_t upper;
        // overflow means p^rank exceeds every uint64 alphabet
        if (__builtin_mul_overflow(lower, p, &upper) || upper >= alphabet) break;
        lower = upper;
        ++rank;
    }
    return CodeParams{base, alphabet, rank, alphabet - lower};
}

/// Ordered base-p digits; each digit is a pit in [0, p).
class PitString {
public:
    explicit PitString(Base base) : base_(base) {}

    PitString(Base base, std::vector<std::uint32_t> digits) : base_(base), digits_(std::move(digits)) {
        for (auto d : digits_) check(d);
    }

    Base base() const noexcept { return base_; }
    const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return digits_[i]; }

    void push_back(std::uint32_t digit) {
        check(digit);
        digits_.push_back(digit);
    }

    void reserve(std::size_t n) { digits_.reserve(n); }

    /// Digits rendered without separators when p <= 10, dot-separated otherwise.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (base_.value() > 10 && i != 0) out += '.';
            out += std::to_string(digits_[i]);
        }
        return out;
    }

    friend bool operator==(const PitString&, const PitString&) = default;
    friend auto operator<=>(const PitString& a, const PitString& b) {
        if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
        return a.digits_ <=> b.digits_;
    }

private:
    void check(std::uint32_t digit) const {
        if (digit >= base_.value())
            throw PitOutOfRange("pit " + std::to_string(digit) + " not below base " +
                                std::to_string(base_.value()));
    }

    Base base_;
    std::vector<std::uint32_t> digits_;
};

/// `value` written as exactly `length` big-endian base-p digits.
inline PitString digits_of(std::uint64_t value, unsigned length, Base base) {
    std::vector<std::uint32_t> digits(length, 0);
    const std::uint64_t p = base.value();
    for (unsigned i = length; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(value % p);
        value /= p;
    }
    return PitString(base, std::move(digits));
}

/// The first `count` strings of length 1..max_len in shortlex order.
inline std::vector<PitString> shortlex_codewords(Base base, std::uint64_t count, unsigned max_len) {
    std::uint64_t capacity = 0;
    for (unsigned k = 1; k <= max_len && capacity < count; ++k) {
        std::uint64_t pk = detail::pow_u64(base.value(), k);
        if (pk == 0 || __builtin_add_overflow(capacity, pk, &capacity))
            capacity = std::numeric_limits<std::uint64_t>::max();
    }
    if (count > capacity)
        throw CapacityExceeded(std::to_string(count) + " codewords requested, only " +
                               std::to_string(capacity) + " of length <= " + std::to_string(max_len));

    std::vector<PitString> out;
    out.reserve(count);
    for (unsigned k = 1; out.size() < count; ++k) {
        std::uint64_t pk = detail::pow_u64(base.value(), k);
        for (std::uint64_t v = 0; (pk == 0 || v < pk) && out.size() < count; ++v)
            out.push_back(digits_of(v, k, base));
    }
    return out;
}

} // namespace pitr
