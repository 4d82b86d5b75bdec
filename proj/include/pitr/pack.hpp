#pragma once

// Byte packing of pit streams by chunked radix conversion. With m_p the
// largest m such that p^m <= 2^32, every full chunk of m_p pits (first pit
// most significant) becomes its value as 4 big-endian bytes; a trailing
// chunk of r pits takes the fewest bytes B with 256^B >= p^r.

#include <pitr/error.hpp>
#include <pitr/radix.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pitr {

inline constexpr std::uint64_t kChunkLimit = std::uint64_t{1} << 32;

/// Pits per full chunk for base p.
inline unsigned chunk_pits(Base base) noexcept {
    unsigned m = 0;
    std::uint64_t v = 1;
    while (v * base.value() <= kChunkLimit) {
        v *= base.value();
        ++m;
    }
    return m;
}

/// Bytes needed for a chunk of `pits` pits (pits <= chunk_pits(base)).
inline unsigned chunk_bytes(Base base, unsigned pits) noexcept {
    const std::uint64_t span = detail::pow_u64(base.value(), pits);
    unsigned b = 0;
    // 256^b as a 128-bit value so b = 4 (2^32) does not wrap
    while ((static_cast<unsigned __int128>(1) << (8 * b)) < span) ++b;
    return b;
}

inline std::uint64_t packed_size(Base base, std::uint64_t pit_count) noexcept {
    const unsigned m = chunk_pits(base);
    const auto rest = static_cast<unsigned>(pit_count % m);
    return (pit_count / m) * 4 + (rest ? chunk_bytes(base, rest) : 0);
}

namespace detail {

inline void put_chunk(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned bytes) {
    for (unsigned i = bytes; i-- > 0;) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

} // namespace detail

/// Digits are validated against the base when given as a raw span.
inline std::vector<std::uint8_t> pack_pits(Base base, std::span<const std::uint32_t> pits) {
    const unsigned m = chunk_pits(base);
    const std::uint64_t p = base.value();
    std::vector<std::uint8_t> out;
    out.reserve(packed_size(base, pits.size()));
    std::size_t i = 0;
    while (i < pits.size()) {
        const auto len = static_cast<unsigned>(std::min<std::size_t>(m, pits.size() - i));
        std::uint64_t value = 0;
        for (unsigned j = 0; j < len; ++j, ++i) {
            if (pits[i] >= p)
                throw PitOutOfRange("pit " + std::to_string(pits[i]) + " not below base " + std::to_string(p));
            value = value * p + pits[i];
        }
        detail::put_chunk(out, value, len == m ? 4 : chunk_bytes(base, len));
    }
    return out;
}

inline std::vector<std::uint8_t> pack_pits(const PitString& pits) {
    return pack_pits(pits.base(), pits.digits());
}

/// Exact inverse of pack_pits; rejects size mismatches and chunk values
/// that no chunk of that length could produce.
inline std::vector<std::uint32_t> unpack_digits(std::span<const std::uint8_t> bytes, std::uint64_t pit_count,
                                                Base base) {
    if (bytes.size() != packed_size(base, pit_count))
        throw CorruptContainer("packed payload is " + std::to_string(bytes.size()) + " bytes, expected " +
                               std::to_string(packed_size(base, pit_count)));
    const unsigned m = chunk_pits(base);
    const std::uint64_t p = base.value();
    std::vector<std::uint32_t> out(pit_count);
    std::size_t at = 0;
    std::uint64_t done = 0;
    while (done < pit_count) {
        const auto len = static_cast<unsigned>(std::min<std::uint64_t>(m, pit_count - done));
        const unsigned nbytes = len == m ? 4 : chunk_bytes(base, len);
        std::uint64_t value = 0;
        for (unsigned j = 0; j < nbytes; ++j) value = (value << 8) | bytes[at++];
        if (value >= detail::pow_u64(p, len))
            throw CorruptContainer("chunk value " + std::to_string(value) + " out of range for " +
                                   std::to_string(len) + " pits");
        for (unsigned j = len; j-- > 0;) {
            out[done + j] = static_cast<std::uint32_t>(value % p);
            value /= p;
        }
        done += len;
    }
    return out;
}

inline PitString unpack_pits(std::span<const std::uint8_t> bytes, std::uint64_t pit_count, Base base) {
    return PitString(base, unpack_digits(bytes, pit_count, base));
}

} // namespace pitr
