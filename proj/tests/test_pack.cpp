#include <pitr/pack.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace pitr;

namespace {

using Bytes = std::vector<std::uint8_t>;

PitString pits(std::uint32_t p, std::vector<std::uint32_t> d) { return PitString(validate_base(p), std::move(d)); }

} // namespace

TEST_CASE("chunk geometry") {
    CHECK(chunk_pits(validate_base(2)) == 32);
    CHECK(chunk_pits(validate_base(3)) == 20); // 3^20 < 2^32 < 3^21
    CHECK(chunk_pits(validate_base(255)) == 4);
    CHECK(chunk_pits(validate_base(256)) == 4);
    CHECK(chunk_pits(validate_base(65535)) == 2);
    CHECK(chunk_pits(validate_base(65536)) == 2);
    CHECK(chunk_bytes(validate_base(2), 3) == 1);
    CHECK(chunk_bytes(validate_base(2), 9) == 2);
    CHECK(chunk_bytes(validate_base(3), 6) == 2); // 729 > 256
    CHECK(chunk_bytes(validate_base(65535), 1) == 2);
}

TEST_CASE("pack_pits examples") {
    CHECK(pack_pits(pits(2, {1, 0, 1})) == Bytes{0x05});
    CHECK(pack_pits(pits(3, {2, 1, 0})) == Bytes{0x15});
    CHECK(pack_pits(pits(10, {})).empty());
    // one full chunk of 32 bits, big-endian
    std::vector<std::uint32_t> bits(32, 0);
    bits[0] = 1;
    bits[31] = 1;
    CHECK(pack_pits(pits(2, bits)) == Bytes{0x80, 0x00, 0x00, 0x01});
    const std::vector<std::uint32_t> raw{0, 7};
    CHECK_THROWS_AS(pack_pits(validate_base(7), raw), PitOutOfRange);
}

TEST_CASE("unpack_pits examples and corruption") {
    CHECK(unpack_pits(Bytes{0x05}, 3, validate_base(2)) == pits(2, {1, 0, 1}));
    CHECK(unpack_pits(Bytes{}, 0, validate_base(7)).empty());
    CHECK_THROWS_AS(unpack_pits(Bytes{0x1B}, 3, validate_base(3)), CorruptContainer);
    CHECK_THROWS_AS(unpack_pits(Bytes{0x05, 0x00}, 3, validate_base(2)), CorruptContainer);
    CHECK_THROWS_AS(unpack_pits(Bytes{}, 1, validate_base(2)), CorruptContainer);
    // full chunk whose value is not below p^m
    CHECK_THROWS_AS(unpack_pits(Bytes{0xFF, 0xFF, 0xFF, 0xFF}, 20, validate_base(3)), CorruptContainer);
}

TEST_CASE("pack/unpack are inverse and respect the size bound") {
    std::mt19937_64 rng(20001026);
    for (std::uint32_t p : {2u, 3u, 10u, 255u, 65535u, 65536u}) {
        const Base base = validate_base(p);
        std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
        std::uniform_int_distribution<std::size_t> len(0, 300);
        for (int trial = 0; trial < 200; ++trial) {
            PitString s(base);
            const auto n = len(rng);
            for (std::size_t i = 0; i < n; ++i) s.push_back(digit(rng));
            const auto bytes = pack_pits(s);
            const unsigned m = chunk_pits(base);
            REQUIRE(bytes.size() == packed_size(base, n));
            REQUIRE(bytes.size() <= 4 * ((n + m - 1) / m));
            REQUIRE(unpack_pits(bytes, n, base) == s);
        }
    }
}
