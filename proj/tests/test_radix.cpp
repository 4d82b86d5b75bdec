#include <pitr/radix.hpp>

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace pitr;

namespace {

std::vector<std::string> strs(const std::vector<PitString>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

} // namespace

TEST_CASE("validate_base bounds") {
    CHECK(validate_base(2).value() == 2);
    CHECK(validate_base(256).value() == 256);
    CHECK(validate_base(65536).value() == 65536);
    CHECK_THROWS_AS(validate_base(1), BaseOutOfRange);
    CHECK_THROWS_AS(validate_base(0), BaseOutOfRange);
    CHECK_THROWS_AS(validate_base(65537), BaseOutOfRange);
}

TEST_CASE("decompose worked examples") {
    auto check = [](std::uint64_t la, std::uint32_t p, unsigned n, std::uint64_t d) {
        const auto c = decompose(la, validate_base(p));
        CHECK(c.rank == n);
        CHECK(c.remainder == d);
        CHECK(c.alphabet == la);
    };
    check(256, 2, 8, 128);
    check(256, 3, 6, 13);
    check(256, 4, 4, 192);
    check(256, 255, 2, 1);
    check(256, 256, 1, 255);
    check(4, 3, 2, 1);
    check(2, 2, 1, 1);
    CHECK_THROWS_AS(decompose(1, validate_base(2)), AlphabetTooSmall);
    CHECK_THROWS_AS(decompose(0, validate_base(7)), AlphabetTooSmall);
}

TEST_CASE("decompose handles alphabets near the 64-bit limit") {
    const auto c = decompose(std::numeric_limits<std::uint64_t>::max(), validate_base(2));
    CHECK(c.rank == 64);
    CHECK(c.remainder == (std::uint64_t{1} << 63) - 1);
}

TEST_CASE("decompose invariant: unique rank within the remainder bounds") {
    for (std::uint32_t p = 2; p <= 64; ++p) {
        const Base base = validate_base(p);
        for (std::uint64_t la = 2; la <= 100000; la += (la < 5000 ? 1 : 37)) {
            const auto c = decompose(la, base);
            const auto lower = detail::pow_u64(p, c.rank - 1);
            const auto upper = detail::pow_u64(p, c.rank);
            REQUIRE(lower + c.remainder == la);
            REQUIRE(c.remainder > 0);
            REQUIRE(c.remainder <= upper - lower);
            // any other rank breaks one bound
            for (unsigned m = 1; m <= 20; ++m) {
                if (m == c.rank) continue;
                const auto lo = detail::pow_u64(p, m - 1);
                const auto hi = detail::pow_u64(p, m);
                if (lo == 0) break;
                const bool fits = la > lo && (hi == 0 || la - lo <= hi - lo);
                REQUIRE_FALSE(fits);
            }
        }
    }
}

TEST_CASE("shortlex enumeration") {
    const Base two = validate_base(2);
    CHECK(strs(shortlex_codewords(two, 4, 2)) == std::vector<std::string>{"0", "1", "00", "01"});
    CHECK(strs(shortlex_codewords(validate_base(3), 3, 1)) == std::vector<std::string>{"0", "1", "2"});
    CHECK(shortlex_codewords(two, 6, 2).size() == 6);
    CHECK_THROWS_AS(shortlex_codewords(two, 7, 2), CapacityExceeded);
    CHECK(shortlex_codewords(two, 0, 3).empty());
}

TEST_CASE("shortlex properties") {
    for (std::uint32_t p : {2u, 3u, 5u, 11u}) {
        const Base base = validate_base(p);
        const auto a = shortlex_codewords(base, 200, 8);
        const auto b = shortlex_codewords(base, 200, 8);
        CHECK(a == b);
        std::set<std::vector<std::uint32_t>> seen;
        std::map<std::size_t, std::uint64_t> per_len;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(seen.insert(a[i].digits()).second);
            ++per_len[a[i].size()];
            if (i > 0) CHECK(a[i - 1] < a[i]);
        }
        for (auto [k, cnt] : per_len) CHECK(cnt <= detail::pow_u64(p, static_cast<unsigned>(k)));
    }
}

TEST_CASE("pit strings reject out-of-range digits") {
    PitString s(validate_base(3));
    s.push_back(2);
    CHECK_THROWS_AS(s.push_back(3), PitOutOfRange);
    CHECK_THROWS_AS(PitString(validate_base(2), {0, 1, 2}), PitOutOfRange);
    CHECK(PitString(validate_base(16), {15, 0}).str() == "15.0");
}
