#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "aesmix/gf256.hpp"
#include "support/ref_aes.hpp"
#include "support/rng.hpp"

using namespace aesmix;

namespace {

// Eq-by-eq bit evaluation of the S-box affine map, independent of the
// rotate-based implementation.
std::uint8_t affine_oracle(std::uint8_t b) {
    const std::uint8_t c = 0x63;
    std::uint8_t out = 0;
    for (int i = 0; i < 8; ++i) {
        const int bit = ((b >> i) ^ (b >> ((i + 4) % 8)) ^ (b >> ((i + 5) % 8)) ^
                         (b >> ((i + 6) % 8)) ^ (b >> ((i + 7) % 8)) ^ (c >> i)) &
                        1;
        out = static_cast<std::uint8_t>(out | (bit << i));
    }
    return out;
}

}  // namespace

TEST_CASE("xtime known values") {
    CHECK(gf256::xtime(0x00) == 0x00);
    CHECK(gf256::xtime(0x80) == 0x1b);
    CHECK(gf256::xtime(0x57) == 0xae);
}

TEST_CASE("gf_mul matches the long-division oracle on all pairs") {
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b) {
            const auto x = static_cast<std::uint8_t>(a);
            const auto y = static_cast<std::uint8_t>(b);
            const std::uint8_t expect = refimpl::gf_mul(x, y);
            REQUIRE(gf256::gf_mul(x, y) == expect);
            REQUIRE(gf256::gf_mul(y, x) == expect);
        }
}

TEST_CASE("gf_mul known products") {
    for (int x = 0; x < 256; ++x)
        CHECK(gf256::gf_mul(static_cast<std::uint8_t>(x), 0x01) == x);
    CHECK(gf256::gf_mul(0x02, 0xd4) == 0xb3);
    CHECK(gf256::gf_mul(0x03, 0xbf) == 0xda);
}

TEST_CASE("gf_mul distributes over xor") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto a = testsupport::random_byte(rng);
        const auto b = testsupport::random_byte(rng);
        const auto c = testsupport::random_byte(rng);
        CHECK(gf256::gf_mul(a, b ^ c) == (gf256::gf_mul(a, b) ^ gf256::gf_mul(a, c)));
    }
}

TEST_CASE("gf_mul by 02 equals xtime") {
    for (int x = 0; x < 256; ++x) {
        const auto b = static_cast<std::uint8_t>(x);
        CHECK(gf256::gf_mul(0x02, b) == gf256::xtime(b));
    }
}

TEST_CASE("gf_inverse") {
    CHECK(gf256::gf_inverse(0x00) == 0x00);
    CHECK(gf256::gf_inverse(0x01) == 0x01);

    // 0x53 via exhaustive search against the oracle multiply.
    std::uint8_t expect = 0;
    for (int c = 1; c < 256; ++c)
        if (refimpl::gf_mul(0x53, static_cast<std::uint8_t>(c)) == 0x01)
            expect = static_cast<std::uint8_t>(c);
    CHECK(gf256::gf_inverse(0x53) == expect);

    for (int b = 1; b < 256; ++b) {
        const auto v = static_cast<std::uint8_t>(b);
        REQUIRE(gf256::gf_mul(v, gf256::gf_inverse(v)) == 0x01);
    }
}

TEST_CASE("affine_transform") {
    CHECK(gf256::affine_transform(0x00) == 0x63);
    CHECK(gf256::affine_transform(0x01) == affine_oracle(0x01));
    CHECK(gf256::affine_transform(0x01) == 0x7c);
    for (int x = 0; x < 256; ++x)
        REQUIRE(gf256::affine_transform(static_cast<std::uint8_t>(x)) ==
                affine_oracle(static_cast<std::uint8_t>(x)));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const auto a = testsupport::random_byte(rng);
        const auto b = testsupport::random_byte(rng);
        CHECK(gf256::affine_transform(a ^ b) ==
              (gf256::affine_transform(a) ^ gf256::affine_transform(b) ^ 0x63));
    }
}

TEST_CASE("build_sbox invariants") {
    const gf256::SBoxPair p = gf256::build_sbox();

    CHECK(p.sbox[0x00] == 0x63);
    CHECK(p.sbox[0x53] == 0xed);
    CHECK(p.inv_sbox[p.sbox[0xab]] == 0xab);

    std::set<std::uint8_t> seen;
    for (int x = 0; x < 256; ++x) {
        seen.insert(p.sbox[x]);
        REQUIRE(p.inv_sbox[p.sbox[x]] == x);
        REQUIRE(p.sbox[p.inv_sbox[x]] == x);
    }
    CHECK(seen.size() == 256);

    // The generated table must be the published one.
    for (int x = 0; x < 256; ++x) REQUIRE(p.sbox[x] == refimpl::kSbox[x]);
}

TEST_CASE("build_mul_table matches gf_mul for the six cipher constants") {
    for (const std::uint8_t c : {0x02, 0x03, 0x09, 0x0b, 0x0d, 0x0e}) {
        const gf256::MulTable t = gf256::build_mul_table(c);
        CHECK(t.constant == c);
        CHECK(t.entries[0] == 0);
        CHECK(t.entries[1] == c);
        for (int x = 0; x < 256; ++x)
            REQUIRE(t.entries[x] == gf256::gf_mul(c, static_cast<std::uint8_t>(x)));
    }
    CHECK(gf256::build_mul_table(0x02).entries[0xd4] == 0xb3);
    CHECK(gf256::build_mul_table(0x0e).entries[0x01] == 0x0e);
    const gf256::MulTable identity = gf256::build_mul_table(0x01);
    for (int x = 0; x < 256; ++x) REQUIRE(identity.entries[x] == x);
}

TEST_CASE("shared tables are built and self-consistent") {
    const auto& t = gf256::tables();
    CHECK(t.sb.sbox[0x00] == 0x63);
    CHECK(t.mul02.constant == 0x02);
    CHECK(t.mul0e.entries[0x01] == 0x0e);
}
