#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "aesmix/op_counters.hpp"

// Arithmetic in GF(2^8) with the Rijndael reduction polynomial
// x^8 + x^4 + x^3 + x + 1, plus construction of the S-box pair and the
// multiply-by-constant lookup tables used by the table-driven MixColumns
// strategy. Everything here is a pure function; the shared tables are
// built once and immutable afterwards.

namespace aesmix::gf256 {

// Low 8 bits of the reduction polynomial.
inline constexpr std::uint8_t kReduction = 0x1b;

// Multiply by {02}: shift left, reduce if the high bit fell out.
inline std::uint8_t xtime(std::uint8_t b) {
    ops::note_xtime();
    return static_cast<std::uint8_t>((b << 1) ^ ((b & 0x80) ? kReduction : 0x00));
}

// General product, double-and-add over the bits of b. The loop always runs
// all eight bits so the operation count does not depend on the operands.
inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    ops::note_gf_mul();
    std::uint8_t acc = 0;
    for (int i = 0; i < 8; ++i) {
        if (b & 1) acc ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return acc;
}

// Multiplicative inverse; {00} maps to itself. Exhaustive search, only used
// while building the S-box.
std::uint8_t gf_inverse(std::uint8_t b);

// The bit-level map b ^ (b <<< 1) ^ (b <<< 2) ^ (b <<< 3) ^ (b <<< 4) ^ {63}.
inline std::uint8_t affine_transform(std::uint8_t b) {
    return static_cast<std::uint8_t>(b ^ std::rotl(b, 1) ^ std::rotl(b, 2) ^
                                     std::rotl(b, 3) ^ std::rotl(b, 4) ^ 0x63);
}

struct MulTable {
    std::uint8_t constant = 0;
    std::array<std::uint8_t, 256> entries{};
};

// entries[x] = constant * x for every x.
MulTable build_mul_table(std::uint8_t constant);

struct SBoxPair {
    std::array<std::uint8_t, 256> sbox{};
    std::array<std::uint8_t, 256> inv_sbox{};
};

// sbox[x] = affine_transform(gf_inverse(x)); inv_sbox is its table inverse.
SBoxPair build_sbox();

// Shared immutable tables: the S-box pair and the six constant multipliers
// used by MixColumns ({02,03} forward, {09,0b,0d,0e} inverse). Built on
// first use; initialization completes before the reference escapes, after
// which concurrent reads are safe.
struct Tables {
    SBoxPair sb;
    MulTable mul02, mul03, mul09, mul0b, mul0d, mul0e;
};

const Tables& tables();

}  // namespace aesmix::gf256
