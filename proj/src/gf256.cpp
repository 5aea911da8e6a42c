#include "aesmix/gf256.hpp"

#include <cstdlib>

namespace aesmix::gf256 {

std::uint8_t gf_inverse(std::uint8_t b) {
    if (b == 0) return 0;
    for (int c = 1; c < 256; ++c) {
        const auto cand = static_cast<std::uint8_t>(c);
        if (gf_mul(b, cand) == 0x01) return cand;
    }
    // Unreachable: every nonzero element of a field has an inverse.
    std::abort();
}

MulTable build_mul_table(std::uint8_t constant) {
    MulTable t;
    t.constant = constant;
    for (int x = 0; x < 256; ++x)
        t.entries[x] = gf_mul(constant, static_cast<std::uint8_t>(x));
    return t;
}

SBoxPair build_sbox() {
    SBoxPair p;
    for (int x = 0; x < 256; ++x)
        p.sbox[x] = affine_transform(gf_inverse(static_cast<std::uint8_t>(x)));
    for (int x = 0; x < 256; ++x)
        p.inv_sbox[p.sbox[x]] = static_cast<std::uint8_t>(x);
    return p;
}

const Tables& tables() {
    static const Tables t = [] {
        Tables b;
        b.sb = build_sbox();
        b.mul02 = build_mul_table(0x02);
        b.mul03 = build_mul_table(0x03);
        b.mul09 = build_mul_table(0x09);
        b.mul0b = build_mul_table(0x0b);
        b.mul0d = build_mul_table(0x0d);
        b.mul0e = build_mul_table(0x0e);
        // Sanity anchor for the generated tables: the affine constant must
        // surface at sbox[0]. Anything else means broken field arithmetic.
        if (b.sb.sbox[0x00] != 0x63) std::abort();
        return b;
    }();
    return t;
}

}  // namespace aesmix::gf256
