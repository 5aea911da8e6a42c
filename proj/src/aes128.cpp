#include "aesmix/aes128.hpp"

#include "aesmix/gf256.hpp"
#include "aesmix/op_counters.hpp"

namespace aesmix {

const char* to_string(MixStrategy s) {
    switch (s) {
        case MixStrategy::Math: return "math";
        case MixStrategy::Table: return "table";
        case MixStrategy::Xtime: return "xtime";
    }
    return "?";
}

std::optional<MixStrategy> parse_strategy(std::string_view name) {
    if (name == "math") return MixStrategy::Math;
    if (name == "table") return MixStrategy::Table;
    if (name == "xtime") return MixStrategy::Xtime;
    return std::nullopt;
}

State to_state(const Block& b) {
    State s;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) s.m[r][c] = b[4 * c + r];
    return s;
}

Block from_state(const State& s) {
    Block b;
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) b[4 * c + r] = s.m[r][c];
    return b;
}

State sub_bytes(State s) {
    const auto& sb = gf256::tables().sb.sbox;
    for (auto& row : s.m)
        for (auto& v : row) v = sb[v];
    return s;
}

State inv_sub_bytes(State s) {
    const auto& inv = gf256::tables().sb.inv_sbox;
    for (auto& row : s.m)
        for (auto& v : row) v = inv[v];
    return s;
}

State shift_rows(State s) {
    for (int r = 1; r < 4; ++r) {
        const auto row = s.m[r];
        for (int c = 0; c < 4; ++c) s.m[r][c] = row[(c + r) % 4];
    }
    return s;
}

State inv_shift_rows(State s) {
    for (int r = 1; r < 4; ++r) {
        const auto row = s.m[r];
        for (int c = 0; c < 4; ++c) s.m[r][(c + r) % 4] = row[c];
    }
    return s;
}

State add_round_key(State s, const Key& rk) {
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) s.m[r][c] ^= rk[4 * c + r];
    return s;
}

namespace {

using Col = std::array<std::uint8_t, 4>;

inline std::uint8_t u8(int v) { return static_cast<std::uint8_t>(v); }

inline std::uint8_t lut(const gf256::MulTable& t, std::uint8_t x) {
    ops::note_table_lookup();
    return t.entries[x];
}

// Forward matrix rows: (02 03 01 01) rotating right per row.
Col mix_col_math(const Col& a) {
    using gf256::gf_mul;
    return {
        u8(gf_mul(0x02, a[0]) ^ gf_mul(0x03, a[1]) ^ gf_mul(0x01, a[2]) ^ gf_mul(0x01, a[3])),
        u8(gf_mul(0x01, a[0]) ^ gf_mul(0x02, a[1]) ^ gf_mul(0x03, a[2]) ^ gf_mul(0x01, a[3])),
        u8(gf_mul(0x01, a[0]) ^ gf_mul(0x01, a[1]) ^ gf_mul(0x02, a[2]) ^ gf_mul(0x03, a[3])),
        u8(gf_mul(0x03, a[0]) ^ gf_mul(0x01, a[1]) ^ gf_mul(0x01, a[2]) ^ gf_mul(0x02, a[3])),
    };
}

Col mix_col_table(const Col& a) {
    const auto& t = gf256::tables();
    return {
        u8(lut(t.mul02, a[0]) ^ lut(t.mul03, a[1]) ^ a[2] ^ a[3]),
        u8(a[0] ^ lut(t.mul02, a[1]) ^ lut(t.mul03, a[2]) ^ a[3]),
        u8(a[0] ^ a[1] ^ lut(t.mul02, a[2]) ^ lut(t.mul03, a[3])),
        u8(lut(t.mul03, a[0]) ^ a[1] ^ a[2] ^ lut(t.mul02, a[3])),
    };
}

// 02*x = xtime(x), 03*x = xtime(x) ^ x.
Col mix_col_xtime(const Col& a) {
    using gf256::xtime;
    const Col t{xtime(a[0]), xtime(a[1]), xtime(a[2]), xtime(a[3])};
    return {
        u8(t[0] ^ t[1] ^ a[1] ^ a[2] ^ a[3]),
        u8(a[0] ^ t[1] ^ t[2] ^ a[2] ^ a[3]),
        u8(a[0] ^ a[1] ^ t[2] ^ t[3] ^ a[3]),
        u8(t[0] ^ a[0] ^ a[1] ^ a[2] ^ t[3]),
    };
}

// Inverse matrix rows: (0e 0b 0d 09) rotating right per row.
Col inv_mix_col_math(const Col& a) {
    using gf256::gf_mul;
    return {
        u8(gf_mul(0x0e, a[0]) ^ gf_mul(0x0b, a[1]) ^ gf_mul(0x0d, a[2]) ^ gf_mul(0x09, a[3])),
        u8(gf_mul(0x09, a[0]) ^ gf_mul(0x0e, a[1]) ^ gf_mul(0x0b, a[2]) ^ gf_mul(0x0d, a[3])),
        u8(gf_mul(0x0d, a[0]) ^ gf_mul(0x09, a[1]) ^ gf_mul(0x0e, a[2]) ^ gf_mul(0x0b, a[3])),
        u8(gf_mul(0x0b, a[0]) ^ gf_mul(0x0d, a[1]) ^ gf_mul(0x09, a[2]) ^ gf_mul(0x0e, a[3])),
    };
}

Col inv_mix_col_table(const Col& a) {
    const auto& t = gf256::tables();
    return {
        u8(lut(t.mul0e, a[0]) ^ lut(t.mul0b, a[1]) ^ lut(t.mul0d, a[2]) ^ lut(t.mul09, a[3])),
        u8(lut(t.mul09, a[0]) ^ lut(t.mul0e, a[1]) ^ lut(t.mul0b, a[2]) ^ lut(t.mul0d, a[3])),
        u8(lut(t.mul0d, a[0]) ^ lut(t.mul09, a[1]) ^ lut(t.mul0e, a[2]) ^ lut(t.mul0b, a[3])),
        u8(lut(t.mul0b, a[0]) ^ lut(t.mul0d, a[1]) ^ lut(t.mul09, a[2]) ^ lut(t.mul0e, a[3])),
    };
}

// 09 = 08+01, 0b = 08+02+01, 0d = 08+04+01, 0e = 08+04+02; x2/x4/x8 come
// from chained xtime per input byte.
Col inv_mix_col_xtime(const Col& a) {
    using gf256::xtime;
    Col m9, mb, md, me;
    for (int i = 0; i < 4; ++i) {
        const std::uint8_t x2 = xtime(a[i]);
        const std::uint8_t x4 = xtime(x2);
        const std::uint8_t x8 = xtime(x4);
        m9[i] = u8(x8 ^ a[i]);
        mb[i] = u8(x8 ^ x2 ^ a[i]);
        md[i] = u8(x8 ^ x4 ^ a[i]);
        me[i] = u8(x8 ^ x4 ^ x2);
    }
    return {
        u8(me[0] ^ mb[1] ^ md[2] ^ m9[3]),
        u8(m9[0] ^ me[1] ^ mb[2] ^ md[3]),
        u8(md[0] ^ m9[1] ^ me[2] ^ mb[3]),
        u8(mb[0] ^ md[1] ^ m9[2] ^ me[3]),
    };
}

template <typename ColFn>
State map_columns(State s, ColFn&& fn) {
    for (int c = 0; c < 4; ++c) {
        const Col in{s.m[0][c], s.m[1][c], s.m[2][c], s.m[3][c]};
        const Col out = fn(in);
        for (int r = 0; r < 4; ++r) s.m[r][c] = out[r];
    }
    return s;
}

}  // namespace

State mix_columns(State s, MixStrategy strategy) {
    switch (strategy) {
        case MixStrategy::Math: return map_columns(s, mix_col_math);
        case MixStrategy::Table: return map_columns(s, mix_col_table);
        case MixStrategy::Xtime: return map_columns(s, mix_col_xtime);
    }
    return s;
}

State inv_mix_columns(State s, MixStrategy strategy) {
    switch (strategy) {
        case MixStrategy::Math: return map_columns(s, inv_mix_col_math);
        case MixStrategy::Table: return map_columns(s, inv_mix_col_table);
        case MixStrategy::Xtime: return map_columns(s, inv_mix_col_xtime);
    }
    return s;
}

RoundKeySchedule expand_key(const Key& key) {
    const auto& sb = gf256::tables().sb.sbox;

    // 44 four-byte words; w[i] = w[i-4] ^ f(w[i-1]) with the rotate/sub/rcon
    // step every fourth word.
    std::array<std::array<std::uint8_t, 4>, 44> w{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w[i][j] = key[4 * i + j];

    std::uint8_t rcon = 0x01;
    for (int i = 4; i < 44; ++i) {
        auto t = w[i - 1];
        if (i % 4 == 0) {
            t = {sb[t[1]], sb[t[2]], sb[t[3]], sb[t[0]]};
            t[0] = static_cast<std::uint8_t>(t[0] ^ rcon);
            rcon = gf256::xtime(rcon);
        }
        for (int j = 0; j < 4; ++j)
            w[i][j] = static_cast<std::uint8_t>(w[i - 4][j] ^ t[j]);
    }

    RoundKeySchedule ks;
    for (int r = 0; r < 11; ++r)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) ks.round_keys[r][4 * i + j] = w[4 * r + i][j];
    return ks;
}

Block encrypt_block(const RoundKeySchedule& ks, const Block& in, MixStrategy strategy) {
    State s = add_round_key(to_state(in), ks.round_keys[0]);
    for (int r = 1; r <= 9; ++r) {
        s = sub_bytes(s);
        s = shift_rows(s);
        s = mix_columns(s, strategy);
        s = add_round_key(s, ks.round_keys[r]);
    }
    s = sub_bytes(s);
    s = shift_rows(s);
    s = add_round_key(s, ks.round_keys[10]);
    return from_state(s);
}

Block decrypt_block(const RoundKeySchedule& ks, const Block& in, MixStrategy strategy) {
    State s = add_round_key(to_state(in), ks.round_keys[10]);
    for (int r = 9; r >= 1; --r) {
        s = inv_shift_rows(s);
        s = inv_sub_bytes(s);
        s = add_round_key(s, ks.round_keys[r]);
        s = inv_mix_columns(s, strategy);
    }
    s = inv_shift_rows(s);
    s = inv_sub_bytes(s);
    s = add_round_key(s, ks.round_keys[0]);
    return from_state(s);
}

}  // namespace aesmix
