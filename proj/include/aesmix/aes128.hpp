#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

// AES-128 block primitive: column-major state layout, the four round
// transformations and their inverses, key expansion, and the full 10-round
// cipher. MixColumns comes in three interchangeable implementations selected
// per call; all three produce identical bytes.

namespace aesmix {

using Block = std::array<std::uint8_t, 16>;

// 16-byte cipher key. The fixed size is deliberate: other AES key lengths
// are not supported.
using Key = std::array<std::uint8_t, 16>;

enum class MixStrategy {
    Math,   // evaluate every matrix term with the general field multiply
    Table,  // precomputed multiply-by-constant lookup tables
    Xtime,  // binary decomposition of each constant into xtime chains
};

inline constexpr std::array<MixStrategy, 3> kAllStrategies{
    MixStrategy::Math, MixStrategy::Table, MixStrategy::Xtime};

const char* to_string(MixStrategy s);
std::optional<MixStrategy> parse_strategy(std::string_view name);

// 4x4 byte matrix view of a block, m[row][col] = block[4*col + row].
struct State {
    std::array<std::array<std::uint8_t, 4>, 4> m{};

    friend bool operator==(const State&, const State&) = default;
};

State to_state(const Block& b);
Block from_state(const State& s);

struct RoundKeySchedule {
    std::array<Key, 11> round_keys{};

    friend bool operator==(const RoundKeySchedule&, const RoundKeySchedule&) = default;
};

RoundKeySchedule expand_key(const Key& key);

State sub_bytes(State s);
State inv_sub_bytes(State s);
State shift_rows(State s);
State inv_shift_rows(State s);
State mix_columns(State s, MixStrategy strategy);
State inv_mix_columns(State s, MixStrategy strategy);
State add_round_key(State s, const Key& rk);

Block encrypt_block(const RoundKeySchedule& ks, const Block& in, MixStrategy strategy);
Block decrypt_block(const RoundKeySchedule& ks, const Block& in, MixStrategy strategy);

}  // namespace aesmix
