#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aesmix/aes128.hpp"

namespace aesmix {

// Lowercase, two chars per byte, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Case-insensitive; nullopt on odd length or non-hex characters.
std::optional<std::vector<std::uint8_t>> parse_hex(std::string_view text);

// Exactly 32 hex chars -> 16 bytes.
std::optional<Block> parse_hex_block(std::string_view text);

}  // namespace aesmix
