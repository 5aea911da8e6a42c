#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "aesmix/aes128.hpp"

// Multiple-encryption constructions layered over the AES-128 primitive.
// Each variant fixes a key arity and an encrypt/decrypt formula:
//
//   single   C = E_k1(P)
//   double   C = E_k2(E_k1(P))
//   triple2  C = E_k1(D_k2(E_k1(P)))          (collapses to single when k1 = k2)
//   aesx     C = k3 ^ E_k2(P ^ k1)            (k1/k3 are whitening masks)
//   aes-exe  C = E_k3(k2 ^ E_k1(P))

namespace aesmix {

enum class Variant { Single, Double, Triple2, Aesx, AesExe };

inline constexpr std::array<Variant, 5> kAllVariants{
    Variant::Single, Variant::Double, Variant::Triple2, Variant::Aesx, Variant::AesExe};

std::size_t key_arity(Variant v);
const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// 1-3 independent keys; k2/k3 must be present exactly when the variant's
// arity calls for them.
struct VariantKeySet {
    Key k1{};
    std::optional<Key> k2;
    std::optional<Key> k3;
};

// Precompiled key schedules for one (variant, keys) pairing. The formula is
// compiled into a short plan of cipher passes and whitening XORs, and both
// directions execute through the same plan walker, so every variant runs
// identical code apart from the work its formula actually requires.
// Immutable after construction and safe to share across threads.
class VariantContext {
public:
    VariantContext(Variant v, const VariantKeySet& keys);

    Block encrypt(const Block& p, MixStrategy strategy) const;
    Block decrypt(const Block& c, MixStrategy strategy) const;

    Variant variant() const { return v_; }

private:
    struct PlanOp {
        enum class Kind : std::uint8_t { Cipher, Xor };
        Kind kind = Kind::Cipher;
        std::uint8_t slot = 0;  // key slot: 0 = k1, 1 = k2, 2 = k3
        bool inverse = false;   // Cipher only: run the decryption direction
    };

    struct Plan {
        std::array<PlanOp, 3> ops{};
        std::size_t size = 0;
    };

    Block run_plan(const Plan& plan, const Block& in, MixStrategy strategy) const;

    Variant v_;
    std::array<std::optional<RoundKeySchedule>, 3> schedules_;
    std::array<Key, 3> masks_{};
    Plan encrypt_plan_;
    Plan decrypt_plan_;
};

// One-shot forms; schedules are derived fresh per call.
Block variant_encrypt(Variant v, const VariantKeySet& keys, const Block& p, MixStrategy strategy);
Block variant_decrypt(Variant v, const VariantKeySet& keys, const Block& c, MixStrategy strategy);

inline Block xor_blocks(const Block& a, const Block& b) {
    Block out;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
    return out;
}

}  // namespace aesmix
