#include "aesmix/variants.hpp"

#include <string>

namespace aesmix {

std::size_t key_arity(Variant v) {
    switch (v) {
        case Variant::Single: return 1;
        case Variant::Double:
        case Variant::Triple2: return 2;
        case Variant::Aesx:
        case Variant::AesExe: return 3;
    }
    return 0;
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Single: return "single";
        case Variant::Double: return "double";
        case Variant::Triple2: return "triple2";
        case Variant::Aesx: return "aesx";
        case Variant::AesExe: return "aes-exe";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "single") return Variant::Single;
    if (name == "double") return Variant::Double;
    if (name == "triple2") return Variant::Triple2;
    if (name == "aesx") return Variant::Aesx;
    if (name == "aes-exe") return Variant::AesExe;
    return std::nullopt;
}

namespace {

void check_arity(Variant v, const VariantKeySet& keys) {
    const std::size_t want = key_arity(v);
    const std::size_t got = 1 + (keys.k2 ? 1 : 0) + (keys.k3 ? 1 : 0);
    const bool shape_ok = (want >= 2) == keys.k2.has_value() && (want >= 3) == keys.k3.has_value();
    if (got != want || !shape_ok)
        throw ArityError(std::string("variant ") + to_string(v) + " takes " +
                         std::to_string(want) + " key(s), got " + std::to_string(got));
}

}  // namespace

VariantContext::VariantContext(Variant v, const VariantKeySet& keys) : v_(v) {
    check_arity(v, keys);

    const auto enc = [](std::uint8_t slot) { return PlanOp{PlanOp::Kind::Cipher, slot, false}; };
    const auto dec = [](std::uint8_t slot) { return PlanOp{PlanOp::Kind::Cipher, slot, true}; };
    const auto mask = [](std::uint8_t slot) { return PlanOp{PlanOp::Kind::Xor, slot, false}; };
    const auto plan = [](std::initializer_list<PlanOp> ops) {
        Plan p;
        for (const PlanOp& op : ops) p.ops[p.size++] = op;
        return p;
    };

    switch (v) {
        case Variant::Single:
            schedules_[0] = expand_key(keys.k1);
            encrypt_plan_ = plan({enc(0)});
            decrypt_plan_ = plan({dec(0)});
            break;
        case Variant::Double:
            schedules_[0] = expand_key(keys.k1);
            schedules_[1] = expand_key(*keys.k2);
            encrypt_plan_ = plan({enc(0), enc(1)});
            decrypt_plan_ = plan({dec(1), dec(0)});
            break;
        case Variant::Triple2:
            // EDE form: the middle pass is a decryption under k2.
            schedules_[0] = expand_key(keys.k1);
            schedules_[1] = expand_key(*keys.k2);
            encrypt_plan_ = plan({enc(0), dec(1), enc(0)});
            decrypt_plan_ = plan({dec(0), enc(1), dec(0)});
            break;
        case Variant::Aesx:
            schedules_[1] = expand_key(*keys.k2);
            masks_[0] = keys.k1;
            masks_[2] = *keys.k3;
            encrypt_plan_ = plan({mask(0), enc(1), mask(2)});
            decrypt_plan_ = plan({mask(2), dec(1), mask(0)});
            break;
        case Variant::AesExe:
            schedules_[0] = expand_key(keys.k1);
            schedules_[2] = expand_key(*keys.k3);
            masks_[1] = *keys.k2;
            encrypt_plan_ = plan({enc(0), mask(1), enc(2)});
            decrypt_plan_ = plan({dec(2), mask(1), dec(0)});
            break;
    }
}

Block VariantContext::run_plan(const Plan& plan, const Block& in, MixStrategy strategy) const {
    Block b = in;
    for (std::size_t i = 0; i < plan.size; ++i) {
        const PlanOp& op = plan.ops[i];
        if (op.kind == PlanOp::Kind::Xor)
            b = xor_blocks(b, masks_[op.slot]);
        else if (op.inverse)
            b = decrypt_block(*schedules_[op.slot], b, strategy);
        else
            b = encrypt_block(*schedules_[op.slot], b, strategy);
    }
    return b;
}

Block VariantContext::encrypt(const Block& p, MixStrategy strategy) const {
    return run_plan(encrypt_plan_, p, strategy);
}

Block VariantContext::decrypt(const Block& c, MixStrategy strategy) const {
    return run_plan(decrypt_plan_, c, strategy);
}

Block variant_encrypt(Variant v, const VariantKeySet& keys, const Block& p, MixStrategy strategy) {
    return VariantContext(v, keys).encrypt(p, strategy);
}

Block variant_decrypt(Variant v, const VariantKeySet& keys, const Block& c, MixStrategy strategy) {
    return VariantContext(v, keys).decrypt(c, strategy);
}

}  // namespace aesmix
