// aesmix command-line tool: block encryption under the multiple-encryption
// variants with a selectable MixColumns strategy, a known-answer-test runner,
// a throughput/op-count benchmark, and an S-box dump.
//
// Exit codes: 0 success, 1 KAT failures, 2 usage/validation error, 3 I/O
// error. Diagnostics go to standard error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aesmix/bench.hpp"
#include "aesmix/gf256.hpp"
#include "aesmix/hex.hpp"
#include "aesmix/kat.hpp"
#include "aesmix/variants.hpp"

namespace fs = std::filesystem;
using namespace aesmix;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Padding { None, Pkcs7 };

Padding parse_padding(const std::string& name) {
    if (name == "none") return Padding::None;
    if (name == "pkcs7") return Padding::Pkcs7;
    throw UsageError("unknown padding '" + name + "' (expected none or pkcs7)");
}

struct CryptOptions {
    std::string variant = "single";
    std::string strategy = "table";
    std::string key1, key2, key3;
    bool ascii_keys = false;
    std::string hex_input;
    std::string input_path;
    std::string output_path;
    std::string padding = "none";
};

Key parse_key(const std::string& text, bool ascii) {
    if (ascii) {
        if (text.size() > 16)
            throw UsageError("ascii key is " + std::to_string(text.size()) +
                             " bytes, the maximum is 16");
        Key k{};  // shorter keys are right-padded with zero bytes
        std::copy(text.begin(), text.end(), k.begin());
        return k;
    }
    const auto block = parse_hex_block(text);
    if (!block) throw UsageError("key must be exactly 32 hex chars, got '" + text + "'");
    return *block;
}

VariantKeySet build_keyset(Variant v, const CryptOptions& opt) {
    std::vector<std::string> given;
    for (const std::string* k : {&opt.key1, &opt.key2, &opt.key3})
        if (!k->empty()) given.push_back(*k);
    const bool contiguous =
        !opt.key1.empty() && (opt.key2.empty() ? opt.key3.empty() : true);
    if (!contiguous || given.size() != key_arity(v))
        throw UsageError("variant " + std::string(to_string(v)) + " takes " +
                         std::to_string(key_arity(v)) + " key(s), got " +
                         std::to_string(given.size()));
    VariantKeySet keys;
    keys.k1 = parse_key(given[0], opt.ascii_keys);
    if (given.size() >= 2) keys.k2 = parse_key(given[1], opt.ascii_keys);
    if (given.size() >= 3) keys.k3 = parse_key(given[2], opt.ascii_keys);
    return keys;
}

// Writes to <path>.tmp and renames into place on commit, so a failed run
// never leaves a half-written output file.
class AtomicFileWriter {
public:
    explicit AtomicFileWriter(const fs::path& path)
        : final_(path), tmp_(path.string() + ".tmp") {
        out_.open(tmp_, std::ios::binary | std::ios::trunc);
        if (!out_) throw IoError("cannot open '" + tmp_.string() + "' for writing");
    }

    ~AtomicFileWriter() {
        if (out_.is_open()) out_.close();
        if (!committed_) {
            std::error_code ec;
            fs::remove(tmp_, ec);
        }
    }

    std::ostream& stream() { return out_; }

    void commit() {
        out_.flush();
        if (!out_) throw IoError("write to '" + tmp_.string() + "' failed");
        out_.close();
        std::error_code ec;
        fs::rename(tmp_, final_, ec);
        if (ec)
            throw IoError("cannot rename '" + tmp_.string() + "' to '" + final_.string() +
                          "': " + ec.message());
        committed_ = true;
    }

private:
    fs::path final_;
    fs::path tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

void warn_ecb_once(bool& warned) {
    if (warned) return;
    warned = true;
    std::cerr << "warning: ECB framing: identical plaintext blocks produce identical "
                 "ciphertext blocks; do not use for data that must resist pattern analysis\n";
}

void write_bytes(std::ostream& out, const std::uint8_t* data, std::size_t n) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!out) throw IoError("write failed");
}

void encrypt_stream(std::istream& in, std::ostream& out, const VariantContext& ctx,
                    MixStrategy strategy, Padding padding) {
    std::vector<std::uint8_t> pending;
    std::vector<std::uint8_t> buf(1 << 16);
    std::uint64_t consumed = 0;
    bool warned = false;

    for (;;) {
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        const auto got = static_cast<std::size_t>(in.gcount());
        if (in.bad()) throw IoError("read failed");
        pending.insert(pending.end(), buf.begin(), buf.begin() + got);
        consumed += got;
        if (consumed > 16) warn_ecb_once(warned);

        std::size_t off = 0;
        while (pending.size() - off >= 16) {
            Block b;
            std::copy_n(pending.begin() + static_cast<std::ptrdiff_t>(off), 16, b.begin());
            const Block c = ctx.encrypt(b, strategy);
            write_bytes(out, c.data(), c.size());
            off += 16;
        }
        pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(off));
        if (in.eof()) break;
    }

    if (padding == Padding::None) {
        if (!pending.empty())
            throw UsageError("input length " + std::to_string(consumed) +
                             " is not a multiple of 16; use --padding pkcs7 for arbitrary sizes");
        return;
    }
    // PKCS#7 always appends, so a block-aligned input gains one full block.
    const auto pad = static_cast<std::uint8_t>(16 - pending.size());
    Block b{};
    std::copy(pending.begin(), pending.end(), b.begin());
    for (std::size_t i = pending.size(); i < 16; ++i) b[i] = pad;
    const Block c = ctx.encrypt(b, strategy);
    write_bytes(out, c.data(), c.size());
}

std::size_t pkcs7_strip(const Block& last) {
    const std::uint8_t pad = last[15];
    if (pad == 0 || pad > 16) throw UsageError("invalid pkcs7 padding");
    for (std::size_t i = 16 - pad; i < 16; ++i)
        if (last[i] != pad) throw UsageError("invalid pkcs7 padding");
    return 16 - pad;
}

void decrypt_stream(std::istream& in, std::ostream& out, const VariantContext& ctx,
                    MixStrategy strategy, Padding padding) {
    std::vector<std::uint8_t> pending;
    std::vector<std::uint8_t> buf(1 << 16);
    std::uint64_t consumed = 0;
    std::optional<Block> held;  // last plaintext block, kept back for pkcs7

    for (;;) {
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        const auto got = static_cast<std::size_t>(in.gcount());
        if (in.bad()) throw IoError("read failed");
        pending.insert(pending.end(), buf.begin(), buf.begin() + got);
        consumed += got;

        std::size_t off = 0;
        while (pending.size() - off >= 16) {
            Block b;
            std::copy_n(pending.begin() + static_cast<std::ptrdiff_t>(off), 16, b.begin());
            const Block p = ctx.decrypt(b, strategy);
            if (padding == Padding::Pkcs7) {
                if (held) write_bytes(out, held->data(), held->size());
                held = p;
            } else {
                write_bytes(out, p.data(), p.size());
            }
            off += 16;
        }
        pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(off));
        if (in.eof()) break;
    }

    if (!pending.empty())
        throw UsageError("ciphertext length " + std::to_string(consumed) +
                         " is not a multiple of 16");
    if (padding == Padding::Pkcs7) {
        if (!held) throw UsageError("empty ciphertext cannot carry pkcs7 padding");
        const std::size_t keep = pkcs7_strip(*held);
        write_bytes(out, held->data(), keep);
    }
}

int run_crypt(const CryptOptions& opt, bool encrypting) {
    const auto variant = parse_variant(opt.variant);
    if (!variant) throw UsageError("unknown variant '" + opt.variant + "'");
    const auto strategy = parse_strategy(opt.strategy);
    if (!strategy) throw UsageError("unknown strategy '" + opt.strategy + "'");
    const Padding padding = parse_padding(opt.padding);
    const VariantContext ctx(*variant, build_keyset(*variant, opt));

    const bool have_hex = !opt.hex_input.empty();
    const bool have_file = !opt.input_path.empty();
    if (have_hex == have_file)
        throw UsageError("provide exactly one input: a file path or --hex <hexstring>");

    if (have_hex) {
        const auto bytes = parse_hex(opt.hex_input);
        if (!bytes) throw UsageError("--hex value is not valid hex of even length");
        std::istringstream in(std::string(bytes->begin(), bytes->end()));
        std::ostringstream raw;
        if (encrypting)
            encrypt_stream(in, raw, ctx, *strategy, padding);
        else
            decrypt_stream(in, raw, ctx, *strategy, padding);
        const std::string raw_str = raw.str();
        const std::string hex = to_hex(
            std::span(reinterpret_cast<const std::uint8_t*>(raw_str.data()), raw_str.size()));
        if (opt.output_path.empty()) {
            std::cout << hex << "\n";
        } else {
            AtomicFileWriter writer(opt.output_path);
            writer.stream() << hex << "\n";
            writer.commit();
        }
        return 0;
    }

    std::ifstream in(opt.input_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + opt.input_path + "' for reading");
    if (opt.output_path.empty()) {
        if (encrypting)
            encrypt_stream(in, std::cout, ctx, *strategy, padding);
        else
            decrypt_stream(in, std::cout, ctx, *strategy, padding);
        std::cout.flush();
        if (!std::cout) throw IoError("write to standard output failed");
    } else {
        AtomicFileWriter writer(opt.output_path);
        if (encrypting)
            encrypt_stream(in, writer.stream(), ctx, *strategy, padding);
        else
            decrypt_stream(in, writer.stream(), ctx, *strategy, padding);
        writer.commit();
    }
    return 0;
}

int run_kat_cmd(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    const auto records = kat::load_kat(in);
    const auto report = kat::run_kat(records);
    std::cout << kat::format_report(report);
    return report.failed.empty() ? 0 : 1;
}

struct BenchOptions {
    std::uint64_t blocks = 20000;
    std::uint64_t seed = 1;
    std::uint64_t warmup = 1024;
    int reps = 5;
    std::string variants = "single,double,triple2,aesx,aes-exe";
    std::string strategies = "math,table,xtime";
    bool machine = false;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

int run_bench_cmd(const BenchOptions& opt) {
    bench::BenchConfig cfg;
    cfg.n_blocks = opt.blocks;
    cfg.seed = opt.seed;
    cfg.warmup_blocks = opt.warmup;
    cfg.repetitions = opt.reps;
    cfg.variants.clear();
    for (const auto& name : split_csv(opt.variants)) {
        const auto v = parse_variant(name);
        if (!v) throw UsageError("unknown variant '" + name + "'");
        cfg.variants.push_back(*v);
    }
    cfg.strategies.clear();
    for (const auto& name : split_csv(opt.strategies)) {
        const auto s = parse_strategy(name);
        if (!s) throw UsageError("unknown strategy '" + name + "'");
        cfg.strategies.push_back(*s);
    }

    const bench::BenchReport report = bench::run_bench(cfg);
    if (opt.machine) {
        std::cout << bench::format_report_machine(report);
    } else {
        std::cout << bench::format_report(report);
        std::cout << "\n" << report.footnote << "\n";
    }
    return 0;
}

int run_sbox_dump() {
    const auto& sb = gf256::tables().sb.sbox;
    std::printf("    ");
    for (int lo = 0; lo < 16; ++lo) std::printf(" _%X", lo);
    std::printf("\n");
    for (int hi = 0; hi < 16; ++hi) {
        std::printf("%X_  ", hi);
        for (int lo = 0; lo < 16; ++lo) std::printf(" %02X", sb[16 * hi + lo]);
        std::printf("\n");
    }
    return 0;
}

void add_crypt_options(CLI::App* cmd, CryptOptions& opt) {
    cmd->add_option("input", opt.input_path, "input file of raw bytes");
    cmd->add_option("--hex", opt.hex_input, "hex string input instead of a file");
    cmd->add_option("-o,--out", opt.output_path, "output file (default: standard output)");
    cmd->add_option("--variant", opt.variant,
                    "single, double, triple2, aesx or aes-exe (default single)");
    cmd->add_option("--strategy", opt.strategy, "math, table or xtime (default table)");
    cmd->add_option("--key1", opt.key1, "first key (32 hex chars)");
    cmd->add_option("--key2", opt.key2, "second key, for 2- and 3-key variants");
    cmd->add_option("--key3", opt.key3, "third key, for 3-key variants");
    cmd->add_flag("--ascii-keys", opt.ascii_keys,
                  "treat keys as raw ASCII (up to 16 bytes, zero-padded)");
    cmd->add_option("--padding", opt.padding, "none or pkcs7 (default none)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AES-128 with pluggable MixColumns strategies and multiple-encryption variants"};
    app.require_subcommand(1);

    CryptOptions enc_opt, dec_opt;
    std::string kat_path;
    BenchOptions bench_opt;

    CLI::App* enc =
        app.add_subcommand("encrypt", "encrypt a file or hex block string (ECB framing)");
    add_crypt_options(enc, enc_opt);
    CLI::App* dec = app.add_subcommand("decrypt", "decrypt a file or hex block string");
    add_crypt_options(dec, dec_opt);

    CLI::App* katc = app.add_subcommand("kat", "run a known-answer-test file");
    katc->add_option("file", kat_path, "KAT file")->required();

    CLI::App* benchc = app.add_subcommand("bench", "compare variants and strategies");
    benchc->add_option("--blocks", bench_opt.blocks, "blocks per timed repetition");
    benchc->add_option("--seed", bench_opt.seed, "seed for the deterministic input stream");
    benchc->add_option("--warmup", bench_opt.warmup, "warmup blocks before timing");
    benchc->add_option("--reps", bench_opt.reps, "timed repetitions (median reported)");
    benchc->add_option("--variants", bench_opt.variants, "comma-separated variant list");
    benchc->add_option("--strategies", bench_opt.strategies, "comma-separated strategy list");
    benchc->add_flag("--machine", bench_opt.machine, "emit line-oriented key=value records");

    CLI::App* sboxc = app.add_subcommand("sbox-dump", "print the S-box as a 16x16 hex grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enc->parsed()) return run_crypt(enc_opt, true);
        if (dec->parsed()) return run_crypt(dec_opt, false);
        if (katc->parsed()) return run_kat_cmd(kat_path);
        if (benchc->parsed()) return run_bench_cmd(bench_opt);
        if (sboxc->parsed()) return run_sbox_dump();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bench::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
