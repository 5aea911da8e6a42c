#include "aesmix/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iomanip>
#include <random>
#include <sstream>

#include "aesmix/gf256.hpp"
#include "aesmix/op_counters.hpp"

namespace aesmix::bench {

namespace {

constexpr std::uint64_t kCountBlocksCap = 64;

int variant_index(Variant v) {
    for (std::size_t i = 0; i < kAllVariants.size(); ++i)
        if (kAllVariants[i] == v) return static_cast<int>(i);
    return -1;
}

int strategy_index(MixStrategy s) {
    for (std::size_t i = 0; i < kAllStrategies.size(); ++i)
        if (kAllStrategies[i] == s) return static_cast<int>(i);
    return -1;
}

Block next_block(std::mt19937_64& rng) {
    Block b;
    for (int i = 0; i < 16; i += 8) {
        const std::uint64_t v = rng();
        std::memcpy(b.data() + i, &v, 8);
    }
    return b;
}

std::uint64_t fold(std::uint64_t acc, const Block& b) {
    std::uint64_t lo, hi;
    std::memcpy(&lo, b.data(), 8);
    std::memcpy(&hi, b.data() + 8, 8);
    return (acc * 0x100000001b3ULL) ^ lo ^ hi;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct VariantRun {
    Variant variant;
    VariantContext ctx;
    std::vector<double> rep_ns;
    std::uint64_t checksum = 0;
    ops::OpCounts per_block;
    bool requested = true;
};

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.n_blocks == 0) throw ConfigError("n_blocks must be >= 1");
    if (cfg.variants.empty()) throw ConfigError("variant list must not be empty");
    if (cfg.strategies.empty()) throw ConfigError("strategy list must not be empty");
    if (cfg.repetitions < 1) throw ConfigError("repetitions must be >= 1");

    gf256::tables();  // build shared tables before any counting pass

    const auto wants = [](const auto& list, auto x) {
        return std::find(list.begin(), list.end(), x) != list.end();
    };

    BenchReport report;
    report.footnote =
        "note: ns/block and per-block operation counts are software proxies for "
        "implementation cost; hardware area figures (logic cells, pins, memory bits) "
        "have no software equivalent and are not reported.";

    std::uint64_t sink = 0;
    for (const MixStrategy s : kAllStrategies) {
        if (!wants(cfg.strategies, s)) continue;

        // One shared input stream per strategy, derived only from the seed.
        std::mt19937_64 input_rng(cfg.seed * 0x9e3779b97f4a7c15ULL +
                                  static_cast<std::uint64_t>(strategy_index(s) + 1));
        std::vector<Block> input(cfg.n_blocks);
        for (auto& b : input) b = next_block(input_rng);

        // The SINGLE baseline is always measured, silently when not requested.
        std::vector<VariantRun> runs;
        for (const Variant v : kAllVariants) {
            const bool requested = wants(cfg.variants, v);
            if (!requested && v != Variant::Single) continue;
            std::mt19937_64 key_rng(cfg.seed ^
                                    (static_cast<std::uint64_t>(variant_index(v) + 1) << 32) ^
                                    static_cast<std::uint64_t>(strategy_index(s) + 1));
            VariantKeySet keys;
            keys.k1 = next_block(key_rng);
            if (key_arity(v) >= 2) keys.k2 = next_block(key_rng);
            if (key_arity(v) >= 3) keys.k3 = next_block(key_rng);
            runs.push_back({v, VariantContext(v, keys), {}, 0, {}, requested});
        }

        for (auto& run : runs)
            for (std::uint64_t i = 0; i < cfg.warmup_blocks; ++i)
                sink = fold(sink, run.ctx.encrypt(input[i % input.size()], s));

        // Variants are interleaved at chunk granularity inside every
        // repetition, so scheduler and frequency noise lands on all of them
        // evenly instead of skewing the latency ratios.
        constexpr std::uint64_t kChunkBlocks = 1024;
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            std::vector<std::uint64_t> acc_ns(runs.size(), 0);
            std::vector<std::uint64_t> checksums(runs.size(), 0);
            for (std::uint64_t start = 0; start < cfg.n_blocks; start += kChunkBlocks) {
                const std::uint64_t end = std::min(cfg.n_blocks, start + kChunkBlocks);
                for (std::size_t r = 0; r < runs.size(); ++r) {
                    std::uint64_t checksum = checksums[r];
                    const auto t0 = std::chrono::steady_clock::now();
                    for (std::uint64_t i = start; i < end; ++i)
                        checksum = fold(checksum, runs[r].ctx.encrypt(input[i], s));
                    const auto t1 = std::chrono::steady_clock::now();
                    acc_ns[r] += static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                    checksums[r] = checksum;
                }
            }
            for (std::size_t r = 0; r < runs.size(); ++r) {
                runs[r].rep_ns.push_back(static_cast<double>(acc_ns[r]) /
                                         static_cast<double>(cfg.n_blocks));
                runs[r].checksum = checksums[r];
            }
        }

        const std::uint64_t count_blocks = std::min<std::uint64_t>(cfg.n_blocks, kCountBlocksCap);
        for (auto& run : runs) {
            ops::CountingScope scope;
            std::uint64_t counted = 0;
            for (std::uint64_t i = 0; i < count_blocks; ++i)
                counted = fold(counted, run.ctx.encrypt(input[i], s));
            asm volatile("" : : "r"(counted) : "memory");
            run.per_block.gf_mul = scope.counts().gf_mul / count_blocks;
            run.per_block.xtime = scope.counts().xtime / count_blocks;
            run.per_block.table_lookup = scope.counts().table_lookup / count_blocks;
        }

        const VariantRun* single_run = nullptr;
        for (const auto& run : runs)
            if (run.variant == Variant::Single) single_run = &run;

        for (const auto& run : runs) {
            if (!run.requested) continue;
            BenchRow row;
            row.variant = run.variant;
            row.strategy = s;
            row.ns_per_block = median(run.rep_ns);
            row.blocks_per_second = row.ns_per_block > 0.0 ? 1e9 / row.ns_per_block : 0.0;
            row.gf_mul_calls_per_block = run.per_block.gf_mul;
            row.xtime_calls_per_block = run.per_block.xtime;
            row.table_lookups_per_block = run.per_block.table_lookup;
            // Ratios pair each repetition with the SINGLE measurement from
            // the same interleaved cycle, then take the median, so a load
            // burst during one cycle cancels out of the quotient.
            std::vector<double> rep_ratios;
            for (std::size_t i = 0; i < run.rep_ns.size(); ++i)
                rep_ratios.push_back(run.rep_ns[i] / single_run->rep_ns[i]);
            row.latency_ratio_vs_single = median(std::move(rep_ratios));
            row.output_checksum = run.checksum;
            report.rows.push_back(row);
        }
    }
    asm volatile("" : : "r"(sink) : "memory");

    // Deterministic presentation order: variant first, then strategy.
    std::sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.variant != b.variant) return variant_index(a.variant) < variant_index(b.variant);
        return strategy_index(a.strategy) < strategy_index(b.strategy);
    });
    return report;
}

std::string format_report(const BenchReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(9) << "variant" << std::setw(9) << "strategy" << std::right
        << std::setw(12) << "blocks/s" << std::setw(12) << "ns/block" << std::setw(12)
        << "gf_mul/blk" << std::setw(12) << "xtime/blk" << std::setw(12) << "lut/blk"
        << std::setw(11) << "vs_single" << "\n";
    out << std::fixed;
    for (const auto& r : report.rows) {
        out << std::left << std::setw(9) << to_string(r.variant) << std::setw(9)
            << to_string(r.strategy) << std::right << std::setw(12) << std::setprecision(0)
            << r.blocks_per_second << std::setw(12) << std::setprecision(1) << r.ns_per_block
            << std::setw(12) << r.gf_mul_calls_per_block << std::setw(12)
            << r.xtime_calls_per_block << std::setw(12) << r.table_lookups_per_block
            << std::setw(11) << std::setprecision(3) << r.latency_ratio_vs_single << "\n";
    }
    return out.str();
}

std::string format_report_machine(const BenchReport& report) {
    std::ostringstream out;
    out << std::fixed;
    bool first = true;
    for (const auto& r : report.rows) {
        if (!first) out << "\n";
        first = false;
        out << "variant = " << to_string(r.variant) << "\n";
        out << "strategy = " << to_string(r.strategy) << "\n";
        out << "blocks_per_second = " << std::setprecision(0) << r.blocks_per_second << "\n";
        out << "ns_per_block = " << std::setprecision(1) << r.ns_per_block << "\n";
        out << "gf_mul_calls_per_block = " << r.gf_mul_calls_per_block << "\n";
        out << "xtime_calls_per_block = " << r.xtime_calls_per_block << "\n";
        out << "table_lookups_per_block = " << r.table_lookups_per_block << "\n";
        out << "latency_ratio_vs_single = " << std::setprecision(3) << r.latency_ratio_vs_single
            << "\n";
    }
    return out.str();
}

}  // namespace aesmix::bench
