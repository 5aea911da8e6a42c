#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "aesmix/variants.hpp"

// Throughput and operation-count comparison across variants and MixColumns
// strategies. Timing wraps a monotonic clock around batched encrypt loops
// with a warmup phase and reports the median of several repetitions; field
// operation counts come from a separate instrumented pass over the same
// inputs, which is byte-for-byte equivalent to the timed pass.

namespace aesmix::bench {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BenchConfig {
    std::uint64_t n_blocks = 20000;
    std::uint64_t seed = 1;
    std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
    std::vector<MixStrategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
    std::uint64_t warmup_blocks = 1024;
    int repetitions = 5;
};

struct BenchRow {
    Variant variant = Variant::Single;
    MixStrategy strategy = MixStrategy::Math;
    double blocks_per_second = 0.0;
    double ns_per_block = 0.0;
    std::uint64_t gf_mul_calls_per_block = 0;
    std::uint64_t xtime_calls_per_block = 0;
    std::uint64_t table_lookups_per_block = 0;
    double latency_ratio_vs_single = 0.0;  // median of per-repetition ratios

    std::uint64_t output_checksum = 0;  // fold of all ciphertext bytes, for determinism checks
};

struct BenchReport {
    std::vector<BenchRow> rows;  // ordered by variant, then strategy
    std::string footnote;        // caveat about what the numbers can and cannot proxy
};

BenchReport run_bench(const BenchConfig& cfg);

// Fixed-width table, one header row plus one line per row.
std::string format_report(const BenchReport& report);

// Same fields as line-oriented `key=value` records, blank line between rows.
std::string format_report_machine(const BenchReport& report);

}  // namespace aesmix::bench
