#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aesmix/variants.hpp"

// Known-answer-test corpus: a line-oriented text format, a loader, and a
// runner that checks every record in both directions against the cipher.
//
// File format: one `field = value` pair per line, records separated by blank
// lines, `#` starts a comment line. Fields: id, variant, strategy (math,
// table, xtime or all), key1 [, key2, key3], pt, ct, provenance. Hex is
// written lowercase and accepted case-insensitively. Unknown fields are
// errors.

namespace aesmix::kat {

enum class Provenance { ExternalStandard, DerivedOracle, PaperInformational };

const char* to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

struct KatRecord {
    std::string id;
    Variant variant = Variant::Single;
    std::optional<MixStrategy> strategy;  // nullopt = run on all strategies
    VariantKeySet keys;
    Block plaintext{};
    Block ciphertext{};
    Provenance provenance = Provenance::DerivedOracle;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

std::vector<KatRecord> load_kat(std::istream& source);
std::string serialize(const std::vector<KatRecord>& records);

struct KatFailure {
    std::string id;
    std::string expected_hex;
    std::string actual_hex;
};

struct KatInfoResult {
    std::string id;
    bool matched = false;
    std::string expected_hex;
    std::string actual_hex;
};

struct KatReport {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<KatFailure> failed;          // sorted by record id
    std::size_t skipped_informational = 0;
    std::vector<KatInfoResult> informational;  // outcome of informational records
};

// Runs encrypt(pt) == ct and decrypt(ct) == pt for every record, on every
// strategy when the record says `all`. Informational records are executed
// and reported but can never fail the run.
KatReport run_kat(const std::vector<KatRecord>& records);

std::string format_report(const KatReport& report);

}  // namespace aesmix::kat
