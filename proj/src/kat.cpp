#include "aesmix/kat.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "aesmix/hex.hpp"

namespace aesmix::kat {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::ExternalStandard: return "external-standard";
        case Provenance::DerivedOracle: return "derived-oracle";
        case Provenance::PaperInformational: return "paper-informational";
    }
    return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
    if (name == "external-standard") return Provenance::ExternalStandard;
    if (name == "derived-oracle") return Provenance::DerivedOracle;
    if (name == "paper-informational") return Provenance::PaperInformational;
    return std::nullopt;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct RawField {
    std::string value;
    std::size_t line;
};

// One record's fields in file order, plus where the record started.
struct RawRecord {
    std::map<std::string, RawField, std::less<>> fields;
    std::size_t first_line = 0;
};

Block parse_block_field(const RawRecord& raw, const std::string& name) {
    const auto it = raw.fields.find(name);
    const auto block = parse_hex_block(it->second.value);
    if (!block)
        throw ParseError(it->second.line,
                         name + " must be exactly 32 hex chars, got '" + it->second.value + "'");
    return *block;
}

KatRecord finish_record(const RawRecord& raw) {
    static constexpr const char* kKnown[] = {"id",   "variant", "strategy", "key1", "key2",
                                             "key3", "pt",      "ct",       "provenance"};
    for (const auto& [name, field] : raw.fields) {
        if (std::find_if(std::begin(kKnown), std::end(kKnown),
                         [&](const char* k) { return name == k; }) == std::end(kKnown))
            throw ParseError(field.line, "unknown field '" + name + "'");
    }
    for (const char* required : {"id", "variant", "strategy", "key1", "pt", "ct", "provenance"}) {
        if (!raw.fields.count(required))
            throw ParseError(raw.first_line, std::string("missing field '") + required + "'");
    }

    KatRecord rec;
    rec.id = raw.fields.find("id")->second.value;

    const auto& var_field = raw.fields.find("variant")->second;
    const auto variant = parse_variant(var_field.value);
    if (!variant) throw ParseError(var_field.line, "unknown variant '" + var_field.value + "'");
    rec.variant = *variant;

    const auto& strat_field = raw.fields.find("strategy")->second;
    if (strat_field.value == "all") {
        rec.strategy = std::nullopt;
    } else {
        const auto strategy = parse_strategy(strat_field.value);
        if (!strategy)
            throw ParseError(strat_field.line, "unknown strategy '" + strat_field.value + "'");
        rec.strategy = *strategy;
    }

    const auto& prov_field = raw.fields.find("provenance")->second;
    const auto prov = parse_provenance(prov_field.value);
    if (!prov) throw ParseError(prov_field.line, "unknown provenance '" + prov_field.value + "'");
    rec.provenance = *prov;

    const std::size_t keys_present =
        1 + raw.fields.count("key2") + raw.fields.count("key3");
    if (raw.fields.count("key3") && !raw.fields.count("key2"))
        throw ParseError(raw.first_line, "key3 given without key2");
    if (keys_present != key_arity(rec.variant))
        throw ParseError(raw.first_line, "variant " + std::string(to_string(rec.variant)) +
                                             " takes " + std::to_string(key_arity(rec.variant)) +
                                             " key(s), record has " + std::to_string(keys_present));

    rec.keys.k1 = parse_block_field(raw, "key1");
    if (raw.fields.count("key2")) rec.keys.k2 = parse_block_field(raw, "key2");
    if (raw.fields.count("key3")) rec.keys.k3 = parse_block_field(raw, "key3");
    rec.plaintext = parse_block_field(raw, "pt");
    rec.ciphertext = parse_block_field(raw, "ct");
    return rec;
}

}  // namespace

std::vector<KatRecord> load_kat(std::istream& source) {
    std::vector<KatRecord> records;
    RawRecord raw;
    std::string line;
    std::size_t line_no = 0;

    const auto flush = [&] {
        if (!raw.fields.empty()) {
            records.push_back(finish_record(raw));
            raw = {};
        }
    };

    while (std::getline(source, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty()) {
            flush();
            continue;
        }
        if (body.front() == '#') continue;

        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'field = value', got '" + std::string(body) + "'");
        const std::string name(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (name.empty()) throw ParseError(line_no, "empty field name");
        if (raw.fields.empty()) raw.first_line = line_no;
        if (!raw.fields.emplace(name, RawField{value, line_no}).second)
            throw ParseError(line_no, "duplicate field '" + name + "'");
    }
    flush();
    return records;
}

std::string serialize(const std::vector<KatRecord>& records) {
    std::ostringstream out;
    bool first = true;
    for (const auto& rec : records) {
        if (!first) out << "\n";
        first = false;
        out << "id = " << rec.id << "\n";
        out << "variant = " << to_string(rec.variant) << "\n";
        out << "strategy = " << (rec.strategy ? to_string(*rec.strategy) : "all") << "\n";
        out << "key1 = " << to_hex(rec.keys.k1) << "\n";
        if (rec.keys.k2) out << "key2 = " << to_hex(*rec.keys.k2) << "\n";
        if (rec.keys.k3) out << "key3 = " << to_hex(*rec.keys.k3) << "\n";
        out << "pt = " << to_hex(rec.plaintext) << "\n";
        out << "ct = " << to_hex(rec.ciphertext) << "\n";
        out << "provenance = " << to_string(rec.provenance) << "\n";
    }
    return out.str();
}

KatReport run_kat(const std::vector<KatRecord>& records) {
    KatReport report;
    report.total = records.size();

    for (const auto& rec : records) {
        const VariantContext ctx(rec.variant, rec.keys);
        const auto strategies = rec.strategy
                                    ? std::vector<MixStrategy>{*rec.strategy}
                                    : std::vector<MixStrategy>(kAllStrategies.begin(),
                                                               kAllStrategies.end());

        bool ok = true;
        std::string expected_hex;
        std::string actual_hex;
        for (const MixStrategy s : strategies) {
            const Block enc = ctx.encrypt(rec.plaintext, s);
            if (enc != rec.ciphertext) {
                ok = false;
                expected_hex = to_hex(rec.ciphertext);
                actual_hex = to_hex(enc);
                break;
            }
            const Block dec = ctx.decrypt(rec.ciphertext, s);
            if (dec != rec.plaintext) {
                ok = false;
                expected_hex = to_hex(rec.plaintext);
                actual_hex = to_hex(dec);
                break;
            }
        }

        if (rec.provenance == Provenance::PaperInformational) {
            ++report.skipped_informational;
            const Block enc = ctx.encrypt(rec.plaintext, strategies.front());
            report.informational.push_back(
                {rec.id, ok, to_hex(rec.ciphertext), to_hex(enc)});
        } else if (ok) {
            ++report.passed;
        } else {
            report.failed.push_back({rec.id, expected_hex, actual_hex});
        }
    }

    std::sort(report.failed.begin(), report.failed.end(),
              [](const KatFailure& a, const KatFailure& b) { return a.id < b.id; });
    return report;
}

std::string format_report(const KatReport& report) {
    std::ostringstream out;
    out << "kat: total " << report.total << ", passed " << report.passed << ", failed "
        << report.failed.size() << ", informational " << report.skipped_informational << "\n";
    for (const auto& f : report.failed)
        out << "FAIL " << f.id << ": expected " << f.expected_hex << ", got " << f.actual_hex
            << "\n";
    for (const auto& i : report.informational)
        out << "info " << i.id << ": " << (i.matched ? "matched" : "differs") << " (listed "
            << i.expected_hex << ", computed " << i.actual_hex << ")\n";
    return out.str();
}

}  // namespace aesmix::kat
