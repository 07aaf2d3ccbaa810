#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsqdao/corpus.hpp"

namespace bsq {

enum class TagSource : std::uint8_t {
    PRELAUNCH_SPREADSHEET,
    GITHUB_ISSUE,
    GENESIS_MAPPING,
    MANUAL,
};

std::string_view tag_source_name(TagSource s);
std::optional<TagSource> parse_tag_source(std::string_view name);

/// Address-level identity evidence: a pseudonym, GitHub username, or
/// real-world name attached to one address.
struct TagRecord {
    Address address;
    std::string tag;  // raw label, normalized later
    TagSource source = TagSource::MANUAL;

    bool operator==(const TagRecord&) const = default;
};

struct ParseReport {
    std::size_t skipped_lines = 0;   // unparseable lines (non-strict mode)
    std::size_t dropped_txs = 0;     // parsed but failed validation (non-strict mode)
    std::vector<std::string> warnings;
};

struct ParsedCorpus {
    Corpus corpus;
    ParseReport report;
};

/// Parses the JSONL corpus format. In strict mode any malformed line or
/// validation failure throws; otherwise offending transactions are dropped,
/// counted, and the remainder re-validated until clean. `threads` parallelizes
/// line parsing; the result is independent of the thread count.
ParsedCorpus parse_corpus(std::string_view bytes, bool strict, unsigned threads = 1);
ParsedCorpus parse_corpus_file(const std::string& path, bool strict, unsigned threads = 1);

/// Canonical JSONL bytes: transactions in corpus order, fixed key order,
/// compact separators. parse_corpus ∘ serialize_corpus is the identity on
/// validated corpora.
std::string serialize_corpus(const Corpus& corpus);

/// CSV with header address,tag,source. Duplicate (address, tag) pairs keep
/// their first occurrence.
std::vector<TagRecord> parse_tag_db(std::string_view bytes);
std::vector<TagRecord> parse_tag_db_file(const std::string& path);
std::string serialize_tag_db(const std::vector<TagRecord>& records);

/// CSV with header canonical,variant; maps raw tag variants to the label to
/// use in their place.
std::map<std::string, std::string> parse_alias_file(std::string_view bytes);

struct GenesisEntry {
    std::string tag;
    Address prelaunch_address;

    bool operator==(const GenesisEntry&) const = default;
};

/// CSV with header tag,prelaunch_address; entries in spreadsheet order.
std::vector<GenesisEntry> parse_genesis_spreadsheet(std::string_view bytes);
std::string serialize_genesis_spreadsheet(const std::vector<GenesisEntry>& entries);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace bsq
