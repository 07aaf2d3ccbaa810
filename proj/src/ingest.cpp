#include "bsqdao/ingest.hpp"

#include "bsqdao/csv.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

namespace bsq {

namespace {

constexpr std::string_view kSourceNames[] = {
    "PRELAUNCH_SPREADSHEET",
    "GITHUB_ISSUE",
    "GENESIS_MAPPING",
    "MANUAL",
};

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::int64_t require_int(const json& obj, const char* key, std::size_t line) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(line, std::string("missing or non-integer field '") + key + "'");
    return obj[key].get<std::int64_t>();
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw ParseError(line, std::string("missing or non-string field '") + key + "'");
    return obj[key].get<std::string>();
}

BsqAmount require_bsq(const json& obj, const char* key, std::size_t line) {
    std::int64_t v = require_int(obj, key, line);
    if (v < 0) throw ParseError(line, std::string("negative '") + key + "'");
    return BsqAmount(v);
}

SatAmount require_sat(const json& obj, const char* key, std::size_t line) {
    std::int64_t v = require_int(obj, key, line);
    if (v < 0) throw ParseError(line, std::string("negative '") + key + "'");
    return SatAmount(v);
}

void check_keys(const json& obj, std::initializer_list<std::string_view> known, std::size_t line,
                bool strict, std::vector<std::string>* warnings) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (auto k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok) {
            if (strict) throw ParseError(line, "unknown field '" + item.key() + "'");
            if (warnings)
                warnings->push_back("line " + std::to_string(line) + ": ignoring unknown field '" +
                                    item.key() + "'");
        }
    }
}

Transaction parse_tx_line(std::string_view text, std::size_t line, bool strict,
                          std::vector<std::string>* warnings) {
    json obj = json::parse(text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) throw ParseError(line, "not a JSON object");
    check_keys(obj, {"txid", "height", "type", "inputs", "outputs"}, line, strict, warnings);

    Transaction tx;
    tx.txid = require_string(obj, "txid", line);
    std::int64_t height = require_int(obj, "height", line);
    if (height < 0) throw ParseError(line, "negative height");
    tx.height = static_cast<std::uint64_t>(height);
    std::string type_name = require_string(obj, "type", line);
    auto type = parse_tx_type(type_name);
    if (!type) throw ParseError(line, "unknown transaction type '" + type_name + "'");
    tx.tx_type = *type;

    if (!obj.contains("inputs") || !obj["inputs"].is_array())
        throw ParseError(line, "missing or non-array field 'inputs'");
    if (!obj.contains("outputs") || !obj["outputs"].is_array())
        throw ParseError(line, "missing or non-array field 'outputs'");

    for (const auto& in : obj["inputs"]) {
        if (!in.is_object()) throw ParseError(line, "input is not an object");
        check_keys(in, {"prev_txid", "prev_index", "address", "sat", "bsq"}, line, strict, warnings);
        TxInput txin;
        txin.prev_txid = require_string(in, "prev_txid", line);
        std::int64_t prev_index = require_int(in, "prev_index", line);
        if (prev_index < 0) throw ParseError(line, "negative prev_index");
        txin.prev_index = static_cast<std::uint64_t>(prev_index);
        txin.address = require_string(in, "address", line);
        txin.sat = require_sat(in, "sat", line);
        txin.bsq = require_bsq(in, "bsq", line);
        tx.inputs.push_back(std::move(txin));
    }
    for (const auto& out : obj["outputs"]) {
        if (!out.is_object()) throw ParseError(line, "output is not an object");
        check_keys(out, {"index", "address", "sat", "bsq", "issuance"}, line, strict, warnings);
        TxOutput txout;
        std::int64_t index = require_int(out, "index", line);
        if (index < 0) throw ParseError(line, "negative output index");
        txout.index = static_cast<std::uint64_t>(index);
        txout.address = require_string(out, "address", line);
        txout.sat = require_sat(out, "sat", line);
        txout.bsq = require_bsq(out, "bsq", line);
        if (!out.contains("issuance") || !out["issuance"].is_boolean())
            throw ParseError(line, "missing or non-boolean field 'issuance'");
        txout.issuance = out["issuance"].get<bool>();
        tx.outputs.push_back(std::move(txout));
    }
    return tx;
}

std::vector<std::string_view> split_lines(std::string_view bytes) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < bytes.size()) {
        std::size_t end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        std::string_view line = bytes.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace

std::string_view tag_source_name(TagSource s) {
    return kSourceNames[static_cast<std::size_t>(s)];
}

std::optional<TagSource> parse_tag_source(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kSourceNames); ++i)
        if (kSourceNames[i] == name) return static_cast<TagSource>(i);
    return std::nullopt;
}

ParsedCorpus parse_corpus(std::string_view bytes, bool strict, unsigned threads) {
    std::vector<std::string_view> lines = split_lines(bytes);
    ParseReport report;

    struct Slot {
        std::optional<Transaction> tx;
        std::optional<ParseError> error;
        std::vector<std::string> warnings;
    };
    std::vector<Slot> slots(lines.size());

    auto parse_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            std::string_view line = lines[i];
            if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
            try {
                slots[i].tx = parse_tx_line(line, i + 1, strict, &slots[i].warnings);
            } catch (const ParseError& e) {
                slots[i].error = e;
            }
        }
    };

    if (threads <= 1 || lines.size() < 256) {
        parse_range(0, lines.size());
    } else {
        unsigned n = std::min<unsigned>(threads, std::thread::hardware_concurrency() * 2 + 1);
        std::vector<std::thread> pool;
        std::size_t chunk = (lines.size() + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::size_t lo = std::min(lines.size(), t * chunk);
            std::size_t hi = std::min(lines.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(parse_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Transaction> txs;
    txs.reserve(lines.size());
    for (auto& slot : slots) {
        if (slot.error) {
            if (strict) throw *slot.error;
            ++report.skipped_lines;
            report.warnings.push_back(std::string("skipped ") + slot.error->what());
            continue;
        }
        for (auto& w : slot.warnings) report.warnings.push_back(std::move(w));
        if (slot.tx) txs.push_back(std::move(*slot.tx));
    }

    Corpus corpus = Corpus::build(std::move(txs));
    ValidationResult issues = corpus.validate_all();
    if (!issues.empty() && strict) {
        std::string msg = std::to_string(issues.size()) + " validation failure(s):";
        for (std::size_t i = 0; i < issues.size() && i < 20; ++i)
            msg += "\n  " + issues[i].txid + ": " + std::string(issue_code_name(issues[i].code)) +
                   " (" + issues[i].detail + ")";
        throw ValidationError(msg);
    }
    // Dropping a transaction can orphan colored inputs of its spenders, so
    // re-validate until the remainder is clean.
    while (!issues.empty()) {
        std::set<std::string> bad;
        for (const auto& issue : issues) bad.insert(issue.txid);
        std::vector<Transaction> kept;
        kept.reserve(corpus.size());
        for (const auto& tx : corpus.transactions())
            if (!bad.contains(tx.txid)) kept.push_back(tx);
        report.dropped_txs += corpus.size() - kept.size();
        for (const auto& issue : issues)
            report.warnings.push_back("dropped " + issue.txid + ": " +
                                      std::string(issue_code_name(issue.code)));
        corpus = Corpus::build(std::move(kept));
        issues = corpus.validate_all();
    }
    return {std::move(corpus), std::move(report)};
}

ParsedCorpus parse_corpus_file(const std::string& path, bool strict, unsigned threads) {
    return parse_corpus(read_file(path), strict, threads);
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& tx : corpus.transactions()) {
        ordered_json obj;
        obj["txid"] = tx.txid;
        obj["height"] = tx.height;
        obj["type"] = std::string(tx_type_name(tx.tx_type));
        ordered_json inputs = ordered_json::array();
        for (const auto& in : tx.inputs) {
            ordered_json j;
            j["prev_txid"] = in.prev_txid;
            j["prev_index"] = in.prev_index;
            j["address"] = in.address;
            j["sat"] = in.sat.value();
            j["bsq"] = in.bsq.centi();
            inputs.push_back(std::move(j));
        }
        obj["inputs"] = std::move(inputs);
        ordered_json outputs = ordered_json::array();
        for (const auto& o : tx.outputs) {
            ordered_json j;
            j["index"] = o.index;
            j["address"] = o.address;
            j["sat"] = o.sat.value();
            j["bsq"] = o.bsq.centi();
            j["issuance"] = o.issuance;
            outputs.push_back(std::move(j));
        }
        obj["outputs"] = std::move(outputs);
        out += obj.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<TagRecord> parse_tag_db(std::string_view bytes) {
    std::vector<std::string_view> lines = split_lines(bytes);
    if (lines.empty() || lines[0] != "address,tag,source")
        throw ParseError(1, "expected header 'address,tag,source'");
    std::vector<TagRecord> records;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields = csv_split(lines[i], i + 1);
        if (fields.size() != 3) throw ParseError(i + 1, "expected 3 fields");
        auto source = parse_tag_source(fields[2]);
        if (!source) throw UnknownSource(i + 1, "unknown source '" + fields[2] + "'");
        if (fields[0].empty()) throw ParseError(i + 1, "empty address");
        bool blank_tag = true;
        for (char c : fields[1])
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != '\f' && c != '\v')
                blank_tag = false;
        if (blank_tag) throw ParseError(i + 1, "tag is empty after trimming");
        if (!seen.emplace(fields[0], fields[1]).second) continue;
        records.push_back({std::move(fields[0]), std::move(fields[1]), *source});
    }
    return records;
}

std::vector<TagRecord> parse_tag_db_file(const std::string& path) {
    return parse_tag_db(read_file(path));
}

std::string serialize_tag_db(const std::vector<TagRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records)
        rows.push_back({r.address, r.tag, std::string(tag_source_name(r.source))});
    return write_table(rows, {"address", "tag", "source"});
}

std::map<std::string, std::string> parse_alias_file(std::string_view bytes) {
    std::vector<std::string_view> lines = split_lines(bytes);
    if (lines.empty() || lines[0] != "canonical,variant")
        throw ParseError(1, "expected header 'canonical,variant'");
    std::map<std::string, std::string> variant_to_canonical;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields = csv_split(lines[i], i + 1);
        if (fields.size() != 2) throw ParseError(i + 1, "expected 2 fields");
        variant_to_canonical[std::move(fields[1])] = std::move(fields[0]);
    }
    return variant_to_canonical;
}

std::vector<GenesisEntry> parse_genesis_spreadsheet(std::string_view bytes) {
    std::vector<std::string_view> lines = split_lines(bytes);
    if (lines.empty() || lines[0] != "tag,prelaunch_address")
        throw ParseError(1, "expected header 'tag,prelaunch_address'");
    std::vector<GenesisEntry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields = csv_split(lines[i], i + 1);
        if (fields.size() != 2) throw ParseError(i + 1, "expected 2 fields");
        entries.push_back({std::move(fields[0]), std::move(fields[1])});
    }
    return entries;
}

std::string serialize_genesis_spreadsheet(const std::vector<GenesisEntry>& entries) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) rows.push_back({e.tag, e.prelaunch_address});
    return write_table(rows, {"tag", "prelaunch_address"});
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace bsq
