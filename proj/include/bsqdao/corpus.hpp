#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bsqdao/model.hpp"

namespace bsq {

enum class IssueCode : std::uint8_t {
    BadTxid,
    DuplicateTxid,
    EmptyAddress,
    OutputIndexGap,
    IssuanceOnWrongType,
    IssuanceWithoutBsq,
    GenesisColoredInput,
    DanglingColoredInput,
    ColoredInputMismatch,
    NegativeBurnIssue,
    ConservationMismatch,
    TransferWithoutInputs,
    TransferWithoutOutputs,
    DoubleSpend,
};

std::string_view issue_code_name(IssueCode c);

struct ValidationIssue {
    std::string txid;
    IssueCode code;
    std::string detail;

    bool operator==(const ValidationIssue&) const = default;
};

using ValidationResult = std::vector<ValidationIssue>;

/// All BSQ transactions of a chain snapshot, ordered by (height, txid), with a
/// txid index and a spent-output index. Immutable after construction; safe to
/// share read-only across threads.
class Corpus {
  public:
    Corpus() = default;

    /// Sorts and indexes; does not validate. Duplicate txids keep their first
    /// occurrence in the index and are reported by validation.
    static Corpus build(std::vector<Transaction> txs);

    const std::vector<Transaction>& transactions() const { return txs_; }
    std::size_t size() const { return txs_.size(); }

    const Transaction* find(std::string_view txid) const;
    const TxOutput* find_output(std::string_view txid, std::uint64_t index) const;

    /// Txid of the transaction spending the given output, or nullptr when the
    /// output is unspent or unknown. Double spends keep the first spender in
    /// corpus order and are reported by validation.
    const std::string* spender_of(std::string_view txid, std::uint64_t index) const;

    /// Distinct addresses referenced by any input or output, IRREGULAR
    /// transactions included.
    std::size_t distinct_address_count() const;

    /// Per-transaction checks against this corpus; corpus-level issues
    /// (double spends) are reported by validate_corpus.
    ValidationResult validate_transaction(const Transaction& tx) const;

    /// Validates every transaction plus corpus-level invariants. Deterministic
    /// and independent of the order transactions were supplied in.
    ValidationResult validate_all() const;

  private:
    struct OutPointHash {
        std::size_t operator()(const std::pair<std::string_view, std::uint64_t>& p) const {
            return std::hash<std::string_view>{}(p.first) ^ (p.second * 0x9e3779b97f4a7c15ULL);
        }
    };

    std::vector<Transaction> txs_;
    std::unordered_map<std::string_view, std::uint32_t> by_txid_;
    std::unordered_map<std::pair<std::string_view, std::uint64_t>, std::uint32_t, OutPointHash>
        spender_;
    std::vector<ValidationIssue> build_issues_;  // double spends found while indexing
};

}  // namespace bsq
