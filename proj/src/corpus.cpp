#include "bsqdao/corpus.hpp"

#include <algorithm>
#include <unordered_set>

namespace bsq {

namespace {

constexpr std::string_view kIssueNames[] = {
    "BadTxid",
    "DuplicateTxid",
    "EmptyAddress",
    "OutputIndexGap",
    "IssuanceOnWrongType",
    "IssuanceWithoutBsq",
    "GenesisColoredInput",
    "DanglingColoredInput",
    "ColoredInputMismatch",
    "NegativeBurn",
    "ConservationMismatch",
    "TransferWithoutInputs",
    "TransferWithoutOutputs",
    "DoubleSpend",
};

}  // namespace

std::string_view issue_code_name(IssueCode c) {
    return kIssueNames[static_cast<std::size_t>(c)];
}

Corpus Corpus::build(std::vector<Transaction> txs) {
    Corpus c;
    std::sort(txs.begin(), txs.end(), [](const Transaction& a, const Transaction& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.txid < b.txid;
    });
    c.txs_ = std::move(txs);
    c.by_txid_.reserve(c.txs_.size() * 2);
    for (std::uint32_t i = 0; i < c.txs_.size(); ++i)
        c.by_txid_.emplace(c.txs_[i].txid, i);  // first occurrence wins
    for (std::uint32_t i = 0; i < c.txs_.size(); ++i) {
        for (const auto& in : c.txs_[i].inputs) {
            if (!c.by_txid_.contains(in.prev_txid)) continue;  // out-of-corpus funding
            auto key = std::make_pair(std::string_view(in.prev_txid), in.prev_index);
            auto [it, inserted] = c.spender_.emplace(key, i);
            if (!inserted && it->second != i) {
                c.build_issues_.push_back({c.txs_[i].txid, IssueCode::DoubleSpend,
                                           "output " + in.prev_txid + ":" +
                                               std::to_string(in.prev_index) +
                                               " already spent by " + c.txs_[it->second].txid});
            }
        }
    }
    return c;
}

const Transaction* Corpus::find(std::string_view txid) const {
    auto it = by_txid_.find(txid);
    return it == by_txid_.end() ? nullptr : &txs_[it->second];
}

const TxOutput* Corpus::find_output(std::string_view txid, std::uint64_t index) const {
    const Transaction* tx = find(txid);
    if (!tx || index >= tx->outputs.size()) return nullptr;
    return &tx->outputs[index];
}

const std::string* Corpus::spender_of(std::string_view txid, std::uint64_t index) const {
    auto it = spender_.find(std::make_pair(txid, index));
    return it == spender_.end() ? nullptr : &txs_[it->second].txid;
}

std::size_t Corpus::distinct_address_count() const {
    std::unordered_set<std::string_view> seen;
    for (const auto& tx : txs_) {
        for (const auto& in : tx.inputs) seen.insert(in.address);
        for (const auto& out : tx.outputs) seen.insert(out.address);
    }
    return seen.size();
}

ValidationResult Corpus::validate_transaction(const Transaction& tx) const {
    ValidationResult issues;
    auto add = [&](IssueCode code, std::string detail) {
        issues.push_back({tx.txid, code, std::move(detail)});
    };

    if (!is_hex64_lower(tx.txid)) add(IssueCode::BadTxid, "txid is not 64-char lowercase hex");
    if (const Transaction* canonical = find(tx.txid); canonical && canonical != &tx)
        add(IssueCode::DuplicateTxid, "txid already present in corpus");

    for (const auto& in : tx.inputs)
        if (in.address.empty()) {
            add(IssueCode::EmptyAddress, "input with empty address");
            break;
        }
    for (const auto& out : tx.outputs)
        if (out.address.empty()) {
            add(IssueCode::EmptyAddress, "output with empty address");
            break;
        }
    for (std::size_t i = 0; i < tx.outputs.size(); ++i)
        if (tx.outputs[i].index != i) {
            add(IssueCode::OutputIndexGap,
                "output " + std::to_string(i) + " has index " + std::to_string(tx.outputs[i].index));
            break;
        }

    // Semantic checks do not apply to IRREGULAR transactions; they are kept
    // as-is and excluded from all downstream computations.
    if (tx.tx_type == TxType::IRREGULAR) return issues;

    for (const auto& out : tx.outputs) {
        if (out.issuance && !may_issue(tx.tx_type))
            add(IssueCode::IssuanceOnWrongType,
                "issuance output on " + std::string(tx_type_name(tx.tx_type)));
        if (out.issuance && out.bsq.is_zero())
            add(IssueCode::IssuanceWithoutBsq, "issuance output with zero BSQ");
    }

    if (tx.tx_type == TxType::GENESIS) {
        for (const auto& in : tx.inputs)
            if (!in.bsq.is_zero()) {
                add(IssueCode::GenesisColoredInput, "genesis input carries BSQ");
                break;
            }
    } else {
        for (const auto& in : tx.inputs) {
            const TxOutput* prev = find_output(in.prev_txid, in.prev_index);
            if (!in.bsq.is_zero()) {
                if (!prev) {
                    add(IssueCode::DanglingColoredInput,
                        "colored input " + in.prev_txid + ":" + std::to_string(in.prev_index) +
                            " does not resolve in corpus");
                } else if (prev->bsq != in.bsq || prev->address != in.address) {
                    add(IssueCode::ColoredInputMismatch,
                        "colored input disagrees with referenced output " + in.prev_txid + ":" +
                            std::to_string(in.prev_index));
                }
            } else if (prev && !prev->bsq.is_zero()) {
                add(IssueCode::ColoredInputMismatch,
                    "uncolored input spends colored output " + in.prev_txid + ":" +
                        std::to_string(in.prev_index));
            }
        }
    }

    if (tx.tx_type == TxType::TRANSFER) {
        if (tx.inputs.empty()) add(IssueCode::TransferWithoutInputs, "transfer with no inputs");
        if (tx.outputs.empty()) add(IssueCode::TransferWithoutOutputs, "transfer with no outputs");
    }

    try {
        BsqAmount burn = burn_amount(tx);
        // Identity: in + minted = out + burn. Only GENESIS can violate it
        // (burn is pinned to zero there), via colored non-issuance outputs.
        std::int64_t lhs = input_bsq_sum(tx).centi() + minted_amount(tx).centi();
        std::int64_t rhs = output_bsq_sum(tx).centi() + burn.centi();
        if (lhs != rhs)
            add(IssueCode::ConservationMismatch,
                "in+minted=" + std::to_string(lhs) + " vs out+burn=" + std::to_string(rhs));
    } catch (const NegativeBurn&) {
        add(IssueCode::NegativeBurnIssue, "non-issuance outputs exceed inputs");
    }

    return issues;
}

ValidationResult Corpus::validate_all() const {
    ValidationResult all;
    for (const auto& tx : txs_) {
        ValidationResult one = validate_transaction(tx);
        all.insert(all.end(), one.begin(), one.end());
    }
    all.insert(all.end(), build_issues_.begin(), build_issues_.end());
    return all;
}

}  // namespace bsq
