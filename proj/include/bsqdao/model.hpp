#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsqdao/amounts.hpp"

namespace bsq {

/// Opaque address identifier; equality is exact string equality.
using Address = std::string;

/// The twelve valid BSQ transaction types plus IRREGULAR, which houses
/// malformed transactions that are retained in the corpus but excluded from
/// clustering, graph, market, and supply computations.
enum class TxType : std::uint8_t {
    GENESIS,
    TRADE_FEE,
    TRANSFER,
    COMPENSATION_REQUEST,
    REIMBURSEMENT_REQUEST,
    PROPOSAL,
    BLIND_VOTE,
    VOTE_REVEAL,
    LOCKUP,
    UNLOCK,
    ASSET_LISTING_FEE,
    PROOF_OF_BURN,
    IRREGULAR,
};

inline constexpr std::array<TxType, 13> kAllTxTypes = {
    TxType::GENESIS,       TxType::TRADE_FEE,   TxType::TRANSFER,
    TxType::COMPENSATION_REQUEST, TxType::REIMBURSEMENT_REQUEST,
    TxType::PROPOSAL,      TxType::BLIND_VOTE,  TxType::VOTE_REVEAL,
    TxType::LOCKUP,        TxType::UNLOCK,      TxType::ASSET_LISTING_FEE,
    TxType::PROOF_OF_BURN, TxType::IRREGULAR,
};

std::string_view tx_type_name(TxType t);
std::optional<TxType> parse_tx_type(std::string_view name);

/// True for every type whose inputs and outputs all belong to one participant:
/// everything except TRANSFER, GENESIS, and IRREGULAR.
constexpr bool is_self_transfer(TxType t) {
    return t != TxType::TRANSFER && t != TxType::GENESIS && t != TxType::IRREGULAR;
}

/// True for the types allowed to carry issuance-flagged outputs.
constexpr bool may_issue(TxType t) {
    return t == TxType::GENESIS || t == TxType::COMPENSATION_REQUEST ||
           t == TxType::REIMBURSEMENT_REQUEST;
}

struct TxInput {
    std::string prev_txid;  // 64-char lowercase hex
    std::uint64_t prev_index = 0;
    Address address;
    SatAmount sat;
    BsqAmount bsq;  // > 0 means the input spends a colored output

    bool operator==(const TxInput&) const = default;
};

struct TxOutput {
    std::uint64_t index = 0;  // position in the output list
    Address address;
    SatAmount sat;
    BsqAmount bsq;
    bool issuance = false;  // true only on GENESIS and accepted request outputs

    bool operator==(const TxOutput&) const = default;
};

struct Transaction {
    std::string txid;  // 64-char lowercase hex
    std::uint64_t height = 0;
    TxType tx_type = TxType::IRREGULAR;
    std::vector<TxInput> inputs;
    std::vector<TxOutput> outputs;

    bool operator==(const Transaction&) const = default;
};

/// BSQ destroyed by the transaction: colored input sum minus the non-issuance
/// colored output sum. GENESIS burns nothing by definition. Throws
/// NegativeBurn when the difference is negative.
BsqAmount burn_amount(const Transaction& tx);

/// BSQ created by the transaction: the sum over issuance-flagged outputs.
BsqAmount minted_amount(const Transaction& tx);

inline BsqAmount input_bsq_sum(const Transaction& tx) {
    BsqAmount sum;
    for (const auto& in : tx.inputs) sum += in.bsq;
    return sum;
}

inline BsqAmount output_bsq_sum(const Transaction& tx) {
    BsqAmount sum;
    for (const auto& out : tx.outputs) sum += out.bsq;
    return sum;
}

bool is_hex64_lower(std::string_view s);

}  // namespace bsq
