#include "bsqdao/model.hpp"

namespace bsq {

namespace {

constexpr std::array<std::string_view, 13> kTypeNames = {
    "GENESIS",       "TRADE_FEE",   "TRANSFER",
    "COMPENSATION_REQUEST", "REIMBURSEMENT_REQUEST",
    "PROPOSAL",      "BLIND_VOTE",  "VOTE_REVEAL",
    "LOCKUP",        "UNLOCK",      "ASSET_LISTING_FEE",
    "PROOF_OF_BURN", "IRREGULAR",
};

}  // namespace

std::string_view tx_type_name(TxType t) {
    return kTypeNames[static_cast<std::size_t>(t)];
}

std::optional<TxType> parse_tx_type(std::string_view name) {
    for (std::size_t i = 0; i < kTypeNames.size(); ++i)
        if (kTypeNames[i] == name) return static_cast<TxType>(i);
    return std::nullopt;
}

BsqAmount burn_amount(const Transaction& tx) {
    if (tx.tx_type == TxType::GENESIS) return BsqAmount(0);
    BsqAmount in = input_bsq_sum(tx);
    BsqAmount out;
    for (const auto& o : tx.outputs)
        if (!o.issuance) out += o.bsq;
    if (out > in) throw NegativeBurn("tx " + tx.txid + ": non-issuance outputs exceed inputs");
    return in.checked_sub(out);
}

BsqAmount minted_amount(const Transaction& tx) {
    BsqAmount sum;
    for (const auto& o : tx.outputs)
        if (o.issuance) sum += o.bsq;
    return sum;
}

bool is_hex64_lower(std::string_view s) {
    if (s.size() != 64) return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    return true;
}

}  // namespace bsq
