#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bsqdao/clustering.hpp"
#include "bsqdao/corpus.hpp"
#include "bsqdao/ingest.hpp"

namespace bsq {

using ParticipantId = std::string;

struct AdversarialFlags {
    bool disguised_transfers = false;  // some payments shaped as TRADE_FEE txs
    bool dummy_transfers = false;      // wallet hop appended after each self-transfer
    bool coinjoin = false;             // genesis funded by several participants

    bool operator==(const AdversarialFlags&) const = default;
};

struct SynthConfig {
    std::uint32_t participants = 0;
    std::uint64_t tx_count = 0;                // scheduled txs after the genesis
    std::map<TxType, std::uint64_t> type_mix;  // weights; empty uses default_type_mix()
    std::uint64_t seed = 0;
    AdversarialFlags adversarial;
    std::uint32_t migrations = 0;       // whole-wallet moves to a fresh wallet
    std::uint32_t alias_conflicts = 0;  // participants tagged under a second name

    bool operator==(const SynthConfig&) const = default;
};

/// Weights shaped like the live BSQ ledger's type distribution: trade fees
/// dominate, transfers are a distant second, governance types trail.
std::map<TxType, std::uint64_t> default_type_mix();

/// True per-transaction record. For a self-transfer sender == recipient and
/// amount is everything kept (minted issuance included); for a payment,
/// amount goes to the recipient and change returns to the sender. The genesis
/// appears as one entry per grant with sender "".
struct LedgerEntry {
    std::string txid;
    TxType tx_type = TxType::IRREGULAR;
    ParticipantId sender;
    ParticipantId recipient;
    BsqAmount amount;
    BsqAmount change;
    BsqAmount burned;
    BsqAmount minted;

    bool operator==(const LedgerEntry&) const = default;
};

/// kind: "coinjoin" | "migration" | "dummy_transfer" | "disguised_transfer" |
/// "alias_conflict". txid is empty for alias conflicts; tags is filled only
/// for them.
struct InjectedEvent {
    std::string kind;
    std::vector<ParticipantId> participants;
    std::string txid;
    std::vector<std::string> tags;

    bool operator==(const InjectedEvent&) const = default;
};

struct GroundTruth {
    std::map<ParticipantId, std::set<Address>> participants;  // disjoint address sets
    std::vector<LedgerEntry> ledger;
    std::vector<InjectedEvent> injected_events;

    bool operator==(const GroundTruth&) const = default;
};

/// Address -> owning participant over the whole ground truth.
std::map<Address, ParticipantId> owner_index(const GroundTruth& truth);

struct SynthResult {
    Corpus corpus;
    GroundTruth truth;
    std::vector<TagRecord> tag_db;
};

/// Deterministic per seed: a genesis granting every participant a stake, then
/// tx_count transactions drawn from type_mix, each wallet drawing fresh
/// addresses per tx. Adversarial flags, migrations, and alias conflicts
/// inject the corresponding events on top. Throws InfeasibleConfig when the
/// request cannot be met (no participants, transfers or coinjoin with fewer
/// than two participants, weight on GENESIS or IRREGULAR).
SynthResult generate(const SynthConfig& config);

/// Independent restatement of the clustering heuristic: builds the explicit
/// constraint graph (one edge star per transaction) and BFS-labels its
/// connected components. Shares no traversal code with cluster_bsq.
Clustering oracle_cluster(const Corpus& corpus);

struct PartitionDiff {
    bool equal = false;
    std::uint64_t splits = 0;  // clusters of a spanning >= 2 clusters of b
    std::uint64_t merges = 0;  // clusters of b spanning >= 2 clusters of a

    bool operator==(const PartitionDiff&) const = default;
};

/// Throws UniverseMismatch when the two clusterings cover different address
/// sets. equal holds exactly when both partitions coincide.
PartitionDiff compare_partitions(const Clustering& a, const Clustering& b);

struct TruthScore {
    std::uint64_t false_positive_clusters = 0;  // clusters spanning >= 2 participants
    std::uint64_t false_negative_pairs = 0;     // same-owner address pairs left unclustered

    bool operator==(const TruthScore&) const = default;
};

/// Scores a clustering against the generator's truth. Throws UniverseMismatch
/// when the clustering contains an address the truth does not own.
TruthScore score_against_truth(const Clustering& clustering, const GroundTruth& truth);

/// Single JSON document with participants, ledger, and injected events;
/// parse . serialize is the identity.
std::string serialize_ground_truth(const GroundTruth& truth);
GroundTruth parse_ground_truth(std::string_view bytes);

}  // namespace bsq
