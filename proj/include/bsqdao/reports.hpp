#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bsqdao/clustering.hpp"
#include "bsqdao/corpus.hpp"
#include "bsqdao/identity.hpp"

namespace bsq {

/// Transfer counts split by sender/recipient role group, where the
/// proposer+generator group is treated as the market's supply side.
struct MarketBreakdown {
    std::uint64_t pg_to_user = 0;
    std::uint64_t user_to_user = 0;
    std::uint64_t pg_to_pg = 0;
    std::uint64_t user_to_pg = 0;
    double insider_share = 0.0;  // transfers touching the PG side / total; 0 when empty

    std::uint64_t total() const { return pg_to_user + user_to_user + pg_to_pg + user_to_pg; }
    bool operator==(const MarketBreakdown&) const = default;
};

struct SupplyStats {
    BsqAmount minted;
    BsqAmount burnt;
    BsqAmount circulating;  // minted - burnt

    bool operator==(const SupplyStats&) const = default;
};

struct TransactorRecord {
    ClusterId cluster;
    BsqAmount total_received;
    Role role = Role::USER;
    std::set<std::string> tags;

    bool operator==(const TransactorRecord&) const = default;
};

/// Classifies every non-IRREGULAR TRANSFER by the roles of the sender cluster
/// (cluster of the inputs) and recipient cluster (cluster of outputs[0]).
MarketBreakdown market_breakdown(const Clustering& clustering, const Corpus& corpus,
                                 const std::map<ClusterId, Role>& roles);

/// minted = sum of issuance outputs, burnt = sum of per-tx burns, circulating
/// = minted - burnt, over non-IRREGULAR transactions. Cross-checked against
/// the sum of unspent colored outputs; throws ConservationViolation when the
/// two disagree.
SupplyStats supply_stats(const Corpus& corpus);

/// Top k clusters by BSQ received over all non-IRREGULAR outputs, descending,
/// ties broken by ascending ClusterId. Returns fewer when fewer clusters exist.
std::vector<TransactorRecord> top_transactors(const Clustering& clustering, const Corpus& corpus,
                                              const std::map<ClusterId, Role>& roles,
                                              const ClusterTagging& tagging, std::size_t k);

/// Shortest decimal text that round-trips the double exactly.
std::string format_double(double value);

std::string market_csv(const MarketBreakdown& m);
std::string supply_csv(const SupplyStats& s);
std::string top_csv(const std::vector<TransactorRecord>& records);

std::string market_json(const MarketBreakdown& m);
std::string supply_json(const SupplyStats& s);
std::string top_json(const std::vector<TransactorRecord>& records);

}  // namespace bsq
