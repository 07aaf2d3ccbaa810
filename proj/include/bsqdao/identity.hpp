#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bsqdao/clustering.hpp"
#include "bsqdao/corpus.hpp"
#include "bsqdao/ingest.hpp"

namespace bsq {

enum class Role : std::uint8_t { PROPOSER, GENERATOR, USER };

std::string_view role_name(Role r);

/// Canonical form of one raw tag plus the raw spellings that map to it.
struct NormalizedTag {
    std::string canonical;
    std::set<std::string> raw_variants;

    bool operator==(const NormalizedTag&) const = default;
};

/// Trims, collapses internal whitespace to single spaces, and lowercases
/// ASCII letters. Idempotent. Throws EmptyTag when nothing remains.
NormalizedTag normalize_tag(std::string_view raw);

/// Evidence attached to one (cluster, canonical tag) pair.
struct TagAttribution {
    std::set<TagSource> sources;
    std::set<std::string> raw_variants;

    bool operator==(const TagAttribution&) const = default;
};

struct ClusterTagging {
    std::map<ClusterId, std::map<std::string, TagAttribution>> tags;
    std::vector<ClusterId> conflicts;                      // >= 2 distinct tags
    std::map<std::string, std::vector<ClusterId>> shared;  // tag on >= 2 clusters
    std::vector<TagRecord> unknown_addresses;              // outside the clustering

    bool operator==(const ClusterTagging&) const = default;
};

/// Rewrites tags whose raw text matches a variant to its canonical label.
std::vector<TagRecord> apply_aliases(std::vector<TagRecord> records,
                                     const std::map<std::string, std::string>& variant_to_canonical);

/// Aligns the i-th spreadsheet entry with the i-th genesis output; records get
/// source GENESIS_MAPPING. Throws LengthMismatch when the counts differ and
/// ValidationError when the transaction is not a GENESIS.
std::vector<TagRecord> map_genesis_spreadsheet(const std::vector<GenesisEntry>& entries,
                                               const Transaction& genesis);

/// Propagates address-level tags to their clusters. Records whose address is
/// not in the clustering are reported, not fatal. Independent of record order.
ClusterTagging assign_tags(const Clustering& clustering, const std::vector<TagRecord>& records);

struct MergeResult {
    Clustering clustering;
    ClusterTagging tagging;
};

/// Unions clusters that share any canonical tag (transitively) and recomputes
/// the tagging; the result's shared set is empty.
MergeResult merge_by_shared_tags(const Clustering& clustering, const ClusterTagging& tagging);

inline const std::set<TxType> kDefaultProposerTypes = {TxType::PROPOSAL};

/// PROPOSER if the cluster holds an output address of a tx whose type is in
/// proposer_types, else GENERATOR if it holds a GENESIS output address, else
/// USER. Total over all clusters. Throws InfeasibleConfig on empty
/// proposer_types.
std::map<ClusterId, Role> assign_roles(const Clustering& clustering, const Corpus& corpus,
                                       const std::set<TxType>& proposer_types = kDefaultProposerTypes);

/// Unordered pairs of distinct canonical tags at edit distance exactly 1,
/// lexicographically sorted. Review material; never merged automatically.
std::vector<std::pair<std::string, std::string>> edit_distance_one_pairs(
    const ClusterTagging& tagging);

std::string clusters_csv(const Clustering& clustering);
std::string tagging_csv(const ClusterTagging& tagging);
std::string conflicts_csv(const ClusterTagging& tagging);
std::string shared_csv(const ClusterTagging& tagging);
std::string roles_csv(const std::map<ClusterId, Role>& roles);
std::string review_csv(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace bsq
