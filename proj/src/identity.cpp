#include "bsqdao/identity.hpp"

#include <algorithm>
#include <cctype>

#include "bsqdao/csv.hpp"
#include "bsqdao/disjoint_set.hpp"
#include "bsqdao/errors.hpp"

namespace bsq {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Exactly one insertion, deletion, or substitution apart.
bool one_edit_apart(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (b.size() - a.size() > 1) return false;
    if (a.size() == b.size()) {
        std::size_t diff = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i] && ++diff > 1) return false;
        return diff == 1;
    }
    std::size_t i = 0, j = 0;
    bool skipped = false;
    while (i < a.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (!skipped) {
            skipped = true;
            ++j;
        } else {
            return false;
        }
    }
    return true;
}

void recompute_derived(ClusterTagging& t) {
    t.conflicts.clear();
    t.shared.clear();
    std::map<std::string, std::vector<ClusterId>> by_tag;
    for (const auto& [cluster, tags] : t.tags) {
        if (tags.size() >= 2) t.conflicts.push_back(cluster);
        for (const auto& [tag, _] : tags) by_tag[tag].push_back(cluster);
    }
    for (auto& [tag, clusters] : by_tag)
        if (clusters.size() >= 2) t.shared.emplace(tag, std::move(clusters));
}

}  // namespace

std::string_view role_name(Role r) {
    switch (r) {
        case Role::PROPOSER: return "PROPOSER";
        case Role::GENERATOR: return "GENERATOR";
        case Role::USER: return "USER";
    }
    return "USER";
}

NormalizedTag normalize_tag(std::string_view raw) {
    std::string canonical;
    canonical.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            pending_space = !canonical.empty();
            continue;
        }
        if (pending_space) {
            canonical.push_back(' ');
            pending_space = false;
        }
        canonical.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (canonical.empty()) throw EmptyTag("tag is empty after trimming");
    return {std::move(canonical), {std::string(raw)}};
}

std::vector<TagRecord> apply_aliases(
    std::vector<TagRecord> records, const std::map<std::string, std::string>& variant_to_canonical) {
    for (auto& r : records) {
        auto it = variant_to_canonical.find(r.tag);
        if (it != variant_to_canonical.end()) r.tag = it->second;
    }
    return records;
}

std::vector<TagRecord> map_genesis_spreadsheet(const std::vector<GenesisEntry>& entries,
                                               const Transaction& genesis) {
    if (genesis.tx_type != TxType::GENESIS)
        throw ValidationError("genesis spreadsheet mapped onto a non-GENESIS transaction");
    if (entries.size() != genesis.outputs.size())
        throw LengthMismatch("spreadsheet has " + std::to_string(entries.size()) +
                             " entries but the genesis transaction has " +
                             std::to_string(genesis.outputs.size()) + " outputs");
    std::vector<TagRecord> records;
    records.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        records.push_back({genesis.outputs[i].address, entries[i].tag, TagSource::GENESIS_MAPPING});
    return records;
}

ClusterTagging assign_tags(const Clustering& clustering, const std::vector<TagRecord>& records) {
    ClusterTagging out;
    for (const auto& r : records) {
        if (!clustering.contains(r.address)) {
            out.unknown_addresses.push_back(r);
            continue;
        }
        NormalizedTag tag = normalize_tag(r.tag);
        TagAttribution& attr = out.tags[clustering.cluster_of(r.address)][tag.canonical];
        attr.sources.insert(r.source);
        attr.raw_variants.insert(r.tag);
    }
    // Unknown addresses sorted so record order cannot leak into the result.
    std::sort(out.unknown_addresses.begin(), out.unknown_addresses.end(),
              [](const TagRecord& a, const TagRecord& b) {
                  return std::tie(a.address, a.tag, a.source) < std::tie(b.address, b.tag, b.source);
              });
    recompute_derived(out);
    return out;
}

MergeResult merge_by_shared_tags(const Clustering& clustering, const ClusterTagging& tagging) {
    DisjointSet dsu(static_cast<std::uint32_t>(clustering.cluster_count()));
    for (const auto& [tag, clusters] : tagging.shared) {
        std::uint32_t anchor = clustering.ordinal_of(clusters.front());
        for (const auto& c : clusters) dsu.unite(anchor, clustering.ordinal_of(c));
    }

    const auto& addrs = clustering.addresses();
    const auto& ords = clustering.ordinals();
    std::vector<std::uint32_t> labels(addrs.size());
    for (std::size_t i = 0; i < addrs.size(); ++i) labels[i] = dsu.find(ords[i]);

    MergeResult result{Clustering::from_labels(addrs, labels), {}};

    // Tag sets compose through the cluster mapping: the merged cluster of any
    // old member address carries the union of the old clusters' attributions.
    for (const auto& [cluster, tags] : tagging.tags) {
        const ClusterId& merged = result.clustering.cluster_of(cluster);
        for (const auto& [tag, attr] : tags) {
            TagAttribution& dest = result.tagging.tags[merged][tag];
            dest.sources.insert(attr.sources.begin(), attr.sources.end());
            dest.raw_variants.insert(attr.raw_variants.begin(), attr.raw_variants.end());
        }
    }
    result.tagging.unknown_addresses = tagging.unknown_addresses;
    recompute_derived(result.tagging);
    return result;
}

std::map<ClusterId, Role> assign_roles(const Clustering& clustering, const Corpus& corpus,
                                       const std::set<TxType>& proposer_types) {
    if (proposer_types.empty())
        throw InfeasibleConfig("assign_roles requires at least one proposer type");

    std::vector<Role> by_ordinal(clustering.cluster_count(), Role::USER);
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        bool proposer = proposer_types.contains(tx.tx_type);
        bool generator = tx.tx_type == TxType::GENESIS;
        if (!proposer && !generator) continue;
        for (const auto& out : tx.outputs) {
            Role& role = by_ordinal[clustering.ordinal_of(out.address)];
            if (proposer)
                role = Role::PROPOSER;
            else if (role != Role::PROPOSER)
                role = Role::GENERATOR;
        }
    }

    std::map<ClusterId, Role> roles;
    for (std::uint32_t ord = 0; ord < clustering.cluster_count(); ++ord)
        roles.emplace(clustering.cluster_ids()[ord], by_ordinal[ord]);
    return roles;
}

std::vector<std::pair<std::string, std::string>> edit_distance_one_pairs(
    const ClusterTagging& tagging) {
    std::set<std::string> canon;
    for (const auto& [cluster, tags] : tagging.tags)
        for (const auto& [tag, _] : tags) canon.insert(tag);

    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto i = canon.begin(); i != canon.end(); ++i)
        for (auto j = std::next(i); j != canon.end(); ++j)
            if (one_edit_apart(*i, *j)) pairs.emplace_back(*i, *j);
    return pairs;
}

std::string clusters_csv(const Clustering& clustering) {
    std::vector<std::vector<std::string>> rows;
    for (auto& [address, cluster] : clustering.rows_sorted())
        rows.push_back({std::move(address), std::move(cluster)});
    return write_table(rows, {"address", "cluster_id"});
}

std::string tagging_csv(const ClusterTagging& tagging) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [cluster, tags] : tagging.tags)
        for (const auto& [tag, attr] : tags)
            for (const auto& source : attr.sources)
                rows.push_back({cluster, tag, std::string(tag_source_name(source))});
    return write_table(rows, {"cluster_id", "tag", "source"});
}

std::string conflicts_csv(const ClusterTagging& tagging) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& cluster : tagging.conflicts)
        for (const auto& [tag, _] : tagging.tags.at(cluster)) rows.push_back({cluster, tag});
    return write_table(rows, {"cluster_id", "tag"});
}

std::string shared_csv(const ClusterTagging& tagging) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [tag, clusters] : tagging.shared)
        for (const auto& cluster : clusters) rows.push_back({tag, cluster});
    return write_table(rows, {"tag", "cluster_id"});
}

std::string roles_csv(const std::map<ClusterId, Role>& roles) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [cluster, role] : roles)
        rows.push_back({cluster, std::string(role_name(role))});
    return write_table(rows, {"cluster_id", "role"});
}

std::string review_csv(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [a, b] : pairs) rows.push_back({a, b});
    return write_table(rows, {"tag_a", "tag_b"});
}

}  // namespace bsq
