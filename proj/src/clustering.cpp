#include "bsqdao/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "bsqdao/errors.hpp"

namespace bsq {

namespace {

struct Parts {
    std::vector<Address> addresses;
    std::vector<std::uint32_t> ordinals;
    std::vector<ClusterId> canonical_ids;
};

// A group's canonical id is its smallest member. Input pairs are sorted by
// address, so the first occurrence of each label is that minimum, and
// numbering groups by first occurrence makes canonical ids ascend with
// ordinals. Duplicate addresses must carry equal labels.
Parts canonicalize(std::vector<std::pair<Address, std::uint32_t>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Parts p;
    p.addresses.reserve(pairs.size());
    p.ordinals.reserve(pairs.size());

    std::uint32_t max_label = 0;
    for (const auto& [addr, label] : pairs) max_label = std::max(max_label, label);
    std::vector<std::uint32_t> ordinal_of_label(pairs.empty() ? 0 : max_label + 1, UINT32_MAX);

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto& [addr, label] = pairs[i];
        if (!p.addresses.empty() && p.addresses.back() == addr) {
            if (p.ordinals.back() != ordinal_of_label[label])
                throw InconsistentClustering("address assigned to two groups: " + addr);
            continue;
        }
        if (ordinal_of_label[label] == UINT32_MAX) {
            ordinal_of_label[label] = static_cast<std::uint32_t>(p.canonical_ids.size());
            p.canonical_ids.push_back(addr);
        }
        p.ordinals.push_back(ordinal_of_label[label]);
        p.addresses.push_back(std::move(addr));
    }
    return p;
}

}  // namespace

Clustering Clustering::from_groups(std::vector<std::vector<Address>> groups) {
    std::vector<std::pair<Address, std::uint32_t>> pairs;
    for (std::uint32_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw InconsistentClustering("empty cluster group");
        for (auto& a : groups[g]) pairs.emplace_back(std::move(a), g);
    }
    Parts p = canonicalize(std::move(pairs));
    return Clustering(std::move(p.addresses), std::move(p.ordinals), std::move(p.canonical_ids));
}

Clustering Clustering::from_labels(std::vector<Address> addresses,
                                   const std::vector<std::uint32_t>& labels) {
    if (addresses.size() != labels.size())
        throw InconsistentClustering("address/label length mismatch");
    std::vector<std::pair<Address, std::uint32_t>> pairs;
    pairs.reserve(addresses.size());
    for (std::size_t i = 0; i < addresses.size(); ++i)
        pairs.emplace_back(std::move(addresses[i]), labels[i]);
    Parts p = canonicalize(std::move(pairs));
    return Clustering(std::move(p.addresses), std::move(p.ordinals), std::move(p.canonical_ids));
}

bool Clustering::contains(std::string_view address) const {
    return std::binary_search(addresses_.begin(), addresses_.end(), address);
}

std::uint32_t Clustering::ordinal_of(std::string_view address) const {
    auto it = std::lower_bound(addresses_.begin(), addresses_.end(), address);
    if (it == addresses_.end() || *it != address)
        throw UnknownAddress("address not in clustering: " + std::string(address));
    return ordinal_[static_cast<std::size_t>(it - addresses_.begin())];
}

const ClusterId& Clustering::cluster_of(std::string_view address) const {
    return canonical_ids_[ordinal_of(address)];
}

std::vector<Address> Clustering::members(std::uint32_t ordinal) const {
    std::vector<Address> out;
    for (std::size_t i = 0; i < addresses_.size(); ++i)
        if (ordinal_[i] == ordinal) out.push_back(addresses_[i]);
    return out;
}

std::vector<std::pair<Address, ClusterId>> Clustering::rows_sorted() const {
    std::vector<std::pair<Address, ClusterId>> rows;
    rows.reserve(addresses_.size());
    for (std::size_t i = 0; i < addresses_.size(); ++i)
        rows.emplace_back(addresses_[i], canonical_ids_[ordinal_[i]]);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return rows;
}

}  // namespace bsq
