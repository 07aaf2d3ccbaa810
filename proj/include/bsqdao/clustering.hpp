#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsqdao/model.hpp"

namespace bsq {

/// Cluster identifier: the lexicographically smallest member address.
using ClusterId = std::string;

/// An immutable partition of an address universe. Addresses are stored sorted;
/// each maps to a dense cluster ordinal, and ordinals are numbered in
/// ascending canonical-id order so equal partitions compare equal field-wise.
class Clustering {
  public:
    Clustering() = default;

    /// Builds from explicit member lists. Groups must be disjoint and
    /// non-empty; every address of the universe must appear exactly once.
    static Clustering from_groups(std::vector<std::vector<Address>> groups);

    /// Builds from a parallel (address, group label) assignment; label values
    /// are arbitrary and only equality matters.
    static Clustering from_labels(std::vector<Address> addresses,
                                  const std::vector<std::uint32_t>& labels);

    std::size_t address_count() const { return addresses_.size(); }
    std::size_t cluster_count() const { return canonical_ids_.size(); }

    /// Sorted distinct addresses of the universe.
    const std::vector<Address>& addresses() const { return addresses_; }

    /// Canonical ids indexed by cluster ordinal, ascending.
    const std::vector<ClusterId>& cluster_ids() const { return canonical_ids_; }

    /// Cluster ordinal per address, parallel to addresses().
    const std::vector<std::uint32_t>& ordinals() const { return ordinal_; }

    bool contains(std::string_view address) const;

    /// Cluster ordinal of an address. Throws UnknownAddress.
    std::uint32_t ordinal_of(std::string_view address) const;

    /// Canonical cluster id of an address. Throws UnknownAddress.
    const ClusterId& cluster_of(std::string_view address) const;

    /// Member addresses of a cluster ordinal, sorted.
    std::vector<Address> members(std::uint32_t ordinal) const;

    /// (address, cluster id) pairs sorted by cluster id then address.
    std::vector<std::pair<Address, ClusterId>> rows_sorted() const;

    bool operator==(const Clustering&) const = default;

  private:
    Clustering(std::vector<Address> addresses, std::vector<std::uint32_t> ordinals,
               std::vector<ClusterId> canonical_ids)
        : addresses_(std::move(addresses)),
          ordinal_(std::move(ordinals)),
          canonical_ids_(std::move(canonical_ids)) {}

    std::vector<Address> addresses_;           // sorted distinct universe
    std::vector<std::uint32_t> ordinal_;       // parallel to addresses_
    std::vector<ClusterId> canonical_ids_;     // indexed by ordinal, ascending
};

}  // namespace bsq
