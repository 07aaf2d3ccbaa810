#include "bsqdao/cluster.hpp"

#include <string_view>
#include <unordered_map>
#include <vector>

#include "bsqdao/disjoint_set.hpp"
#include "bsqdao/errors.hpp"

namespace bsq {

namespace {

// Dense interning of every address in the corpus. Views point into the
// corpus's transactions, which outlive the interner.
struct Interner {
    std::unordered_map<std::string_view, std::uint32_t> index;
    std::vector<std::string_view> by_index;

    std::uint32_t intern(std::string_view addr) {
        auto [it, inserted] = index.emplace(addr, static_cast<std::uint32_t>(by_index.size()));
        if (inserted) by_index.push_back(addr);
        return it->second;
    }
};

Interner intern_all(const Corpus& corpus) {
    Interner in;
    in.index.reserve(corpus.size() * 2);
    for (const auto& tx : corpus.transactions()) {
        for (const auto& i : tx.inputs) in.intern(i.address);
        for (const auto& o : tx.outputs) in.intern(o.address);
    }
    return in;
}

Clustering finish(const Interner& in, DisjointSet& dsu) {
    std::vector<Address> addresses;
    std::vector<std::uint32_t> labels;
    addresses.reserve(in.by_index.size());
    labels.reserve(in.by_index.size());
    for (std::uint32_t i = 0; i < in.by_index.size(); ++i) {
        addresses.emplace_back(in.by_index[i]);
        labels.push_back(dsu.find(i));
    }
    return Clustering::from_labels(std::move(addresses), labels);
}

}  // namespace

Clustering cluster_bsq(const Corpus& corpus) {
    Interner in = intern_all(corpus);
    DisjointSet dsu(static_cast<std::uint32_t>(in.by_index.size()));
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR || tx.tx_type == TxType::GENESIS) continue;
        std::uint32_t anchor = UINT32_MAX;
        auto join = [&](std::string_view addr) {
            std::uint32_t idx = in.intern(addr);
            if (anchor == UINT32_MAX)
                anchor = idx;
            else
                dsu.unite(anchor, idx);
        };
        for (const auto& i : tx.inputs) join(i.address);
        if (is_self_transfer(tx.tx_type)) {
            for (const auto& o : tx.outputs) join(o.address);
        } else {
            // TRANSFER: outputs[0] belongs to the recipient.
            for (const auto& o : tx.outputs)
                if (o.index != 0) join(o.address);
        }
    }
    return finish(in, dsu);
}

Clustering cluster_multi_input(const Corpus& corpus) {
    Interner in = intern_all(corpus);
    DisjointSet dsu(static_cast<std::uint32_t>(in.by_index.size()));
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        std::uint32_t anchor = UINT32_MAX;
        for (const auto& i : tx.inputs) {
            std::uint32_t idx = in.intern(i.address);
            if (anchor == UINT32_MAX)
                anchor = idx;
            else
                dsu.unite(anchor, idx);
        }
    }
    return finish(in, dsu);
}

Clustering merge_clusterings(const Clustering& a, const Clustering& b) {
    Interner in;
    for (const auto& addr : a.addresses()) in.intern(addr);
    for (const auto& addr : b.addresses()) in.intern(addr);

    DisjointSet dsu(static_cast<std::uint32_t>(in.by_index.size()));
    auto apply = [&](const Clustering& c) {
        // Union each cluster's members to its first-seen member.
        std::vector<std::uint32_t> anchor(c.cluster_count(), UINT32_MAX);
        const auto& addrs = c.addresses();
        const auto& ords = c.ordinals();
        for (std::size_t i = 0; i < addrs.size(); ++i) {
            std::uint32_t idx = in.intern(addrs[i]);
            if (anchor[ords[i]] == UINT32_MAX)
                anchor[ords[i]] = idx;
            else
                dsu.unite(anchor[ords[i]], idx);
        }
    };
    apply(a);
    apply(b);

    std::vector<Address> addresses;
    std::vector<std::uint32_t> labels;
    addresses.reserve(in.by_index.size());
    labels.reserve(in.by_index.size());
    for (std::uint32_t i = 0; i < in.by_index.size(); ++i) {
        addresses.emplace_back(in.by_index[i]);
        labels.push_back(dsu.find(i));
    }
    return Clustering::from_labels(std::move(addresses), labels);
}

const Address& recipient_of(const Transaction& tx) {
    if (tx.tx_type != TxType::TRANSFER)
        throw NotATransfer("recipient_of requires a TRANSFER transaction, got " +
                           std::string(tx_type_name(tx.tx_type)));
    if (tx.outputs.empty()) throw NoOutputs("TRANSFER transaction has no outputs: " + tx.txid);
    return tx.outputs[0].address;
}

}  // namespace bsq
