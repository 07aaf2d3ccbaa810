#include "bsqdao/reports.hpp"

#include <algorithm>
#include <charconv>

#include "bsqdao/csv.hpp"
#include "bsqdao/errors.hpp"
#include "json.hpp"

namespace bsq {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_pg(Role r) { return r == Role::PROPOSER || r == Role::GENERATOR; }

// Receipt totals per cluster ordinal over non-IRREGULAR outputs; the graph
// module's vertex metric and the transactor ranking both use this.
std::vector<BsqAmount> receipts_by_ordinal(const Clustering& clustering, const Corpus& corpus) {
    std::vector<BsqAmount> totals(clustering.cluster_count());
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        for (const auto& out : tx.outputs) totals[clustering.ordinal_of(out.address)] += out.bsq;
    }
    return totals;
}

std::string joined_tags(const std::set<std::string>& tags) {
    std::string out;
    for (const auto& t : tags) {
        if (!out.empty()) out.push_back('|');
        out += t;
    }
    return out;
}

}  // namespace

MarketBreakdown market_breakdown(const Clustering& clustering, const Corpus& corpus,
                                 const std::map<ClusterId, Role>& roles) {
    MarketBreakdown m;
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type != TxType::TRANSFER) continue;
        if (tx.inputs.empty() || tx.outputs.empty()) continue;  // invalid; validation reports it
        bool sender_pg = is_pg(roles.at(clustering.cluster_of(tx.inputs[0].address)));
        bool recipient_pg = is_pg(roles.at(clustering.cluster_of(tx.outputs[0].address)));
        if (sender_pg && recipient_pg)
            ++m.pg_to_pg;
        else if (sender_pg)
            ++m.pg_to_user;
        else if (recipient_pg)
            ++m.user_to_pg;
        else
            ++m.user_to_user;
    }
    if (m.total() > 0)
        m.insider_share =
            static_cast<double>(m.pg_to_user + m.pg_to_pg + m.user_to_pg) /
            static_cast<double>(m.total());
    return m;
}

SupplyStats supply_stats(const Corpus& corpus) {
    SupplyStats s;
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        s.minted += minted_amount(tx);
        s.burnt += burn_amount(tx);
    }
    s.circulating = s.minted.checked_sub(s.burnt);

    // Cross-check: circulating BSQ must sit in colored outputs no valid
    // transaction has spent. Outputs consumed only by IRREGULAR transactions
    // still count as unspent here, mirroring their exclusion everywhere else.
    BsqAmount unspent;
    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        for (const auto& out : tx.outputs) {
            if (out.bsq.is_zero()) continue;
            const std::string* spender = corpus.spender_of(tx.txid, out.index);
            if (spender && corpus.find(*spender)->tx_type != TxType::IRREGULAR) continue;
            unspent += out.bsq;
        }
    }
    if (unspent != s.circulating)
        throw ConservationViolation("circulating " + s.circulating.to_string() +
                                    " BSQ but unspent colored outputs hold " +
                                    unspent.to_string());
    return s;
}

std::vector<TransactorRecord> top_transactors(const Clustering& clustering, const Corpus& corpus,
                                              const std::map<ClusterId, Role>& roles,
                                              const ClusterTagging& tagging, std::size_t k) {
    std::vector<BsqAmount> totals = receipts_by_ordinal(clustering, corpus);

    std::vector<TransactorRecord> records;
    records.reserve(clustering.cluster_count());
    for (std::uint32_t ord = 0; ord < clustering.cluster_count(); ++ord) {
        TransactorRecord r;
        r.cluster = clustering.cluster_ids()[ord];
        r.total_received = totals[ord];
        r.role = roles.at(r.cluster);
        if (auto it = tagging.tags.find(r.cluster); it != tagging.tags.end())
            for (const auto& [tag, _] : it->second) r.tags.insert(tag);
        records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(), [](const TransactorRecord& a, const TransactorRecord& b) {
        if (a.total_received != b.total_received) return a.total_received > b.total_received;
        return a.cluster < b.cluster;
    });
    if (records.size() > k) records.resize(k);
    return records;
}

std::string format_double(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw Error("double formatting failed");
    return std::string(buf, p);
}

std::string market_csv(const MarketBreakdown& m) {
    return write_table({{std::to_string(m.pg_to_user), std::to_string(m.user_to_user),
                         std::to_string(m.pg_to_pg), std::to_string(m.user_to_pg),
                         std::to_string(m.total()), format_double(m.insider_share)}},
                       {"pg_to_user", "user_to_user", "pg_to_pg", "user_to_pg", "total_transfers",
                        "insider_share"});
}

std::string supply_csv(const SupplyStats& s) {
    return write_table(
        {{s.minted.to_string(), s.burnt.to_string(), s.circulating.to_string()}},
        {"minted", "burnt", "circulating"});
}

std::string top_csv(const std::vector<TransactorRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TransactorRecord& r = records[i];
        rows.push_back({std::to_string(i + 1), r.cluster, std::string(role_name(r.role)),
                        r.total_received.to_string(), joined_tags(r.tags)});
    }
    return write_table(rows, {"rank", "cluster_id", "role", "total_received", "tags"});
}

std::string market_json(const MarketBreakdown& m) {
    ordered_json j;
    j["pg_to_user"] = m.pg_to_user;
    j["user_to_user"] = m.user_to_user;
    j["pg_to_pg"] = m.pg_to_pg;
    j["user_to_pg"] = m.user_to_pg;
    j["total_transfers"] = m.total();
    j["insider_share"] = m.insider_share;
    return j.dump() + "\n";
}

std::string supply_json(const SupplyStats& s) {
    ordered_json j;
    j["minted"] = s.minted.to_string();
    j["burnt"] = s.burnt.to_string();
    j["circulating"] = s.circulating.to_string();
    return j.dump() + "\n";
}

std::string top_json(const std::vector<TransactorRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TransactorRecord& r = records[i];
        ordered_json j;
        j["rank"] = i + 1;
        j["cluster_id"] = r.cluster;
        j["role"] = std::string(role_name(r.role));
        j["total_received"] = r.total_received.to_string();
        j["tags"] = ordered_json::array();
        for (const auto& t : r.tags) j["tags"].push_back(t);
        arr.push_back(std::move(j));
    }
    return arr.dump() + "\n";
}

}  // namespace bsq
