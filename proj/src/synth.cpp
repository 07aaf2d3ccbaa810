#include "bsqdao/synth.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "bsqdao/errors.hpp"
#include "bsqdao/rng.hpp"
#include "json.hpp"

namespace bsq {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxTxCount = 100'000'000;
constexpr std::int64_t kBaseGrant = 1'000'000;     // centi-BSQ granted per participant
constexpr std::int64_t kIssuanceAmount = 10'000;   // per accepted request
constexpr std::int64_t kWalletFloor = 2;           // no wallet ever drops below this
constexpr std::int64_t kFundingSats = 5'000'000;

std::string pad_number(std::uint64_t n, std::size_t width) {
    std::string digits = std::to_string(n);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return digits;
}

std::size_t digit_count(std::uint64_t n) {
    std::size_t d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d;
}

struct Utxo {
    std::string txid;
    std::uint64_t index = 0;
    Address address;
    BsqAmount bsq;
};

struct Participant {
    ParticipantId id;
    std::vector<Utxo> unspent;
    std::uint32_t next_address = 0;
    Address reuse_address;  // genesis funding address, recycled as change once
};

class Generator {
  public:
    explicit Generator(const SynthConfig& config)
        : cfg_(config),
          rng_(config.seed),
          mix_(config.type_mix.empty() ? default_type_mix() : config.type_mix) {}

    SynthResult run() {
        check_config();
        std::vector<TxType> schedule = build_schedule();
        setup_participants();
        emit_genesis();

        // Interleave wallet migrations evenly through the schedule.
        std::uint32_t next_migration = 0;
        auto migration_due = [&](std::uint64_t slot) {
            return next_migration < cfg_.migrations &&
                   (std::uint64_t(next_migration) + 1) * cfg_.tx_count / (cfg_.migrations + 1) <=
                       slot;
        };
        for (std::uint64_t slot = 0; slot < schedule.size(); ++slot) {
            while (migration_due(slot)) emit_migration(next_migration++);
            emit_slot(schedule[slot]);
        }
        while (next_migration < cfg_.migrations) emit_migration(next_migration++);
        inject_aliases();

        SynthResult result;
        result.corpus = Corpus::build(std::move(txs_));
        result.truth = std::move(truth_);
        result.tag_db = std::move(tag_db_);
        return result;
    }

  private:
    void check_config() {
        if (cfg_.participants == 0) throw InfeasibleConfig("at least one participant required");
        if (cfg_.participants > 10'000'000)
            throw InfeasibleConfig("participants beyond supported range");
        if (cfg_.tx_count > kMaxTxCount) throw InfeasibleConfig("tx_count beyond supported range");
        std::uint64_t total_weight = 0;
        for (const auto& [type, weight] : mix_) {
            if (weight == 0) continue;
            if (weight > 1'000'000'000) throw InfeasibleConfig("type weight beyond supported range");
            if (type == TxType::GENESIS || type == TxType::IRREGULAR)
                throw InfeasibleConfig(std::string("type mix cannot schedule ") +
                                       std::string(tx_type_name(type)));
            total_weight += weight;
        }
        if (cfg_.tx_count > 0 && total_weight == 0)
            throw InfeasibleConfig("type mix has no positive weight");
        bool transfers_scheduled = false;
        if (auto it = mix_.find(TxType::TRANSFER); it != mix_.end() && it->second > 0)
            transfers_scheduled = cfg_.tx_count > 0;
        if (transfers_scheduled && cfg_.participants < 2)
            throw InfeasibleConfig("transfers need at least two participants");
        if (cfg_.adversarial.coinjoin && cfg_.participants < 2)
            throw InfeasibleConfig("coinjoin needs at least two participants");
    }

    /// Largest-remainder apportionment of tx_count over the mix weights, then
    /// a seeded shuffle of the resulting type sequence.
    std::vector<TxType> build_schedule() {
        std::vector<std::pair<TxType, std::uint64_t>> weights;
        std::uint64_t total = 0;
        for (TxType t : kAllTxTypes) {
            auto it = mix_.find(t);
            if (it != mix_.end() && it->second > 0) {
                weights.emplace_back(t, it->second);
                total += it->second;
            }
        }
        std::vector<TxType> seq;
        seq.reserve(cfg_.tx_count);
        if (cfg_.tx_count == 0 || total == 0) return seq;

        std::vector<std::uint64_t> counts(weights.size());
        std::vector<std::size_t> order(weights.size());
        std::uint64_t assigned = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            counts[i] = cfg_.tx_count * weights[i].second / total;
            assigned += counts[i];
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            std::uint64_t rx = cfg_.tx_count * weights[x].second % total;
            std::uint64_t ry = cfg_.tx_count * weights[y].second % total;
            if (rx != ry) return rx > ry;
            return x < y;
        });
        for (std::size_t i = 0; assigned < cfg_.tx_count; ++i, ++assigned) ++counts[order[i]];

        for (std::size_t i = 0; i < weights.size(); ++i)
            seq.insert(seq.end(), counts[i], weights[i].first);
        for (std::size_t i = seq.size(); i > 1; --i)
            std::swap(seq[i - 1], seq[rng_.below(i)]);
        return seq;
    }

    void setup_participants() {
        pid_width_ = std::max<std::size_t>(2, digit_count(cfg_.participants - 1));
        participants_.resize(cfg_.participants);
        for (std::uint32_t i = 0; i < cfg_.participants; ++i)
            participants_[i].id = "P" + pad_number(i, pid_width_);
    }

    Address fresh_address(Participant& p) {
        Address a = p.id + "-a" + pad_number(p.next_address++, 4);
        truth_.participants[p.id].insert(a);
        return a;
    }

    /// The funding address re-enters circulation as the first change address
    /// of the funder's next self-transfer; everything else is single-use.
    Address change_address(Participant& p) {
        if (!p.reuse_address.empty()) {
            Address a = std::move(p.reuse_address);
            p.reuse_address.clear();
            return a;
        }
        return fresh_address(p);
    }

    std::string fresh_txid() {
        static constexpr char kHex[] = "0123456789abcdef";
        for (;;) {
            std::uint64_t words[4] = {rng_.next(), rng_.next(), rng_.next(), rng_.next()};
            if (!seen_txids_.insert(words[0]).second) continue;
            std::string id(64, '0');
            for (int w = 0; w < 4; ++w)
                for (int d = 0; d < 16; ++d)
                    id[w * 16 + d] = kHex[(words[w] >> (60 - 4 * d)) & 0xf];
            return id;
        }
    }

    std::int64_t balance(const Participant& p) const {
        std::int64_t total = 0;
        for (const Utxo& u : p.unspent) total += u.bsq.centi();
        return total;
    }

    static TagSource source_for(std::uint32_t n) {
        switch (n % 3) {
            case 0: return TagSource::PRELAUNCH_SPREADSHEET;
            case 1: return TagSource::GITHUB_ISSUE;
            default: return TagSource::MANUAL;
        }
    }

    std::string owner_name(std::uint32_t pid) const { return "owner" + pad_number(pid, pid_width_); }

    std::uint64_t next_height() {
        height_ += 1 + (rng_.chance(20) ? 1 : 0);
        return height_;
    }

    /// Consumes the wallet and opens the transaction with its whole balance.
    Transaction begin_tx(TxType type, Participant& p) {
        Transaction tx;
        tx.txid = fresh_txid();
        tx.height = next_height();
        tx.tx_type = type;
        for (Utxo& u : p.unspent)
            tx.inputs.push_back({std::move(u.txid), u.index, std::move(u.address),
                                 SatAmount(u.bsq.centi()), u.bsq});
        p.unspent.clear();
        return tx;
    }

    void add_output(Transaction& tx, Participant& owner, Address address, std::int64_t bsq,
                    bool issuance = false) {
        std::uint64_t index = tx.outputs.size();
        tx.outputs.push_back({index, address, SatAmount(bsq), BsqAmount(bsq), issuance});
        owner.unspent.push_back({tx.txid, index, std::move(address), BsqAmount(bsq)});
    }

    void emit_genesis() {
        height_ = 100;
        Transaction genesis;
        genesis.txid = fresh_txid();
        genesis.height = height_;
        genesis.tx_type = TxType::GENESIS;

        std::uint32_t funders =
            cfg_.adversarial.coinjoin ? std::min<std::uint32_t>(3, cfg_.participants) : 1;
        std::vector<ParticipantId> funder_ids;
        for (std::uint32_t f = 0; f < funders; ++f) {
            Participant& p = participants_[f];
            Address a = fresh_address(p);
            p.reuse_address = a;
            genesis.inputs.push_back({fresh_txid(), 0, a, SatAmount(kFundingSats), BsqAmount(0)});
            funder_ids.push_back(p.id);
        }

        std::int64_t grant =
            kBaseGrant + 100 * static_cast<std::int64_t>(cfg_.tx_count / cfg_.participants);
        for (std::uint32_t pid = 0; pid < cfg_.participants; ++pid) {
            Participant& p = participants_[pid];
            Address a = fresh_address(p);
            tag_anchor_.push_back(a);
            tag_db_.push_back({a, owner_name(pid), source_for(pid)});
            genesis.outputs.push_back({pid, a, SatAmount(grant), BsqAmount(grant), true});
            p.unspent.push_back({genesis.txid, pid, a, BsqAmount(grant)});
            truth_.ledger.push_back(
                {genesis.txid, TxType::GENESIS, "", p.id, BsqAmount(grant), BsqAmount(0),
                 BsqAmount(0), BsqAmount(grant)});
        }
        if (cfg_.adversarial.coinjoin)
            truth_.injected_events.push_back({"coinjoin", funder_ids, genesis.txid, {}});
        txs_.push_back(std::move(genesis));
    }

    void emit_slot(TxType type) {
        if (type == TxType::TRANSFER)
            emit_payment();
        else
            emit_self_transfer(type, pick_actor());
    }

    std::uint32_t pick_actor() { return static_cast<std::uint32_t>(rng_.below(cfg_.participants)); }

    std::uint32_t pick_sender() {
        std::uint32_t start = pick_actor();
        for (std::uint32_t i = 0; i < cfg_.participants; ++i) {
            std::uint32_t pid = (start + i) % cfg_.participants;
            if (balance(participants_[pid]) >= kWalletFloor + 2) return pid;
        }
        throw InfeasibleConfig("no participant can fund a transfer");
    }

    std::uint32_t pick_recipient(std::uint32_t sender) {
        std::uint32_t r = pick_actor();
        if (r == sender) r = (r + 1) % cfg_.participants;
        return r;
    }

    void emit_self_transfer(TxType type, std::uint32_t pid) {
        Participant& p = participants_[pid];
        std::int64_t funds = balance(p);
        std::int64_t burn = std::clamp<std::int64_t>(funds - kWalletFloor, 0, burn_draw(type));
        std::int64_t remainder = funds - burn;

        Transaction tx = begin_tx(type, p);
        bool split_change = remainder >= 4 && rng_.chance(25);
        if (split_change) {
            std::int64_t cut = 1 + static_cast<std::int64_t>(rng_.below(remainder / 2));
            add_output(tx, p, change_address(p), remainder - cut);
            add_output(tx, p, fresh_address(p), cut);
        } else {
            add_output(tx, p, change_address(p), remainder);
        }
        std::int64_t minted = 0;
        if (may_issue(type)) {
            minted = kIssuanceAmount;
            add_output(tx, p, fresh_address(p), minted, true);
        }
        truth_.ledger.push_back({tx.txid, type, p.id, p.id, BsqAmount(remainder + minted),
                                 BsqAmount(0), BsqAmount(burn), BsqAmount(minted)});
        txs_.push_back(std::move(tx));

        if (cfg_.adversarial.dummy_transfers) emit_wallet_hop(pid, "dummy_transfer");
    }

    std::int64_t burn_draw(TxType type) {
        switch (type) {
            case TxType::TRADE_FEE: return 5 + static_cast<std::int64_t>(rng_.below(96));
            case TxType::PROOF_OF_BURN: return 100 + static_cast<std::int64_t>(rng_.below(401));
            case TxType::ASSET_LISTING_FEE: return 50 + static_cast<std::int64_t>(rng_.below(151));
            default: return 2 + static_cast<std::int64_t>(rng_.below(49));
        }
    }

    void emit_payment() {
        std::uint32_t spid = pick_sender();
        std::uint32_t rpid = pick_recipient(spid);
        Participant& sender = participants_[spid];
        Participant& recipient = participants_[rpid];
        std::int64_t funds = balance(sender);

        std::int64_t desired = funds * static_cast<std::int64_t>(10 + rng_.below(21)) / 100;
        std::int64_t payment = std::clamp<std::int64_t>(desired, 1, funds - kWalletFloor);

        bool disguise = cfg_.adversarial.disguised_transfers &&
                        (!disguised_once_ || rng_.chance(50));
        if (disguise) {
            // Fee-shaped payment: the "change" goes to the recipient and a
            // token amount is burnt, so the tx looks like a self-transfer.
            disguised_once_ = true;
            std::int64_t burn =
                std::min<std::int64_t>(1 + static_cast<std::int64_t>(rng_.below(5)),
                                       funds - payment - 1);
            std::int64_t change = funds - payment - burn;
            Transaction tx = begin_tx(TxType::TRADE_FEE, sender);
            add_output(tx, recipient, fresh_address(recipient), payment);
            add_output(tx, sender, change_address(sender), change);
            truth_.ledger.push_back({tx.txid, TxType::TRADE_FEE, sender.id, recipient.id,
                                     BsqAmount(payment), BsqAmount(change), BsqAmount(burn),
                                     BsqAmount(0)});
            truth_.injected_events.push_back(
                {"disguised_transfer", {sender.id, recipient.id}, tx.txid, {}});
            txs_.push_back(std::move(tx));
            return;
        }

        std::int64_t change = funds - payment;
        Transaction tx = begin_tx(TxType::TRANSFER, sender);
        add_output(tx, recipient, fresh_address(recipient), payment);
        add_output(tx, sender, change_address(sender), change);
        truth_.ledger.push_back({tx.txid, TxType::TRANSFER, sender.id, recipient.id,
                                 BsqAmount(payment), BsqAmount(change), BsqAmount(0),
                                 BsqAmount(0)});
        txs_.push_back(std::move(tx));
    }

    /// Whole balance to one fresh address via a TRANSFER, abandoning every
    /// address used so far.
    std::string emit_wallet_hop(std::uint32_t pid, const char* kind) {
        Participant& p = participants_[pid];
        std::int64_t funds = balance(p);
        Transaction tx = begin_tx(TxType::TRANSFER, p);
        add_output(tx, p, fresh_address(p), funds);
        truth_.ledger.push_back({tx.txid, TxType::TRANSFER, p.id, p.id, BsqAmount(funds),
                                 BsqAmount(0), BsqAmount(0), BsqAmount(0)});
        truth_.injected_events.push_back({kind, {p.id}, tx.txid, {}});
        std::string txid = tx.txid;
        txs_.push_back(std::move(tx));
        return txid;
    }

    void emit_migration(std::uint32_t n) {
        std::uint32_t pid = n % cfg_.participants;
        std::string txid = emit_wallet_hop(pid, "migration");
        // The fresh wallet's entry address carries the owner's tag so the old
        // and new wallets share it.
        const Participant& p = participants_[pid];
        tag_db_.push_back({p.unspent.back().address, owner_name(pid), source_for(pid + 1)});
        (void)txid;
    }

    void inject_aliases() {
        for (std::uint32_t c = 0; c < cfg_.alias_conflicts; ++c) {
            std::uint32_t pid = c % cfg_.participants;
            std::string pseudonym = "alias" + std::to_string(c);
            tag_db_.push_back({tag_anchor_[pid], pseudonym, source_for(pid + 2)});
            truth_.injected_events.push_back(
                {"alias_conflict", {participants_[pid].id}, "", {owner_name(pid), pseudonym}});
        }
    }

    SynthConfig cfg_;
    SplitMix64 rng_;
    std::map<TxType, std::uint64_t> mix_;
    std::vector<Participant> participants_;
    std::vector<Address> tag_anchor_;  // genesis grant address per participant
    std::vector<Transaction> txs_;
    GroundTruth truth_;
    std::vector<TagRecord> tag_db_;
    std::unordered_set<std::uint64_t> seen_txids_;  // leading words; collisions re-draw
    std::size_t pid_width_ = 2;
    std::uint64_t height_ = 100;
    bool disguised_once_ = false;
};

/// Clusters of `of` whose members land in >= 2 distinct clusters of `other`.
std::uint64_t count_spanning(const std::vector<std::uint32_t>& of,
                             const std::vector<std::uint32_t>& other, std::size_t of_count) {
    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> first(of_count, kUnset);
    std::vector<bool> counted(of_count, false);
    std::uint64_t spanning = 0;
    for (std::size_t i = 0; i < of.size(); ++i) {
        std::uint32_t c = of[i];
        if (first[c] == kUnset) {
            first[c] = other[i];
        } else if (first[c] != other[i] && !counted[c]) {
            counted[c] = true;
            ++spanning;
        }
    }
    return spanning;
}

}  // namespace

std::map<TxType, std::uint64_t> default_type_mix() {
    // Shaped like the live BSQ ledger's type distribution: trade fees
    // dominate, transfers are a distant second, governance types trail.
    return {
        {TxType::TRADE_FEE, 27285},
        {TxType::TRANSFER, 2095},
        {TxType::COMPENSATION_REQUEST, 269},
        {TxType::BLIND_VOTE, 239},
        {TxType::VOTE_REVEAL, 236},
        {TxType::PROPOSAL, 87},
        {TxType::LOCKUP, 39},
        {TxType::ASSET_LISTING_FEE, 22},
        {TxType::PROOF_OF_BURN, 22},
        {TxType::UNLOCK, 11},
        {TxType::REIMBURSEMENT_REQUEST, 5},
    };
}

std::map<Address, ParticipantId> owner_index(const GroundTruth& truth) {
    std::map<Address, ParticipantId> owners;
    for (const auto& [pid, addresses] : truth.participants)
        for (const Address& a : addresses)
            if (!owners.emplace(a, pid).second)
                throw ValidationError("ground truth address sets overlap at " + a);
    return owners;
}

SynthResult generate(const SynthConfig& config) { return Generator(config).run(); }

Clustering oracle_cluster(const Corpus& corpus) {
    std::map<Address, std::uint32_t> index;
    std::vector<Address> names;
    auto intern = [&](const Address& a) {
        auto [it, fresh] = index.try_emplace(a, static_cast<std::uint32_t>(names.size()));
        if (fresh) names.push_back(a);
        return it->second;
    };
    for (const Transaction& tx : corpus.transactions()) {
        for (const TxInput& in : tx.inputs) intern(in.address);
        for (const TxOutput& out : tx.outputs) intern(out.address);
    }

    std::vector<std::vector<std::uint32_t>> adjacency(names.size());
    for (const Transaction& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR || tx.tx_type == TxType::GENESIS) continue;
        std::vector<std::uint32_t> nodes;
        for (const TxInput& in : tx.inputs) nodes.push_back(index.at(in.address));
        for (const TxOutput& out : tx.outputs) {
            if (tx.tx_type == TxType::TRANSFER && out.index == 0) continue;
            nodes.push_back(index.at(out.address));
        }
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            adjacency[nodes[0]].push_back(nodes[i]);
            adjacency[nodes[i]].push_back(nodes[0]);
        }
    }

    std::vector<bool> visited(names.size(), false);
    std::vector<std::vector<Address>> groups;
    for (std::uint32_t start = 0; start < names.size(); ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        std::vector<Address> group;
        std::deque<std::uint32_t> frontier{start};
        while (!frontier.empty()) {
            std::uint32_t node = frontier.front();
            frontier.pop_front();
            group.push_back(names[node]);
            for (std::uint32_t next : adjacency[node]) {
                if (!visited[next]) {
                    visited[next] = true;
                    frontier.push_back(next);
                }
            }
        }
        groups.push_back(std::move(group));
    }
    return Clustering::from_groups(groups);
}

PartitionDiff compare_partitions(const Clustering& a, const Clustering& b) {
    if (a.addresses() != b.addresses())
        throw UniverseMismatch("clusterings cover different address sets");
    PartitionDiff diff;
    diff.splits = count_spanning(a.ordinals(), b.ordinals(), a.cluster_count());
    diff.merges = count_spanning(b.ordinals(), a.ordinals(), b.cluster_count());
    diff.equal = diff.splits == 0 && diff.merges == 0;
    return diff;
}

TruthScore score_against_truth(const Clustering& clustering, const GroundTruth& truth) {
    std::map<Address, ParticipantId> owners = owner_index(truth);
    std::map<ParticipantId, std::uint32_t> participant_ordinal;
    for (const auto& [pid, _] : truth.participants)
        participant_ordinal.emplace(pid, static_cast<std::uint32_t>(participant_ordinal.size()));

    const auto& addresses = clustering.addresses();
    std::vector<std::uint32_t> owner_ordinals(addresses.size());
    for (std::size_t i = 0; i < addresses.size(); ++i) {
        auto it = owners.find(addresses[i]);
        if (it == owners.end())
            throw UniverseMismatch("address not in ground truth: " + addresses[i]);
        owner_ordinals[i] = participant_ordinal.at(it->second);
    }

    TruthScore score;
    score.false_positive_clusters =
        count_spanning(clustering.ordinals(), owner_ordinals, clustering.cluster_count());

    // Same-owner pairs minus the pairs already co-clustered.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(addresses.size());
    for (std::size_t i = 0; i < addresses.size(); ++i)
        pairs[i] = {owner_ordinals[i], clustering.ordinals()[i]};
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t owner_end = i;
        while (owner_end < pairs.size() && pairs[owner_end].first == pairs[i].first) ++owner_end;
        std::uint64_t n = owner_end - i;
        std::uint64_t within = 0;
        for (std::size_t j = i; j < owner_end;) {
            std::size_t cluster_end = j;
            while (cluster_end < owner_end && pairs[cluster_end].second == pairs[j].second)
                ++cluster_end;
            std::uint64_t c = cluster_end - j;
            within += c * (c - 1) / 2;
            j = cluster_end;
        }
        score.false_negative_pairs += n * (n - 1) / 2 - within;
        i = owner_end;
    }
    return score;
}

namespace {

ordered_json ledger_entry_json(const LedgerEntry& e) {
    ordered_json j;
    j["txid"] = e.txid;
    j["type"] = std::string(tx_type_name(e.tx_type));
    j["sender"] = e.sender;
    j["recipient"] = e.recipient;
    j["amount"] = e.amount.to_string();
    j["change"] = e.change.to_string();
    j["burned"] = e.burned.to_string();
    j["minted"] = e.minted.to_string();
    return j;
}

BsqAmount parse_amount_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ParseError(0, std::string("ground truth entry missing ") + key);
    auto parsed = BsqAmount::parse_decimal(j.at(key).get<std::string>());
    if (!parsed) throw ParseError(0, std::string("bad amount in ground truth field ") + key);
    return *parsed;
}

}  // namespace

std::string serialize_ground_truth(const GroundTruth& truth) {
    ordered_json j;
    j["participants"] = ordered_json::object();
    for (const auto& [pid, addresses] : truth.participants) {
        ordered_json list = ordered_json::array();
        for (const Address& a : addresses) list.push_back(a);
        j["participants"][pid] = std::move(list);
    }
    j["ledger"] = ordered_json::array();
    for (const LedgerEntry& e : truth.ledger) j["ledger"].push_back(ledger_entry_json(e));
    j["injected_events"] = ordered_json::array();
    for (const InjectedEvent& e : truth.injected_events) {
        ordered_json ev;
        ev["kind"] = e.kind;
        ev["participants"] = e.participants;
        if (!e.txid.empty()) ev["txid"] = e.txid;
        if (!e.tags.empty()) ev["tags"] = e.tags;
        j["injected_events"].push_back(std::move(ev));
    }
    return j.dump() + "\n";
}

GroundTruth parse_ground_truth(std::string_view bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("ground truth is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("participants") || !j.contains("ledger") ||
        !j.contains("injected_events"))
        throw ParseError(0, "ground truth must hold participants, ledger, injected_events");

    GroundTruth truth;
    try {
        for (const auto& [pid, list] : j.at("participants").items()) {
            std::set<Address>& addresses = truth.participants[pid];
            for (const auto& a : list) addresses.insert(a.get<std::string>());
        }
        for (const auto& entry : j.at("ledger")) {
            LedgerEntry e;
            e.txid = entry.at("txid").get<std::string>();
            auto type = parse_tx_type(entry.at("type").get<std::string>());
            if (!type) throw ParseError(0, "unknown tx type in ground truth ledger");
            e.tx_type = *type;
            e.sender = entry.at("sender").get<std::string>();
            e.recipient = entry.at("recipient").get<std::string>();
            e.amount = parse_amount_field(entry, "amount");
            e.change = parse_amount_field(entry, "change");
            e.burned = parse_amount_field(entry, "burned");
            e.minted = parse_amount_field(entry, "minted");
            truth.ledger.push_back(std::move(e));
        }
        for (const auto& entry : j.at("injected_events")) {
            InjectedEvent e;
            e.kind = entry.at("kind").get<std::string>();
            for (const auto& p : entry.at("participants"))
                e.participants.push_back(p.get<std::string>());
            if (entry.contains("txid")) e.txid = entry.at("txid").get<std::string>();
            if (entry.contains("tags"))
                for (const auto& t : entry.at("tags")) e.tags.push_back(t.get<std::string>());
            truth.injected_events.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed ground truth: ") + e.what());
    }
    return truth;
}

}  // namespace bsq
