#include "bsqdao/identity.hpp"

#include <algorithm>
#include <random>

#include "bsqdao/cluster.hpp"
#include "bsqdao/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bsq;
using namespace bsq::testutil;

TEST_CASE("normalize_tag trims, folds case, collapses whitespace") {
    CHECK(normalize_tag(" Alice ").canonical == "alice");
    CHECK(normalize_tag("alice").canonical == "alice");
    CHECK(normalize_tag("ALICE").canonical == "alice");
    CHECK(normalize_tag("Bob\t  Smith").canonical == "bob smith");
    CHECK(normalize_tag("\n x \n").canonical == "x");
    CHECK(normalize_tag("Alice").raw_variants == std::set<std::string>{"Alice"});

    // Idempotence.
    for (const char* raw : {" Alice ", "Bob\t Smith", "x"}) {
        auto once = normalize_tag(raw);
        CHECK(normalize_tag(once.canonical).canonical == once.canonical);
    }

    CHECK_THROWS_AS(normalize_tag("   "), EmptyTag);
    CHECK_THROWS_AS(normalize_tag(""), EmptyTag);
}

TEST_CASE("map_genesis_spreadsheet aligns entries with outputs by index") {
    auto genesis = make_tx(tid(1), 1, TxType::GENESIS, {},
                           {{"g0", 60, 100, true}, {"g1", 60, 200, true}, {"g2", 60, 300, true}});

    CHECK(map_genesis_spreadsheet({}, make_tx(tid(2), 1, TxType::GENESIS, {}, {})).empty());

    auto records = map_genesis_spreadsheet({{"zed", "p0"}, {"amy", "p1"}, {"kim", "p2"}}, genesis);
    REQUIRE(records.size() == 3);
    CHECK(records[0] == TagRecord{"g0", "zed", TagSource::GENESIS_MAPPING});
    CHECK(records[1] == TagRecord{"g1", "amy", TagSource::GENESIS_MAPPING});
    CHECK(records[2] == TagRecord{"g2", "kim", TagSource::GENESIS_MAPPING});

    CHECK_THROWS_AS(map_genesis_spreadsheet({{"zed", "p0"}}, genesis), LengthMismatch);
    auto fee = make_tx(tid(3), 5, TxType::TRADE_FEE, {}, {{"x", 1, 0}});
    CHECK_THROWS_AS(map_genesis_spreadsheet({{"zed", "p0"}}, fee), ValidationError);
}

TEST_CASE("assign_tags with no records yields an empty tagging") {
    Clustering c = Clustering::from_groups({{"a", "b"}});
    ClusterTagging t = assign_tags(c, {});
    CHECK(t.tags.empty());
    CHECK(t.conflicts.empty());
    CHECK(t.shared.empty());
}

TEST_CASE("assign_tags folds case variants into one tag") {
    Clustering c = Clustering::from_groups({{"a1", "a2"}});
    ClusterTagging t = assign_tags(c, {{"a1", "Bob", TagSource::GITHUB_ISSUE},
                                       {"a2", "bob", TagSource::MANUAL}});
    REQUIRE(t.tags.count("a1") == 1);
    REQUIRE(t.tags.at("a1").size() == 1);
    const TagAttribution& attr = t.tags.at("a1").at("bob");
    CHECK(attr.raw_variants == std::set<std::string>{"Bob", "bob"});
    CHECK(attr.sources == std::set<TagSource>{TagSource::GITHUB_ISSUE, TagSource::MANUAL});
    CHECK(t.conflicts.empty());
}

TEST_CASE("distinct tags on one cluster are a conflict") {
    Clustering c = Clustering::from_groups({{"a1", "a2"}, {"b1"}});
    ClusterTagging t = assign_tags(c, {{"a1", "alice", TagSource::GITHUB_ISSUE},
                                       {"a2", "anna", TagSource::MANUAL},
                                       {"b1", "bob", TagSource::MANUAL}});
    CHECK(t.conflicts == std::vector<ClusterId>{"a1"});
    CHECK(t.shared.empty());
}

TEST_CASE("one tag on two clusters is shared") {
    Clustering c = Clustering::from_groups({{"a"}, {"b"}, {"z"}});
    ClusterTagging t = assign_tags(c, {{"a", "carol", TagSource::MANUAL},
                                       {"b", "Carol", TagSource::GITHUB_ISSUE}});
    REQUIRE(t.shared.size() == 1);
    CHECK(t.shared.at("carol") == std::vector<ClusterId>{"a", "b"});
}

TEST_CASE("unknown tag addresses are reported, not fatal") {
    Clustering c = Clustering::from_groups({{"a"}});
    ClusterTagging t = assign_tags(c, {{"ghost", "gary", TagSource::MANUAL},
                                       {"a", "alice", TagSource::MANUAL}});
    REQUIRE(t.unknown_addresses.size() == 1);
    CHECK(t.unknown_addresses[0].address == "ghost");
    CHECK(t.tags.size() == 1);
}

TEST_CASE("assign_tags is independent of record order") {
    Clustering c = Clustering::from_groups({{"a1", "a2"}, {"b1"}, {"c1"}});
    std::vector<TagRecord> records = {
        {"a1", "alice", TagSource::GITHUB_ISSUE},
        {"a2", "Anna", TagSource::MANUAL},
        {"b1", "alice", TagSource::PRELAUNCH_SPREADSHEET},
        {"c1", "carl", TagSource::MANUAL},
        {"ghost", "gary", TagSource::MANUAL},
    };
    ClusterTagging reference = assign_tags(c, records);
    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(records.begin(), records.end(), rng);
        CHECK(assign_tags(c, records) == reference);
    }
}

TEST_CASE("aliases rewrite raw tags before normalization") {
    auto records = apply_aliases({{"a", "alcie", TagSource::MANUAL}, {"b", "bob", TagSource::MANUAL}},
                                 {{"alcie", "alice"}});
    CHECK(records[0].tag == "alice");
    CHECK(records[1].tag == "bob");
}

TEST_CASE("merge_by_shared_tags with no shared tags is the identity") {
    Clustering c = Clustering::from_groups({{"a"}, {"b"}});
    ClusterTagging t = assign_tags(c, {{"a", "alice", TagSource::MANUAL},
                                       {"b", "bob", TagSource::MANUAL}});
    MergeResult m = merge_by_shared_tags(c, t);
    CHECK(m.clustering == c);
    CHECK(m.tagging == t);
}

TEST_CASE("a tag on two clusters reduces the count by one") {
    Clustering c = Clustering::from_groups({{"a"}, {"b"}, {"z"}});
    ClusterTagging t = assign_tags(c, {{"a", "carol", TagSource::MANUAL},
                                       {"b", "carol", TagSource::MANUAL}});
    MergeResult m = merge_by_shared_tags(c, t);
    CHECK(m.clustering.cluster_count() == 2);
    CHECK(m.clustering.cluster_of("a") == m.clustering.cluster_of("b"));
    CHECK(m.clustering.cluster_of("z") == "z");
    CHECK(m.tagging.shared.empty());
}

TEST_CASE("shared-tag merging closes transitively") {
    // alice spans c1+c2, bob spans c2+c3: all three become one cluster.
    Clustering c = Clustering::from_groups({{"a"}, {"b"}, {"c"}, {"d"}});
    ClusterTagging t = assign_tags(c, {{"a", "alice", TagSource::MANUAL},
                                       {"b", "alice", TagSource::MANUAL},
                                       {"b", "bob", TagSource::MANUAL},
                                       {"c", "bob", TagSource::MANUAL}});
    MergeResult m = merge_by_shared_tags(c, t);
    CHECK(m.clustering.cluster_count() == 2);
    CHECK(m.clustering.cluster_of("a") == m.clustering.cluster_of("c"));
    CHECK(m.tagging.shared.empty());
    // The merged cluster keeps both tags and is therefore a conflict.
    CHECK(m.tagging.conflicts == std::vector<ClusterId>{"a"});
}

TEST_CASE("merge decreases the cluster count by the shared-tag formula") {
    Clustering c = Clustering::from_groups({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}, {"f"}});
    // carol on 3 clusters (−2), dave on 2 disjoint clusters (−1).
    ClusterTagging t = assign_tags(c, {{"a", "carol", TagSource::MANUAL},
                                       {"b", "carol", TagSource::MANUAL},
                                       {"c", "carol", TagSource::MANUAL},
                                       {"d", "dave", TagSource::MANUAL},
                                       {"e", "dave", TagSource::MANUAL}});
    std::size_t reduction = 0;
    for (const auto& [tag, clusters] : t.shared) reduction += clusters.size() - 1;
    MergeResult m = merge_by_shared_tags(c, t);
    CHECK(m.clustering.cluster_count() == c.cluster_count() - reduction);
    CHECK(m.clustering.cluster_count() == 3);
}

TEST_CASE("merge never increases the cluster count") {
    std::mt19937 rng(11);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + static_cast<int>(rng() % 12);
        std::vector<std::vector<Address>> groups;
        for (int i = 0; i < n; ++i) groups.push_back({"a" + std::to_string(i)});
        Clustering c = Clustering::from_groups(groups);
        std::vector<TagRecord> records;
        const char* names[] = {"u", "v", "w"};
        for (int i = 0; i < n; ++i)
            if (rng() % 2)
                records.push_back({"a" + std::to_string(i), names[rng() % 3], TagSource::MANUAL});
        ClusterTagging t = assign_tags(c, records);
        MergeResult m = merge_by_shared_tags(c, t);
        CHECK(m.clustering.cluster_count() <= c.cluster_count());
        CHECK(m.tagging.shared.empty());
    }
}

TEST_CASE("roles follow proposer > generator > user precedence") {
    std::vector<Transaction> txs = {
        make_tx(tid(1), 1, TxType::GENESIS, {}, {{"g0", 60, 1000, true}, {"g1", 60, 500, true}}),
        // g0's owner later makes a proposal from the same wallet.
        make_tx(tid(2), 5, TxType::PROPOSAL, {{tid(1), 0, "g0", 60, 1000}}, {{"p1", 50, 990}}),
        // g1's owner only pays a trade fee.
        make_tx(tid(3), 6, TxType::TRADE_FEE, {{tid(1), 1, "g1", 60, 500}}, {{"u1", 50, 490}}),
        // An ordinary user with out-of-band funding pays a trade fee.
        make_tx(tid(4), 7, TxType::TRADE_FEE, {{tid(900), 0, "x1", 60, 0}}, {{"x2", 50, 0}}),
    };
    Corpus corpus = Corpus::build(txs);
    Clustering c = cluster_bsq(corpus);
    auto roles = assign_roles(c, corpus);

    CHECK(roles.at(c.cluster_of("g0")) == Role::PROPOSER);
    CHECK(roles.at(c.cluster_of("g1")) == Role::GENERATOR);
    CHECK(roles.at(c.cluster_of("x1")) == Role::USER);
    CHECK(roles.size() == c.cluster_count());

    std::size_t proposers = 0, generators = 0, users = 0;
    for (const auto& [_, r] : roles) {
        if (r == Role::PROPOSER) ++proposers;
        if (r == Role::GENERATOR) ++generators;
        if (r == Role::USER) ++users;
    }
    CHECK(proposers + generators + users == c.cluster_count());
}

TEST_CASE("proposer_types can widen the proposer rule") {
    std::vector<Transaction> txs = {
        make_tx(tid(1), 1, TxType::GENESIS, {}, {{"g0", 60, 1000, true}}),
        make_tx(tid(2), 5, TxType::COMPENSATION_REQUEST, {{tid(1), 0, "g0", 60, 1000}},
                {{"c1", 50, 998}, {"c2", 10, 5000, true}}),
    };
    Corpus corpus = Corpus::build(txs);
    Clustering c = cluster_bsq(corpus);

    auto narrow = assign_roles(c, corpus);
    CHECK(narrow.at(c.cluster_of("g0")) == Role::GENERATOR);

    auto wide = assign_roles(c, corpus, {TxType::PROPOSAL, TxType::COMPENSATION_REQUEST});
    CHECK(wide.at(c.cluster_of("g0")) == Role::PROPOSER);

    CHECK_THROWS_AS(assign_roles(c, corpus, {}), InfeasibleConfig);
}

TEST_CASE("edit-distance-one pairs are flagged for review only") {
    Clustering c = Clustering::from_groups({{"a"}, {"b"}, {"d"}});
    ClusterTagging t = assign_tags(c, {{"a", "alice", TagSource::MANUAL},
                                       {"b", "alcie", TagSource::MANUAL},
                                       {"d", "zed", TagSource::MANUAL}});
    auto pairs = edit_distance_one_pairs(t);
    // "alice"/"alcie" differ by two substitutions, so only check exact-1 pairs.
    CHECK(pairs.empty());

    ClusterTagging t2 = assign_tags(c, {{"a", "alice", TagSource::MANUAL},
                                        {"b", "allice", TagSource::MANUAL},
                                        {"d", "alise", TagSource::MANUAL}});
    auto pairs2 = edit_distance_one_pairs(t2);
    REQUIRE(pairs2.size() == 2);
    CHECK(pairs2[0] == std::pair<std::string, std::string>{"alice", "alise"});
    CHECK(pairs2[1] == std::pair<std::string, std::string>{"alice", "allice"});
}

TEST_CASE("identity CSV outputs are deterministic and ordered") {
    Clustering c = Clustering::from_groups({{"a1", "a2"}, {"b1"}});
    ClusterTagging t = assign_tags(c, {{"a1", "alice", TagSource::GITHUB_ISSUE},
                                       {"b1", "alice", TagSource::MANUAL},
                                       {"a2", "anna", TagSource::MANUAL}});
    auto roles = assign_roles(c, Corpus::build({}), kDefaultProposerTypes);

    CHECK(clusters_csv(c) == "address,cluster_id\na1,a1\na2,a1\nb1,b1\n");
    CHECK(tagging_csv(t) ==
          "cluster_id,tag,source\na1,alice,GITHUB_ISSUE\na1,anna,MANUAL\nb1,alice,MANUAL\n");
    CHECK(conflicts_csv(t) == "cluster_id,tag\na1,alice\na1,anna\n");
    CHECK(shared_csv(t) == "tag,cluster_id\nalice,a1\nalice,b1\n");
    CHECK(roles_csv(roles) == "cluster_id,role\na1,USER\nb1,USER\n");
    CHECK(review_csv({{"x", "y"}}) == "tag_a,tag_b\nx,y\n");
}
