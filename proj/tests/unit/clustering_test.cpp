#include "bsqdao/clustering.hpp"

#include "bsqdao/errors.hpp"
#include "doctest.h"

using namespace bsq;

TEST_CASE("from_groups canonicalizes to minimum member addresses") {
    Clustering c = Clustering::from_groups({{"m", "b", "z"}, {"q"}, {"a", "x"}});
    CHECK(c.address_count() == 6);
    CHECK(c.cluster_count() == 3);
    CHECK(c.cluster_of("m") == "b");
    CHECK(c.cluster_of("b") == "b");
    CHECK(c.cluster_of("z") == "b");
    CHECK(c.cluster_of("q") == "q");
    CHECK(c.cluster_of("a") == "a");
    CHECK(c.cluster_of("x") == "a");
    CHECK(c.cluster_ids() == std::vector<ClusterId>{"a", "b", "q"});
}

TEST_CASE("ordinals ascend with canonical ids") {
    Clustering c = Clustering::from_groups({{"z"}, {"a"}, {"m"}});
    CHECK(c.ordinal_of("a") == 0);
    CHECK(c.ordinal_of("m") == 1);
    CHECK(c.ordinal_of("z") == 2);
    CHECK(c.members(0) == std::vector<Address>{"a"});
}

TEST_CASE("equal partitions compare equal regardless of construction") {
    Clustering a = Clustering::from_groups({{"a", "b"}, {"c"}});
    Clustering b = Clustering::from_groups({{"c"}, {"b", "a"}});
    Clustering c = Clustering::from_labels({"c", "a", "b"}, {7, 3, 3});
    CHECK(a == b);
    CHECK(a == c);

    Clustering d = Clustering::from_groups({{"a"}, {"b"}, {"c"}});
    CHECK(a != d);
}

TEST_CASE("lookups reject unknown addresses") {
    Clustering c = Clustering::from_groups({{"a", "b"}});
    CHECK(c.contains("a"));
    CHECK(!c.contains("nope"));
    CHECK_THROWS_AS(c.cluster_of("nope"), UnknownAddress);
}

TEST_CASE("overlapping groups are rejected") {
    CHECK_THROWS_AS(Clustering::from_groups({{"a", "b"}, {"b", "c"}}),
                    InconsistentClustering);
    CHECK_THROWS_AS(Clustering::from_groups({{"a"}, {}}), InconsistentClustering);
    CHECK_THROWS_AS(Clustering::from_labels({"a", "a"}, {1, 2}), InconsistentClustering);
}

TEST_CASE("duplicate labels for the same address are tolerated") {
    Clustering c = Clustering::from_labels({"a", "b", "a"}, {5, 5, 5});
    CHECK(c.address_count() == 2);
    CHECK(c.cluster_count() == 1);
}

TEST_CASE("rows_sorted orders by cluster id then address") {
    Clustering c = Clustering::from_groups({{"z", "d"}, {"b", "y"}});
    std::vector<std::pair<Address, ClusterId>> expected = {
        {"b", "b"}, {"y", "b"}, {"d", "d"}, {"z", "d"}};
    CHECK(c.rows_sorted() == expected);
}

TEST_CASE("empty clustering") {
    Clustering c = Clustering::from_groups({});
    CHECK(c.address_count() == 0);
    CHECK(c.cluster_count() == 0);
    CHECK(c.rows_sorted().empty());
}
