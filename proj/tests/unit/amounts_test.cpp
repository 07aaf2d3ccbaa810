#include "bsqdao/amounts.hpp"

#include "doctest.h"

using bsq::BsqAmount;

TEST_CASE("amounts render with exactly two fraction digits") {
    CHECK(BsqAmount(0).to_string() == "0.00");
    CHECK(BsqAmount(1).to_string() == "0.01");
    CHECK(BsqAmount(10).to_string() == "0.10");
    CHECK(BsqAmount(100).to_string() == "1.00");
    CHECK(BsqAmount(300000).to_string() == "3000.00");
    CHECK(BsqAmount(452942422).to_string() == "4529424.22");
    CHECK(BsqAmount(68121040).to_string() == "681210.40");
    CHECK(BsqAmount(384821382).to_string() == "3848213.82");
}

TEST_CASE("parse_decimal accepts up to two fraction digits") {
    CHECK(BsqAmount::parse_decimal("3000")->centi() == 300000);
    CHECK(BsqAmount::parse_decimal("3000.5")->centi() == 300050);
    CHECK(BsqAmount::parse_decimal("3000.00")->centi() == 300000);
    CHECK(BsqAmount::parse_decimal("0.01")->centi() == 1);
    CHECK(BsqAmount::parse_decimal("0")->centi() == 0);
    CHECK(BsqAmount::parse_decimal("4529424.22")->centi() == 452942422);
}

TEST_CASE("parse_decimal rejects malformed text") {
    CHECK(!BsqAmount::parse_decimal(""));
    CHECK(!BsqAmount::parse_decimal("-1"));
    CHECK(!BsqAmount::parse_decimal("1.234"));
    CHECK(!BsqAmount::parse_decimal("1."));
    CHECK(!BsqAmount::parse_decimal(".5"));
    CHECK(!BsqAmount::parse_decimal("abc"));
    CHECK(!BsqAmount::parse_decimal("1e3"));
    CHECK(!BsqAmount::parse_decimal("1 "));
    CHECK(!BsqAmount::parse_decimal("+1"));
}

TEST_CASE("parse_decimal round-trips to_string") {
    for (std::int64_t centi : {0LL, 1LL, 99LL, 100LL, 12345LL, 452942422LL}) {
        BsqAmount a(centi);
        auto back = BsqAmount::parse_decimal(a.to_string());
        REQUIRE(back.has_value());
        CHECK(back->centi() == centi);
    }
}

TEST_CASE("checked_sub underflow throws") {
    CHECK(BsqAmount(500).checked_sub(BsqAmount(480)).centi() == 20);
    CHECK_THROWS_AS(BsqAmount(480).checked_sub(BsqAmount(500)), bsq::NegativeBurn);
}

TEST_CASE("negative construction is rejected") {
    CHECK_THROWS_AS(BsqAmount(-1), bsq::Error);
    CHECK_THROWS_AS(bsq::SatAmount(-1), bsq::Error);
}
