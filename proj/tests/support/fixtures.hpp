#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsqdao/corpus.hpp"

namespace bsq::testutil {

/// 64-char lowercase hex txid with the given value in its low digits.
inline std::string tid(std::uint64_t n) {
    std::string s(64, '0');
    const char* hex = "0123456789abcdef";
    std::size_t i = s.size();
    while (n) {
        s[--i] = hex[n % 16];
        n /= 16;
    }
    return s;
}

struct In {
    std::string prev_txid;
    std::uint64_t prev_index = 0;
    std::string address;
    std::int64_t sat = 0;
    std::int64_t bsq = 0;
};

struct Out {
    std::string address;
    std::int64_t sat = 0;
    std::int64_t bsq = 0;
    bool issuance = false;
};

inline Transaction make_tx(std::string txid, std::uint64_t height, TxType type,
                           std::vector<In> ins, std::vector<Out> outs) {
    Transaction tx;
    tx.txid = std::move(txid);
    tx.height = height;
    tx.tx_type = type;
    for (auto& i : ins)
        tx.inputs.push_back(
            {std::move(i.prev_txid), i.prev_index, std::move(i.address), SatAmount(i.sat), BsqAmount(i.bsq)});
    std::uint64_t idx = 0;
    for (auto& o : outs)
        tx.outputs.push_back(
            {idx++, std::move(o.address), SatAmount(o.sat), BsqAmount(o.bsq), o.issuance});
    return tx;
}

/// Four participants, four transfers covering every sender/recipient role
/// combination. Clusters (by canonical id): g0 = proposer, g1 = generator,
/// u1 and v1 = users. Transfers: g0->u1 300, u1->g1 100, u1->v1 50,
/// g0->g1 500. Minted 3000, burnt 30, circulating 2970.
inline std::vector<Transaction> four_quadrant_corpus() {
    return {
        make_tx(tid(1), 1, TxType::GENESIS, {{tid(800), 0, "f", 9000, 0}},
                {{"g0", 600, 2000, true}, {"g1", 600, 1000, true}}),
        make_tx(tid(2), 5, TxType::PROPOSAL, {{tid(1), 0, "g0", 600, 2000}}, {{"p1", 500, 1990}}),
        make_tx(tid(3), 6, TxType::TRADE_FEE, {{tid(1), 1, "g1", 600, 1000}}, {{"g2", 500, 995}}),
        make_tx(tid(4), 7, TxType::TRANSFER, {{tid(2), 0, "p1", 500, 1990}},
                {{"u1", 200, 300}, {"p2", 250, 1690}}),
        make_tx(tid(5), 8, TxType::TRADE_FEE, {{tid(4), 0, "u1", 200, 300}}, {{"u2", 150, 295}}),
        make_tx(tid(6), 9, TxType::TRANSFER, {{tid(5), 0, "u2", 150, 295}},
                {{"g3", 70, 100}, {"u3", 70, 195}}),
        make_tx(tid(7), 10, TxType::TRADE_FEE,
                {{tid(3), 0, "g2", 500, 995}, {tid(6), 0, "g3", 70, 100}}, {{"g4", 500, 1090}}),
        make_tx(tid(8), 11, TxType::TRANSFER, {{tid(6), 1, "u3", 70, 195}},
                {{"v1", 30, 50}, {"u4", 30, 145}}),
        make_tx(tid(9), 12, TxType::TRANSFER, {{tid(4), 1, "p2", 250, 1690}},
                {{"g5", 100, 500}, {"p3", 120, 1190}}),
        make_tx(tid(10), 13, TxType::TRADE_FEE,
                {{tid(7), 0, "g4", 500, 1090}, {tid(9), 0, "g5", 100, 500}}, {{"g6", 550, 1585}}),
    };
}

}  // namespace bsq::testutil
