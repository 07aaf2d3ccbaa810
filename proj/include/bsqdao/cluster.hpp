#pragma once

#include "bsqdao/clustering.hpp"
#include "bsqdao/corpus.hpp"

namespace bsq {

/// Self-transfer heuristic. For every non-IRREGULAR transaction: a
/// self-transfer type unions all its input and output addresses; TRANSFER
/// unions its input addresses with every output address except outputs[0]
/// (the recipient); GENESIS contributes no unions. Every address appearing
/// anywhere in the corpus, IRREGULAR transactions included, is in the
/// resulting universe.
Clustering cluster_bsq(const Corpus& corpus);

/// Conventional multi-input heuristic: for every non-IRREGULAR transaction,
/// all input addresses are unioned; outputs contribute nothing.
Clustering cluster_multi_input(const Corpus& corpus);

/// The finest partition coarser than both inputs (join in the partition
/// lattice) over the union of their universes.
Clustering merge_clusterings(const Clustering& a, const Clustering& b);

/// Address of outputs[0]. Throws NotATransfer, NoOutputs.
const Address& recipient_of(const Transaction& tx);

}  // namespace bsq
