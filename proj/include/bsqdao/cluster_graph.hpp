#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bsqdao/cluster.hpp"
#include "bsqdao/identity.hpp"

namespace bsq {

struct VertexInfo {
    Role role = Role::USER;
    BsqAmount total_received;       // over all non-IRREGULAR outputs to the cluster
    std::set<std::string> tags;     // canonical tags

    bool operator==(const VertexInfo&) const = default;
};

struct EdgeInfo {
    std::uint64_t count = 0;  // aggregated TRANSFER transactions
    BsqAmount total;          // sum of the recipient outputs

    bool operator==(const EdgeInfo&) const = default;
};

/// Directed multigraph collapsed to one edge per (sender, recipient) cluster
/// pair. Self-loops allowed. Deterministic iteration through std::map.
struct ClusterGraph {
    std::map<ClusterId, VertexInfo> vertices;
    std::map<std::pair<ClusterId, ClusterId>, EdgeInfo> edges;

    bool operator==(const ClusterGraph&) const = default;
};

/// One vertex per cluster; one edge per (sender, recipient) pair aggregating
/// all TRANSFER txs, where the sender is the cluster of the tx's inputs and
/// the recipient is the cluster of outputs[0]; the transferred amount is the
/// bsq of outputs[0]. Throws InconsistentClustering when a transfer's input
/// addresses span clusters.
ClusterGraph build_cluster_graph(const Clustering& clustering, const Corpus& corpus,
                                 const std::map<ClusterId, Role>& roles,
                                 const ClusterTagging& tagging);

/// Keeps edges with total strictly above the threshold; drops vertices left
/// without incident edges.
ClusterGraph filter_graph(const ClusterGraph& g, BsqAmount min_edge_total);

/// Subgraph induced by the largest weakly-connected component; ties go to the
/// component containing the smallest ClusterId. Throws EmptyGraph.
ClusterGraph largest_component(const ClusterGraph& g);

enum class GraphFormat { DOT, GRAPHML, CSV };

/// Deterministic bytes. Vertices carry color (proposer=red, generator=blue,
/// user=white), size (total received BSQ, two decimals), and a tag label when
/// tagged; edges carry count and total.
std::string export_graph(const ClusterGraph& g, GraphFormat format);

/// Re-parses the GraphML emitted by export_graph; the round trip is the
/// identity. Throws UnsupportedFormat on anything else.
ClusterGraph import_graphml(std::string_view bytes);

}  // namespace bsq
