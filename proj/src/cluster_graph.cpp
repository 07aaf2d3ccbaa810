#include "bsqdao/cluster_graph.hpp"

#include <algorithm>
#include <charconv>

#include "bsqdao/csv.hpp"
#include "bsqdao/errors.hpp"

namespace bsq {

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string xml_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        auto starts = [&](std::string_view ent) { return s.substr(i).starts_with(ent); };
        if (starts("&amp;")) {
            out.push_back('&');
            i += 5;
        } else if (starts("&lt;")) {
            out.push_back('<');
            i += 4;
        } else if (starts("&gt;")) {
            out.push_back('>');
            i += 4;
        } else if (starts("&quot;")) {
            out.push_back('"');
            i += 6;
        } else {
            out.push_back(s[i++]);
        }
    }
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string_view role_color(Role r) {
    switch (r) {
        case Role::PROPOSER: return "red";
        case Role::GENERATOR: return "blue";
        case Role::USER: return "white";
    }
    return "white";
}

std::string joined_tags(const std::set<std::string>& tags) {
    std::string out;
    for (const auto& t : tags) {
        if (!out.empty()) out.push_back('|');
        out += t;
    }
    return out;
}

std::string export_dot(const ClusterGraph& g) {
    std::string out = "digraph clusters {\n";
    for (const auto& [id, v] : g.vertices) {
        out += "  \"" + dot_escape(id) + "\" [color=" + std::string(role_color(v.role)) +
               ", size=\"" + v.total_received.to_string() + "\"";
        if (!v.tags.empty()) out += ", label=\"" + dot_escape(joined_tags(v.tags)) + "\"";
        out += "];\n";
    }
    for (const auto& [key, e] : g.edges) {
        out += "  \"" + dot_escape(key.first) + "\" -> \"" + dot_escape(key.second) +
               "\" [count=" + std::to_string(e.count) + ", total=\"" + e.total.to_string() +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string export_graphml(const ClusterGraph& g) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
        "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"string\"/>\n"
        "  <key id=\"tags\" for=\"node\" attr.name=\"tags\" attr.type=\"string\"/>\n"
        "  <key id=\"count\" for=\"edge\" attr.name=\"count\" attr.type=\"long\"/>\n"
        "  <key id=\"total\" for=\"edge\" attr.name=\"total\" attr.type=\"string\"/>\n"
        "  <graph id=\"clusters\" edgedefault=\"directed\">\n";
    for (const auto& [id, v] : g.vertices) {
        out += "    <node id=\"" + xml_escape(id) + "\">\n";
        out += "      <data key=\"role\">" + std::string(role_name(v.role)) + "</data>\n";
        out += "      <data key=\"size\">" + v.total_received.to_string() + "</data>\n";
        if (!v.tags.empty())
            out += "      <data key=\"tags\">" + xml_escape(joined_tags(v.tags)) + "</data>\n";
        out += "    </node>\n";
    }
    for (const auto& [key, e] : g.edges) {
        out += "    <edge source=\"" + xml_escape(key.first) + "\" target=\"" +
               xml_escape(key.second) + "\">\n";
        out += "      <data key=\"count\">" + std::to_string(e.count) + "</data>\n";
        out += "      <data key=\"total\">" + e.total.to_string() + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string export_csv(const ClusterGraph& g) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, e] : g.edges)
        rows.push_back({key.first, key.second, std::to_string(e.count), e.total.to_string()});
    return write_table(rows, {"sender", "recipient", "count", "total"});
}

// Pulls the value of attr="..." out of an XML tag fragment.
std::string_view tag_attr(std::string_view tag, std::string_view attr) {
    std::string needle = std::string(attr) + "=\"";
    std::size_t at = tag.find(needle);
    if (at == std::string_view::npos)
        throw UnsupportedFormat("GraphML tag missing attribute " + std::string(attr));
    at += needle.size();
    std::size_t end = tag.find('"', at);
    if (end == std::string_view::npos) throw UnsupportedFormat("unterminated GraphML attribute");
    return tag.substr(at, end - at);
}

}  // namespace

ClusterGraph build_cluster_graph(const Clustering& clustering, const Corpus& corpus,
                                 const std::map<ClusterId, Role>& roles,
                                 const ClusterTagging& tagging) {
    ClusterGraph g;
    for (const auto& id : clustering.cluster_ids()) {
        VertexInfo v;
        v.role = roles.at(id);
        if (auto it = tagging.tags.find(id); it != tagging.tags.end())
            for (const auto& [tag, _] : it->second) v.tags.insert(tag);
        g.vertices.emplace(id, std::move(v));
    }

    for (const auto& tx : corpus.transactions()) {
        if (tx.tx_type == TxType::IRREGULAR) continue;
        for (const auto& out : tx.outputs)
            g.vertices.at(clustering.cluster_of(out.address)).total_received += out.bsq;

        if (tx.tx_type != TxType::TRANSFER) continue;
        if (tx.inputs.empty())
            throw InconsistentClustering("transfer " + tx.txid + " has no inputs");
        const ClusterId& sender = clustering.cluster_of(tx.inputs[0].address);
        for (const auto& in : tx.inputs)
            if (clustering.cluster_of(in.address) != sender)
                throw InconsistentClustering("transfer " + tx.txid +
                                             " has inputs spanning clusters");
        const ClusterId& recipient = clustering.cluster_of(recipient_of(tx));
        EdgeInfo& e = g.edges[{sender, recipient}];
        e.count += 1;
        e.total += tx.outputs[0].bsq;
    }
    return g;
}

ClusterGraph filter_graph(const ClusterGraph& g, BsqAmount min_edge_total) {
    ClusterGraph out;
    std::set<ClusterId> keep;
    for (const auto& [key, e] : g.edges) {
        if (e.total > min_edge_total) {
            out.edges.emplace(key, e);
            keep.insert(key.first);
            keep.insert(key.second);
        }
    }
    for (const auto& id : keep) out.vertices.emplace(id, g.vertices.at(id));
    return out;
}

ClusterGraph largest_component(const ClusterGraph& g) {
    if (g.vertices.empty()) throw EmptyGraph("largest_component of an empty graph");

    std::map<ClusterId, std::vector<const ClusterId*>> adj;
    for (const auto& [id, _] : g.vertices) adj[id];
    for (const auto& [key, _] : g.edges) {
        adj[key.first].push_back(&key.second);
        adj[key.second].push_back(&key.first);
    }

    // Vertices are walked in ascending id order, so the first component of
    // maximal size contains the smallest member id among tied components.
    std::set<ClusterId> best, seen;
    for (const auto& [start, _] : g.vertices) {
        if (seen.contains(start)) continue;
        std::set<ClusterId> component;
        std::vector<ClusterId> queue = {start};
        seen.insert(start);
        while (!queue.empty()) {
            ClusterId cur = std::move(queue.back());
            queue.pop_back();
            for (const ClusterId* next : adj[cur])
                if (seen.insert(*next).second) queue.push_back(*next);
            component.insert(std::move(cur));
        }
        if (component.size() > best.size()) best = std::move(component);
    }

    ClusterGraph out;
    for (const auto& id : best) out.vertices.emplace(id, g.vertices.at(id));
    for (const auto& [key, e] : g.edges)
        if (best.contains(key.first)) out.edges.emplace(key, e);
    return out;
}

std::string export_graph(const ClusterGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::DOT: return export_dot(g);
        case GraphFormat::GRAPHML: return export_graphml(g);
        case GraphFormat::CSV: return export_csv(g);
    }
    throw UnsupportedFormat("unknown graph export format");
}

ClusterGraph import_graphml(std::string_view bytes) {
    if (bytes.find("<graphml") == std::string_view::npos)
        throw UnsupportedFormat("not a GraphML document");

    ClusterGraph g;
    std::size_t pos = 0;
    VertexInfo* cur_vertex = nullptr;
    EdgeInfo* cur_edge = nullptr;
    while (true) {
        std::size_t open = bytes.find('<', pos);
        if (open == std::string_view::npos) break;
        std::size_t close = bytes.find('>', open);
        if (close == std::string_view::npos) throw UnsupportedFormat("unterminated XML tag");
        std::string_view tag = bytes.substr(open + 1, close - open - 1);
        pos = close + 1;

        if (tag.starts_with("node ")) {
            std::string id = xml_unescape(tag_attr(tag, "id"));
            cur_vertex = &g.vertices[std::move(id)];
            cur_edge = nullptr;
        } else if (tag.starts_with("edge ")) {
            std::string source = xml_unescape(tag_attr(tag, "source"));
            std::string target = xml_unescape(tag_attr(tag, "target"));
            cur_edge = &g.edges[{std::move(source), std::move(target)}];
            cur_vertex = nullptr;
        } else if (tag.starts_with("data ")) {
            std::string_view key = tag_attr(tag, "key");
            std::size_t text_end = bytes.find("</data>", pos);
            if (text_end == std::string_view::npos)
                throw UnsupportedFormat("unterminated data element");
            std::string value = xml_unescape(bytes.substr(pos, text_end - pos));
            pos = text_end + 7;

            if (cur_vertex) {
                if (key == "role") {
                    if (value == "PROPOSER")
                        cur_vertex->role = Role::PROPOSER;
                    else if (value == "GENERATOR")
                        cur_vertex->role = Role::GENERATOR;
                    else if (value == "USER")
                        cur_vertex->role = Role::USER;
                    else
                        throw UnsupportedFormat("unknown role " + value);
                } else if (key == "size") {
                    auto amount = BsqAmount::parse_decimal(value);
                    if (!amount) throw UnsupportedFormat("bad size value " + value);
                    cur_vertex->total_received = *amount;
                } else if (key == "tags") {
                    std::size_t start = 0;
                    while (start <= value.size()) {
                        std::size_t bar = value.find('|', start);
                        if (bar == std::string::npos) bar = value.size();
                        if (bar > start) cur_vertex->tags.insert(value.substr(start, bar - start));
                        start = bar + 1;
                    }
                }
            } else if (cur_edge) {
                if (key == "count") {
                    std::uint64_t n = 0;
                    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
                    if (ec != std::errc{} || p != value.data() + value.size())
                        throw UnsupportedFormat("bad count value " + value);
                    cur_edge->count = n;
                } else if (key == "total") {
                    auto amount = BsqAmount::parse_decimal(value);
                    if (!amount) throw UnsupportedFormat("bad total value " + value);
                    cur_edge->total = *amount;
                }
            }
        } else if (tag.starts_with("/node") || tag.starts_with("/edge")) {
            cur_vertex = nullptr;
            cur_edge = nullptr;
        }
    }
    return g;
}

}  // namespace bsq
