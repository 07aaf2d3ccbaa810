#include "bsqdao/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsqdao/cluster.hpp"
#include "bsqdao/cluster_graph.hpp"
#include "bsqdao/errors.hpp"
#include "bsqdao/identity.hpp"
#include "bsqdao/ingest.hpp"
#include "bsqdao/reports.hpp"
#include "bsqdao/synth.hpp"

namespace bsq {

namespace {

enum class LogLevel { QUIET, INFO, DEBUG };

LogLevel log_level_from_env() {
    const char* value = std::getenv("BSQDAO_LOG");
    if (!value) return LogLevel::QUIET;
    std::string_view v(value);
    if (v == "debug") return LogLevel::DEBUG;
    if (v == "info") return LogLevel::INFO;
    return LogLevel::QUIET;
}

/// One invocation's worth of options; subcommands bind into the fields they
/// use and ignore the rest.
struct RunConfig {
    std::string txs_path;
    std::string tags_path;
    std::string aliases_path;
    std::string spreadsheet_path;
    std::string out_path;    // empty writes to the out stream
    std::string out_dir;
    std::string heuristic = "bsq";
    std::string min_edge_bsq;
    std::string graph_format = "dot";
    std::string report_format = "csv";
    std::vector<std::string> proposer_types;
    bool strict = false;
    bool largest_only = false;
    bool no_merge = false;
    unsigned threads = 1;
    std::size_t top_k = 10;

    SynthConfig synth;
    std::vector<std::string> mix_spec;
};

struct CliContext {
    RunConfig cfg;
    std::ostream& out;
    std::ostream& err;
    LogLevel level = LogLevel::QUIET;

    void info(const std::string& msg) const {
        if (level >= LogLevel::INFO) err << "info: " << msg << "\n";
    }
    void debug(const std::string& msg) const {
        if (level >= LogLevel::DEBUG) err << "debug: " << msg << "\n";
    }

    void write_output(const std::string& bytes) const {
        if (cfg.out_path.empty())
            out << bytes;
        else
            write_file(cfg.out_path, bytes);
    }

    Corpus load_corpus() const {
        ParsedCorpus parsed = parse_corpus_file(cfg.txs_path, cfg.strict, cfg.threads);
        info(std::to_string(parsed.corpus.size()) + " transactions from " + cfg.txs_path);
        for (const auto& w : parsed.report.warnings) debug(w);
        return std::move(parsed.corpus);
    }

    Clustering clusterize(const Corpus& corpus) const {
        Clustering c;
        if (cfg.heuristic == "bsq")
            c = cluster_bsq(corpus);
        else if (cfg.heuristic == "multi-input")
            c = cluster_multi_input(corpus);
        else
            c = merge_clusterings(cluster_bsq(corpus), cluster_multi_input(corpus));
        info(std::to_string(c.cluster_count()) + " clusters via " + cfg.heuristic);
        return c;
    }

    std::set<TxType> proposer_type_set() const {
        if (cfg.proposer_types.empty()) return kDefaultProposerTypes;
        std::set<TxType> types;
        for (const std::string& name : cfg.proposer_types) {
            auto type = parse_tx_type(name);
            if (!type) throw CLI::ValidationError("--proposer-types", "unknown type " + name);
            types.insert(*type);
        }
        return types;
    }

    std::vector<TagRecord> load_tags() const {
        if (cfg.tags_path.empty()) return {};
        std::vector<TagRecord> records = parse_tag_db_file(cfg.tags_path);
        if (!cfg.aliases_path.empty())
            records = apply_aliases(std::move(records), parse_alias_file(read_file(cfg.aliases_path)));
        return records;
    }

    BsqAmount min_edge_total() const {
        auto amount = BsqAmount::parse_decimal(cfg.min_edge_bsq);
        if (!amount)
            throw CLI::ValidationError("--min-edge-bsq",
                                       "expected a two-decimal amount, got " + cfg.min_edge_bsq);
        return *amount;
    }
};

const Transaction& genesis_of(const Corpus& corpus) {
    const Transaction* genesis = nullptr;
    for (const Transaction& tx : corpus.transactions()) {
        if (tx.tx_type != TxType::GENESIS) continue;
        if (genesis) throw ValidationError("corpus holds more than one genesis transaction");
        genesis = &tx;
    }
    if (!genesis) throw ValidationError("corpus holds no genesis transaction");
    return *genesis;
}

void add_corpus_options(CLI::App* cmd, CliContext& ctx) {
    cmd->add_option("--txs", ctx.cfg.txs_path, "Corpus JSONL file")->required();
    cmd->add_flag("--strict", ctx.cfg.strict, "Fail on any malformed or invalid transaction");
    cmd->add_option("--threads", ctx.cfg.threads, "Parser thread count")
        ->check(CLI::Range(1u, 256u));
}

void add_heuristic_option(CLI::App* cmd, CliContext& ctx) {
    cmd->add_option("--heuristic", ctx.cfg.heuristic, "Clustering heuristic")
        ->check(CLI::IsMember({"bsq", "multi-input", "merged"}));
}

void add_out_option(CLI::App* cmd, CliContext& ctx) {
    cmd->add_option("--out", ctx.cfg.out_path, "Output file (default: standard output)");
}

void run_validate(CliContext& ctx) {
    ParsedCorpus parsed = parse_corpus_file(ctx.cfg.txs_path, ctx.cfg.strict, ctx.cfg.threads);
    std::string report;
    for (const auto& w : parsed.report.warnings) report += w + "\n";
    report += std::to_string(parsed.corpus.size()) + " transactions valid, " +
              std::to_string(parsed.report.skipped_lines) + " lines skipped, " +
              std::to_string(parsed.report.dropped_txs) + " transactions dropped\n";
    ctx.write_output(report);
    if (parsed.report.skipped_lines > 0 || parsed.report.dropped_txs > 0)
        throw ValidationError("corpus has invalid content; see report");
}

void run_cluster(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    ctx.write_output(clusters_csv(ctx.clusterize(corpus)));
}

void run_tag(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering clustering = ctx.clusterize(corpus);

    std::vector<TagRecord> records = ctx.load_tags();
    if (!ctx.cfg.spreadsheet_path.empty()) {
        auto entries = parse_genesis_spreadsheet(read_file(ctx.cfg.spreadsheet_path));
        auto mapped = map_genesis_spreadsheet(entries, genesis_of(corpus));
        records.insert(records.end(), mapped.begin(), mapped.end());
    }

    ClusterTagging tagging = assign_tags(clustering, records);
    ctx.info(std::to_string(tagging.tags.size()) + " clusters tagged, " +
             std::to_string(tagging.shared.size()) + " shared tags");
    if (!ctx.cfg.no_merge) {
        MergeResult merged = merge_by_shared_tags(clustering, tagging);
        clustering = std::move(merged.clustering);
        tagging = std::move(merged.tagging);
        ctx.info(std::to_string(clustering.cluster_count()) + " clusters after merging");
    }

    const std::filesystem::path dir(ctx.cfg.out_dir);
    std::filesystem::create_directories(dir);
    write_file((dir / "clusters.csv").string(), clusters_csv(clustering));
    write_file((dir / "tagging.csv").string(), tagging_csv(tagging));
    write_file((dir / "conflicts.csv").string(), conflicts_csv(tagging));
    write_file((dir / "shared.csv").string(), shared_csv(tagging));
    write_file((dir / "review.csv").string(), review_csv(edit_distance_one_pairs(tagging)));
}

void run_roles(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering clustering = ctx.clusterize(corpus);
    ctx.write_output(roles_csv(assign_roles(clustering, corpus, ctx.proposer_type_set())));
}

void run_graph(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering clustering = ctx.clusterize(corpus);
    auto roles = assign_roles(clustering, corpus, ctx.proposer_type_set());
    ClusterTagging tagging = assign_tags(clustering, ctx.load_tags());

    ClusterGraph graph = build_cluster_graph(clustering, corpus, roles, tagging);
    if (!ctx.cfg.min_edge_bsq.empty()) graph = filter_graph(graph, ctx.min_edge_total());
    if (ctx.cfg.largest_only) graph = largest_component(graph);
    ctx.info(std::to_string(graph.vertices.size()) + " vertices, " +
             std::to_string(graph.edges.size()) + " edges");

    GraphFormat format = GraphFormat::DOT;
    if (ctx.cfg.graph_format == "graphml") format = GraphFormat::GRAPHML;
    if (ctx.cfg.graph_format == "csv") format = GraphFormat::CSV;
    ctx.write_output(export_graph(graph, format));
}

void run_report_market(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering clustering = ctx.clusterize(corpus);
    MarketBreakdown m =
        market_breakdown(clustering, corpus, assign_roles(clustering, corpus, ctx.proposer_type_set()));
    ctx.write_output(ctx.cfg.report_format == "json" ? market_json(m) : market_csv(m));
}

void run_report_supply(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    SupplyStats s = supply_stats(corpus);
    ctx.write_output(ctx.cfg.report_format == "json" ? supply_json(s) : supply_csv(s));
}

void run_report_top(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering clustering = ctx.clusterize(corpus);
    auto roles = assign_roles(clustering, corpus, ctx.proposer_type_set());
    ClusterTagging tagging = assign_tags(clustering, ctx.load_tags());
    auto top = top_transactors(clustering, corpus, roles, tagging, ctx.cfg.top_k);
    ctx.write_output(ctx.cfg.report_format == "json" ? top_json(top) : top_csv(top));
}

void run_synth(CliContext& ctx) {
    for (const std::string& spec : ctx.cfg.mix_spec) {
        auto eq = spec.find('=');
        auto type = parse_tx_type(spec.substr(0, eq));
        if (eq == std::string::npos || !type)
            throw CLI::ValidationError("--mix", "expected TYPE=WEIGHT, got " + spec);
        std::uint64_t weight = 0;
        try {
            weight = std::stoull(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--mix", "bad weight in " + spec);
        }
        ctx.cfg.synth.type_mix[*type] = weight;
    }

    SynthResult result = generate(ctx.cfg.synth);
    ctx.info(std::to_string(result.corpus.size()) + " transactions generated");

    const std::filesystem::path dir(ctx.cfg.out_dir);
    std::filesystem::create_directories(dir);
    write_file((dir / "corpus.jsonl").string(), serialize_corpus(result.corpus));
    write_file((dir / "tags.csv").string(), serialize_tag_db(result.tag_db));
    write_file((dir / "ground_truth.json").string(), serialize_ground_truth(result.truth));
}

void run_oracle_diff(CliContext& ctx) {
    Corpus corpus = ctx.load_corpus();
    Clustering heuristic = ctx.clusterize(corpus);
    PartitionDiff diff = compare_partitions(heuristic, oracle_cluster(corpus));
    if (diff.equal) {
        ctx.write_output("partitions equal\n");
        return;
    }
    ctx.write_output("partitions differ: " + std::to_string(diff.splits) + " split(s), " +
                     std::to_string(diff.merges) + " merge(s)\n");
    throw ValidationError("heuristic disagrees with the oracle");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliContext ctx{{}, out, err, log_level_from_env()};

    CLI::App app{"BSQ transaction analysis toolkit"};
    app.require_subcommand(1);

    CLI::App* validate = app.add_subcommand("validate", "Check a corpus file and report issues");
    add_corpus_options(validate, ctx);
    add_out_option(validate, ctx);
    validate->callback([&] { run_validate(ctx); });

    CLI::App* cluster = app.add_subcommand("cluster", "Group addresses into clusters");
    add_corpus_options(cluster, ctx);
    add_heuristic_option(cluster, ctx);
    add_out_option(cluster, ctx);
    cluster->callback([&] { run_cluster(ctx); });

    CLI::App* tag = app.add_subcommand("tag", "Attach identity tags and merge shared-tag clusters");
    add_corpus_options(tag, ctx);
    add_heuristic_option(tag, ctx);
    tag->add_option("--tags", ctx.cfg.tags_path, "Tag DB CSV");
    tag->add_option("--aliases", ctx.cfg.aliases_path, "Alias CSV applied to raw tags");
    tag->add_option("--genesis-spreadsheet", ctx.cfg.spreadsheet_path,
                    "Pre-launch spreadsheet CSV mapped onto genesis outputs");
    tag->add_flag("--no-merge", ctx.cfg.no_merge, "Skip merging clusters that share a tag");
    tag->add_option("--out-dir", ctx.cfg.out_dir, "Directory for the result tables")->required();
    tag->callback([&] { run_tag(ctx); });

    CLI::App* roles = app.add_subcommand("roles", "Assign proposer/generator/user roles");
    add_corpus_options(roles, ctx);
    add_heuristic_option(roles, ctx);
    roles->add_option("--proposer-types", ctx.cfg.proposer_types,
                      "Tx types whose clusters count as proposers")
        ->delimiter(',');
    add_out_option(roles, ctx);
    roles->callback([&] { run_roles(ctx); });

    CLI::App* graph = app.add_subcommand("graph", "Export the cluster transfer graph");
    add_corpus_options(graph, ctx);
    add_heuristic_option(graph, ctx);
    graph->add_option("--tags", ctx.cfg.tags_path, "Tag DB CSV for vertex labels");
    graph->add_option("--proposer-types", ctx.cfg.proposer_types,
                      "Tx types whose clusters count as proposers")
        ->delimiter(',');
    graph->add_option("--min-edge-bsq", ctx.cfg.min_edge_bsq,
                      "Drop edges totalling at most this BSQ amount (e.g. 3000.00)");
    graph->add_flag("--largest-component", ctx.cfg.largest_only,
                    "Keep only the largest weakly connected component");
    graph->add_option("--format", ctx.cfg.graph_format, "Export format")
        ->check(CLI::IsMember({"dot", "graphml", "csv"}));
    add_out_option(graph, ctx);
    graph->callback([&] { run_graph(ctx); });

    CLI::App* report = app.add_subcommand("report", "Market, supply, and top-transactor tables");
    report->require_subcommand(1);
    auto add_report_options = [&](CLI::App* cmd) {
        add_corpus_options(cmd, ctx);
        add_heuristic_option(cmd, ctx);
        cmd->add_option("--format", ctx.cfg.report_format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        add_out_option(cmd, ctx);
    };
    CLI::App* market = report->add_subcommand("market", "Transfer counts by role quadrant");
    add_report_options(market);
    market->add_option("--proposer-types", ctx.cfg.proposer_types,
                       "Tx types whose clusters count as proposers")
        ->delimiter(',');
    market->callback([&] { run_report_market(ctx); });

    CLI::App* supply = report->add_subcommand("supply", "Minted, burnt, and circulating BSQ");
    add_report_options(supply);
    supply->callback([&] { run_report_supply(ctx); });

    CLI::App* top = report->add_subcommand("top", "Clusters ranked by BSQ received");
    add_report_options(top);
    top->add_option("--k", ctx.cfg.top_k, "Number of rows")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    top->add_option("--tags", ctx.cfg.tags_path, "Tag DB CSV for the tags column");
    top->add_option("--proposer-types", ctx.cfg.proposer_types,
                    "Tx types whose clusters count as proposers")
        ->delimiter(',');
    top->callback([&] { run_report_top(ctx); });

    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic corpus with ground truth");
    synth->add_option("--participants", ctx.cfg.synth.participants, "Participant count")
        ->required();
    synth->add_option("--txs", ctx.cfg.synth.tx_count, "Scheduled transaction count")->required();
    synth->add_option("--seed", ctx.cfg.synth.seed, "Generator seed");
    synth->add_option("--mix", ctx.cfg.mix_spec, "Type weights as TYPE=WEIGHT")->delimiter(',');
    synth->add_option("--migrations", ctx.cfg.synth.migrations, "Wallet migrations to inject");
    synth->add_option("--alias-conflicts", ctx.cfg.synth.alias_conflicts,
                      "Participants tagged under a second name");
    synth->add_flag("--coinjoin", ctx.cfg.synth.adversarial.coinjoin,
                    "Fund the genesis from several participants");
    synth->add_flag("--dummy-transfers", ctx.cfg.synth.adversarial.dummy_transfers,
                    "Hop each wallet after every self-transfer");
    synth->add_flag("--disguised-transfers", ctx.cfg.synth.adversarial.disguised_transfers,
                    "Shape some payments like trade fees");
    synth->add_option("--out-dir", ctx.cfg.out_dir, "Directory for corpus, tags, ground truth")
        ->required();
    synth->callback([&] { run_synth(ctx); });

    CLI::App* diff = app.add_subcommand("oracle-diff",
                                        "Compare a heuristic against the reference clustering");
    add_corpus_options(diff, ctx);
    add_heuristic_option(diff, ctx);
    add_out_option(diff, ctx);
    diff->callback([&] { run_oracle_diff(ctx); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error[parse]: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "error[io]: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleConfig& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error[validation]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error[internal]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bsq
