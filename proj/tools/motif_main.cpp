// motif: command-line front end for the motifkit library.
//
// Exit codes: 0 success, 1 usage or motif-parse error, 2 input-data error,
// 3 resource limit hit (timeout/memory), 4 pipeline produced no results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifkit/canonical.hpp"
#include "motifkit/discovery.hpp"
#include "motifkit/engine.hpp"
#include "motifkit/graph_io.hpp"
#include "motifkit/motif.hpp"
#include "motifkit/rng.hpp"
#include "motifkit/stats.hpp"
#include "motifkit/xswap.hpp"

namespace {

using json = nlohmann::ordered_json;
using motifkit::PropertyDigraph;

constexpr const char* motif_version = "0.1.0";

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_no_results = 4;

bool quiet = false;

void info(const std::string& message) {
    if (!quiet) std::cerr << "motif: " << message << "\n";
}

void warn(const std::string& message) {
    std::cerr << "motif: warning: " << message << "\n";
}

void fail(const std::string& message) {
    std::cerr << "motif: error: " << message << "\n";
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string version_text() {
    std::string out = std::string("motif ") + motif_version + "\n";
    out += std::string("rng ") + motifkit::rng_name + " seed0";
    for (std::uint64_t v : motifkit::rng_reference_seed0) out += " " + hex64(v);
    return out;
}

// ---- shared option bundles ----

struct GraphArgs {
    std::string graph_file;
    std::string vertex_attr_file;
    std::string edge_attr_file;
    std::optional<double> min_weight;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--graph", args.graph_file, "Edge-list CSV")->required();
    cmd->add_option("--vertex-attrs", args.vertex_attr_file, "Vertex attribute CSV");
    cmd->add_option("--edge-attrs", args.edge_attr_file, "Edge attribute CSV");
    cmd->add_option("--min-weight", args.min_weight,
                    "Drop edges whose numeric 'weight' is below this");
}

PropertyDigraph load_host(const GraphArgs& args) {
    motifkit::LoadOptions opts;
    if (!args.vertex_attr_file.empty()) opts.vertex_attr_file = args.vertex_attr_file;
    if (!args.edge_attr_file.empty()) opts.edge_attr_file = args.edge_attr_file;
    opts.min_weight = args.min_weight;
    motifkit::LoadResult r = motifkit::load_graph(args.graph_file, opts);
    info("loaded " + args.graph_file + ": " + std::to_string(r.graph.vertex_count()) +
         " vertices, " + std::to_string(r.graph.edge_count()) + " edges");
    if (r.duplicate_edge_rows > 0) {
        warn(std::to_string(r.duplicate_edge_rows) + " duplicate edge rows collapsed");
    }
    if (r.min_weight_dropped > 0) {
        info(std::to_string(r.min_weight_dropped) + " edges dropped by --min-weight");
    }
    return std::move(r.graph);
}

motifkit::MotifQuery load_motif(const std::string& path, bool induced) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw motifkit::CsvError(motifkit::CsvError::Kind::file_not_found,
                                 "cannot open motif file: " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    motifkit::MotifQuery q = motifkit::parse_motif(text.str());
    q.induced = induced;
    return q;
}

motifkit::EngineOptions engine_options(unsigned workers, double timeout_secs,
                                       std::optional<std::uint64_t> limit = {}) {
    motifkit::EngineOptions opts;
    opts.workers = workers;
    if (timeout_secs > 0) {
        opts.timeout = std::chrono::milliseconds(
            static_cast<std::int64_t>(timeout_secs * 1000.0));
    }
    opts.limit = limit;
    return opts;
}

// JSON cannot carry infinities; degenerate z-scores serialize as strings.
json z_to_json(double z) {
    if (std::isinf(z)) return z > 0 ? "+inf" : "-inf";
    return z;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw motifkit::CsvError(motifkit::CsvError::Kind::file_not_found,
                                 "cannot write " + path.string());
    }
    out << content;
}

void write_json_file(const std::filesystem::path& path, const json& payload) {
    write_text_file(path, payload.dump(2) + "\n");
}

std::string one_line(const std::string& pretty) {
    std::string out;
    for (char c : pretty) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

// ---- count ----

struct CountArgs {
    GraphArgs graph;
    std::string motif_file;
    unsigned workers = 0;
    bool induced = false;
    double timeout_secs = 0;
};

int run_count(const CountArgs& args) {
    PropertyDigraph g = load_host(args.graph);
    motifkit::MotifQuery q = load_motif(args.motif_file, args.induced);
    motifkit::MatchResult r = motifkit::count_monomorphisms(
        q, g, engine_options(args.workers, args.timeout_secs));

    json payload;
    payload["count"] = r.count;
    payload["truncated"] = r.truncated;
    payload["elapsed_ms"] = r.elapsed.count();
    std::cout << payload.dump() << "\n";
    if (r.truncated && r.reason == motifkit::Truncation::timeout) {
        fail("count timed out; result is a lower bound");
        return exit_resource;
    }
    return exit_ok;
}

// ---- find ----

struct FindArgs {
    CountArgs base;
    std::uint64_t limit = 0;
    std::string out_file;
};

int run_find(const FindArgs& args) {
    PropertyDigraph g = load_host(args.base.graph);
    motifkit::MotifQuery q = load_motif(args.base.motif_file, args.base.induced);
    std::optional<std::uint64_t> limit;
    if (args.limit > 0) limit = args.limit;
    motifkit::MatchResult r = motifkit::enumerate_monomorphisms(
        q, g, engine_options(args.base.workers, args.base.timeout_secs, limit));

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.out_file.empty()) {
        file.open(args.out_file, std::ios::binary);
        if (!file) {
            fail("cannot write " + args.out_file);
            return exit_input;
        }
        out = &file;
    }
    for (const auto& mapping : r.mappings) {
        json row;
        for (std::size_t i = 0; i < q.vertices.size(); ++i) {
            row[q.vertices[i]] = g.vertex_id(mapping[i]);
        }
        *out << row.dump() << "\n";
    }
    info(std::to_string(r.mappings.size()) + " matches");
    if (r.truncated && r.reason == motifkit::Truncation::timeout) {
        fail("enumeration timed out; matches are incomplete");
        return exit_resource;
    }
    return exit_ok;
}

// ---- randomize ----

struct RandomizeArgs {
    GraphArgs graph;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    double swap_factor = 10.0;
    unsigned workers = 0;
    std::string out_dir;
};

int run_randomize(const RandomizeArgs& args) {
    PropertyDigraph g = load_host(args.graph);
    motifkit::SwapConfig cfg;
    cfg.swap_factor = args.swap_factor;
    cfg.seed = args.seed;
    motifkit::NullEnsemble ens =
        motifkit::build_ensemble(g, cfg, args.samples, args.workers);

    std::filesystem::create_directories(args.out_dir);
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < ens.samples.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "sample_%04zu.csv", i);
        motifkit::save_edge_csv(ens.samples[i],
                                (std::filesystem::path(args.out_dir) / name).string());
        if (ens.acceptance_rates[i] == 0.0) ++degenerate;
    }

    json manifest;
    manifest["source_digest"] = hex64(ens.source_digest);
    manifest["swap_factor"] = args.swap_factor;
    manifest["seed"] = args.seed;
    manifest["n_samples"] = args.samples;
    manifest["rng"] = motifkit::rng_name;
    json seeds = json::array();
    for (std::uint64_t s : ens.seeds) seeds.push_back(hex64(s));
    manifest["sample_seeds"] = std::move(seeds);
    manifest["acceptance_rates"] = ens.acceptance_rates;
    write_json_file(std::filesystem::path(args.out_dir) / "ensemble.json", manifest);

    if (degenerate > 0) {
        warn(std::to_string(degenerate) +
             " sample(s) accepted no swap; they equal the input graph");
    }
    info("wrote " + std::to_string(ens.samples.size()) + " samples to " + args.out_dir);
    return exit_ok;
}

// ---- discover ----

struct DiscoverArgs {
    GraphArgs graph;
    motifkit::DiscoveryConfig cfg;
    std::string steer = "none";
    double budget_secs = 60.0;
    std::string out_dir;
};

json lineage_for(const motifkit::CandidateMotif& m,
                 const std::map<std::string, const motifkit::CandidateMotif*>& by_label) {
    std::vector<const motifkit::CandidateMotif*> chain;
    const motifkit::CandidateMotif* cur = &m;
    for (;;) {
        chain.push_back(cur);
        if (!cur->parent) break;
        auto it = by_label.find(*cur->parent);
        if (it == by_label.end()) break;
        cur = it->second;
    }
    json out = json::array();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        json step;
        step["motif"] = one_line(motifkit::pretty_print((*it)->query));
        step["refinement"] = motifkit::refinement_kind_text((*it)->refinement_kind);
        step["round"] = (*it)->round;
        step["digest"] = motifkit::label_digest_hex((*it)->label);
        out.push_back(std::move(step));
    }
    return out;
}

json motif_entry(const motifkit::CandidateMotif& m, std::size_t rank,
                 const std::map<std::string, const motifkit::CandidateMotif*>& by_label) {
    const motifkit::MotifStatistics& s = *m.stats;
    json e;
    e["rank"] = rank;
    e["motif"] = motifkit::pretty_print(m.query);
    e["digest"] = motifkit::label_digest_hex(m.label);
    e["size"] = m.query.size();
    e["observed"] = s.observed;
    e["null_mean"] = s.null_mean;
    e["null_std"] = s.null_std;
    e["z"] = z_to_json(s.z);
    e["p_empirical"] = s.p_empirical;
    e["significant"] = s.significant;
    e["topology"] = m.query.fully_directed()
                        ? motifkit::topology_class_text(motifkit::topology_class(m.query))
                        : "partial";
    e["round"] = m.round;
    e["refinement"] = motifkit::refinement_kind_text(m.refinement_kind);
    e["parent_digest"] =
        m.parent ? json(motifkit::label_digest_hex(*m.parent)) : json(nullptr);
    e["lineage"] = lineage_for(m, by_label);
    e["null_counts"] = s.null_counts;
    return e;
}

void print_ranked_table(std::ostream& out, const json& motifs) {
    if (motifs.empty()) {
        out << "no motifs\n";
        return;
    }
    out << "rank  z          p        count  size  topology      motif\n";
    for (const auto& e : motifs) {
        char row[160];
        const std::string z = e["z"].is_string()
                                  ? e["z"].get<std::string>()
                                  : [&] {
                                        char b[32];
                                        std::snprintf(b, sizeof b, "%.4f",
                                                      e["z"].get<double>());
                                        return std::string(b);
                                    }();
        std::snprintf(row, sizeof row, "%-5llu %-10s %-8.4f %-6llu %-5llu %-13s ",
                      static_cast<unsigned long long>(e["rank"].get<std::uint64_t>()),
                      z.c_str(), e["p_empirical"].get<double>(),
                      static_cast<unsigned long long>(e["observed"].get<std::uint64_t>()),
                      static_cast<unsigned long long>(e["size"].get<std::uint64_t>()),
                      e["topology"].get<std::string>().c_str());
        out << row << one_line(e["motif"].get<std::string>()) << "\n";
    }
}

int run_discover(DiscoverArgs& args) {
    if (args.steer == "ff") {
        args.cfg.steer = motifkit::TopologyClass::feed_forward;
    } else if (args.steer == "rec") {
        args.cfg.steer = motifkit::TopologyClass::recurrent;
    } else if (args.steer != "none") {
        fail("--steer must be one of ff, rec, none");
        return exit_usage;
    }
    args.cfg.per_motif_budget = std::chrono::milliseconds(
        static_cast<std::int64_t>(args.budget_secs * 1000.0));
    try {
        motifkit::validate(args.cfg);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
        return exit_usage;
    }

    PropertyDigraph g = load_host(args.graph);
    const auto started = std::chrono::steady_clock::now();
    motifkit::DiscoveryOutcome outcome = motifkit::discover(g, args.cfg);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    for (const std::string& d : outcome.diagnostics) info(d);

    std::map<std::string, const motifkit::CandidateMotif*> by_label;
    for (const motifkit::CandidateMotif& c : outcome.scored) by_label[c.label] = &c;

    json motifs = json::array();
    for (std::size_t i = 0; i < outcome.ranked.size(); ++i) {
        motifs.push_back(motif_entry(outcome.ranked[i], i + 1, by_label));
    }
    json results;
    results["motifs"] = motifs;

    const std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir / "discovered");
    write_json_file(out_dir / "results.json", results);
    for (std::size_t i = 0; i < outcome.ranked.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "%03zu_%s.motif", i + 1,
                      motifkit::label_digest_hex(outcome.ranked[i].label).c_str());
        write_text_file(out_dir / "discovered" / name,
                        motifkit::pretty_print(outcome.ranked[i].query));
    }

    json manifest;
    manifest["version"] = motif_version;
    manifest["rng"] = motifkit::rng_name;
    json refs = json::array();
    for (std::uint64_t v : motifkit::rng_reference_seed0) refs.push_back(hex64(v));
    manifest["rng_reference_seed0"] = std::move(refs);
    json cfg;
    cfg["size_min"] = args.cfg.size_min;
    cfg["size_max"] = args.cfg.size_max;
    cfg["target_count"] = args.cfg.target_count;
    cfg["z_min"] = args.cfg.criteria.z_min;
    cfg["p_max"] = args.cfg.criteria.p_max;
    cfg["min_count"] = args.cfg.criteria.min_count;
    cfg["attribute_keys"] = args.cfg.attribute_keys;
    cfg["steer"] = args.steer;
    cfg["seed"] = args.cfg.seed;
    cfg["n_samples"] = args.cfg.n_samples;
    cfg["swap_factor"] = args.cfg.swap_factor;
    cfg["max_rounds"] = args.cfg.max_rounds;
    cfg["frontier_cap"] = args.cfg.frontier_cap;
    cfg["per_motif_budget_ms"] = args.cfg.per_motif_budget.count();
    manifest["config"] = std::move(cfg);
    json ens;
    ens["source_digest"] = hex64(outcome.ensemble_digest);
    json seeds = json::array();
    for (std::uint64_t s : outcome.ensemble_seeds) seeds.push_back(hex64(s));
    ens["seeds"] = std::move(seeds);
    ens["acceptance_rates"] = outcome.ensemble_acceptance_rates;
    manifest["ensemble"] = std::move(ens);
    manifest["rounds"] = outcome.rounds;
    manifest["diagnostics"] = outcome.diagnostics;
    manifest["elapsed_ms"] = elapsed.count();
    write_json_file(out_dir / "run_manifest.json", manifest);

    print_ranked_table(std::cout, motifs);
    if (outcome.no_significant) {
        fail("no significant motifs");
        return exit_no_results;
    }
    return exit_ok;
}

// ---- report ----

struct ReportArgs {
    std::string results_file;
    std::string format = "table";
};

int run_report(const ReportArgs& args) {
    std::ifstream in(args.results_file, std::ios::binary);
    if (!in) {
        fail("cannot open " + args.results_file);
        return exit_input;
    }
    json results;
    try {
        results = json::parse(in);
    } catch (const json::exception& e) {
        fail("malformed results file: " + std::string(e.what()));
        return exit_input;
    }
    if (!results.is_object() || !results.contains("motifs") ||
        !results["motifs"].is_array()) {
        fail("malformed results file: missing \"motifs\" array");
        return exit_input;
    }
    const json& motifs = results["motifs"];

    if (args.format == "json") {
        std::cout << results.dump(2) << "\n";
        return exit_ok;
    }
    if (args.format == "markdown") {
        if (motifs.empty()) {
            std::cout << "no motifs\n";
            return exit_ok;
        }
        std::cout << "| rank | motif | count | z | p | topology | lineage depth |\n";
        std::cout << "|---|---|---|---|---|---|---|\n";
        for (const auto& e : motifs) {
            const std::string z = e["z"].is_string()
                                      ? e["z"].get<std::string>()
                                      : [&] {
                                            char b[32];
                                            std::snprintf(b, sizeof b, "%.4f",
                                                          e["z"].get<double>());
                                            return std::string(b);
                                        }();
            std::cout << "| " << e["rank"] << " | "
                      << one_line(e["motif"].get<std::string>()) << " | "
                      << e["observed"] << " | " << z << " | " << e["p_empirical"]
                      << " | " << e["topology"].get<std::string>() << " | "
                      << e["lineage"].size() << " |\n";
        }
        return exit_ok;
    }
    print_ranked_table(std::cout, motifs);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"motif discovery toolkit for directed attributed graphs"};
    app.set_version_flag("--version", version_text());
    app.set_config("--config", "", "Read defaults from a key=value file");
    app.add_flag("--quiet", quiet, "Suppress informational stderr logs");
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count_cmd = app.add_subcommand("count", "Count motif matches");
    count_cmd->fallthrough();
    add_graph_options(count_cmd, count_args.graph);
    count_cmd->add_option("--motif", count_args.motif_file, "Motif query file")->required();
    count_cmd->add_option("--workers", count_args.workers, "Worker threads (0 = cores)");
    count_cmd->add_flag("--induced", count_args.induced, "Induced matching");
    count_cmd->add_option("--timeout", count_args.timeout_secs, "Seconds before giving up");

    FindArgs find_args;
    CLI::App* find_cmd = app.add_subcommand("find", "Enumerate matches as NDJSON");
    find_cmd->fallthrough();
    add_graph_options(find_cmd, find_args.base.graph);
    find_cmd->add_option("--motif", find_args.base.motif_file, "Motif query file")->required();
    find_cmd->add_option("--workers", find_args.base.workers, "Worker threads (0 = cores)");
    find_cmd->add_flag("--induced", find_args.base.induced, "Induced matching");
    find_cmd->add_option("--timeout", find_args.base.timeout_secs, "Seconds before giving up");
    find_cmd->add_option("--limit", find_args.limit, "Stop after this many matches");
    find_cmd->add_option("--out", find_args.out_file, "Write NDJSON here instead of stdout");

    RandomizeArgs rand_args;
    CLI::App* rand_cmd = app.add_subcommand("randomize", "Generate a null ensemble");
    rand_cmd->fallthrough();
    add_graph_options(rand_cmd, rand_args.graph);
    rand_cmd->add_option("--samples", rand_args.samples, "Number of samples")->required();
    rand_cmd->add_option("--seed", rand_args.seed, "Ensemble seed");
    rand_cmd->add_option("--swap-factor", rand_args.swap_factor, "Attempts per edge");
    rand_cmd->add_option("--workers", rand_args.workers, "Worker threads (0 = cores)");
    rand_cmd->add_option("--out", rand_args.out_dir, "Output directory")->required();

    DiscoverArgs disc_args;
    CLI::App* disc_cmd = app.add_subcommand("discover", "Run the discovery pipeline");
    disc_cmd->fallthrough();
    add_graph_options(disc_cmd, disc_args.graph);
    disc_cmd->add_option("--size-min", disc_args.cfg.size_min, "Seed motif size");
    disc_cmd->add_option("--size-max", disc_args.cfg.size_max, "Largest motif size");
    disc_cmd->add_option("--target", disc_args.cfg.target_count, "Motifs to isolate");
    disc_cmd->add_option("--nulls", disc_args.cfg.n_samples, "Null ensemble size");
    disc_cmd->add_option("--z-min", disc_args.cfg.criteria.z_min, "Significance z threshold");
    disc_cmd->add_option("--p-max", disc_args.cfg.criteria.p_max, "Significance p threshold");
    disc_cmd->add_option("--min-count", disc_args.cfg.criteria.min_count,
                         "Minimum observed count");
    disc_cmd->add_option("--steer", disc_args.steer, "Topology filter: ff, rec, none");
    disc_cmd->add_option("--attr-keys", disc_args.cfg.attribute_keys,
                         "Vertex attribute keys eligible for refinement")
        ->delimiter(',');
    disc_cmd->add_option("--seed", disc_args.cfg.seed, "Pipeline seed");
    disc_cmd->add_option("--swap-factor", disc_args.cfg.swap_factor, "Attempts per edge");
    disc_cmd->add_option("--max-rounds", disc_args.cfg.max_rounds, "Refinement round cap");
    disc_cmd->add_option("--frontier-cap", disc_args.cfg.frontier_cap,
                         "Candidates kept per round");
    disc_cmd->add_option("--budget", disc_args.budget_secs, "Per-motif seconds");
    disc_cmd->add_option("--workers", disc_args.cfg.workers, "Worker threads (0 = cores)");
    disc_cmd->add_option("--out", disc_args.out_dir, "Output directory")->required();

    ReportArgs report_args;
    CLI::App* report_cmd = app.add_subcommand("report", "Render a results.json");
    report_cmd->fallthrough();
    report_cmd->add_option("--results", report_args.results_file, "results.json path")
        ->required();
    report_cmd->add_option("--format", report_args.format, "table, markdown, or json")
        ->check(CLI::IsMember({"table", "markdown", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_args);
        if (find_cmd->parsed()) return run_find(find_args);
        if (rand_cmd->parsed()) return run_randomize(rand_args);
        if (disc_cmd->parsed()) return run_discover(disc_args);
        if (report_cmd->parsed()) return run_report(report_args);
    } catch (const motifkit::ParseError& e) {
        fail("motif parse error at " + std::to_string(e.line) + ":" +
             std::to_string(e.column) + ": " + e.what());
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        fail(e.what());
        return exit_usage;
    } catch (const motifkit::TooFewEdges& e) {
        fail(e.what());
        return exit_input;
    } catch (const motifkit::EnsembleFailure& e) {
        fail(e.what());
        return exit_input;
    } catch (const motifkit::GraphError& e) {
        fail(e.what());
        return exit_input;
    } catch (const std::bad_alloc&) {
        fail("out of memory");
        return exit_resource;
    } catch (const std::exception& e) {
        fail(e.what());
        return exit_input;
    }
    return exit_usage;
}
