#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "ontolink/annotations.hpp"
#include "ontolink/config.hpp"
#include "ontolink/corpus.hpp"
#include "ontolink/errors.hpp"
#include "ontolink/features.hpp"
#include "ontolink/http.hpp"
#include "ontolink/obo.hpp"
#include "ontolink/probe.hpp"
#include "ontolink/report.hpp"
#include "ontolink/stats.hpp"
#include "ontolink/textio.hpp"
#include "ontolink/zipf.hpp"

using namespace ontolink;

namespace {

struct Overrides {
    std::string config_file;
    std::optional<std::string> ontology, ontology_path, annotation_path, aspect, root;
    std::optional<std::string> corpus_cache, probe_cache, output_dir;
    std::optional<std::string> provider_endpoint, provider_model, provider_key_env;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> zipf_sample;
    std::optional<double> zipf_jitter, join_threshold;
    std::optional<int> max_in_flight;
    bool offline = false;
};

void add_common_options(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("-c,--config", ov.config_file, "key = value configuration file");
    cmd->add_option("--ontology", ov.ontology, "ontology kind: hpo or go-cc");
    cmd->add_option("--ontology-path", ov.ontology_path, "OBO flat file");
    cmd->add_option("--annotation-path", ov.annotation_path,
                    "phenotype.hpoa (HPO) or uniprot_sprot.dat (GO)");
    cmd->add_option("--aspect", ov.aspect, "GO aspect filter: C, F, or P");
    cmd->add_option("--root", ov.root, "explicit root CURIE when autodetection is ambiguous");
    cmd->add_option("--corpus-cache", ov.corpus_cache, "PMC count cache (JSONL)");
    cmd->add_option("--probe-cache", ov.probe_cache, "LLM exchange cache (JSONL)");
    cmd->add_option("-o,--output-dir", ov.output_dir, "artifact directory");
    cmd->add_option("--seed", ov.seed, "seed for all sampling and jitter");
    cmd->add_option("--provider-endpoint", ov.provider_endpoint, "chat-completion URL");
    cmd->add_option("--provider-model", ov.provider_model, "model identifier");
    cmd->add_option("--provider-key-env", ov.provider_key_env,
                    "env var holding the API credential");
    cmd->add_option("--max-in-flight", ov.max_in_flight, "concurrent probe requests");
    cmd->add_option("--join-threshold", ov.join_threshold,
                    "tolerated feature/probe mismatch fraction");
    cmd->add_option("--zipf-sample", ov.zipf_sample, "points in the Zipf sample");
    cmd->add_option("--zipf-jitter", ov.zipf_jitter, "jitter amplitude in log10 units");
    cmd->add_flag("--offline", ov.offline, "forbid all network use (caches only)");
}

RunConfig resolve_config(const Overrides& ov) {
    RunConfig cfg;
    if (!ov.config_file.empty()) cfg = load_config(ov.config_file);
    if (ov.ontology) apply_config_line(cfg, "ontology", *ov.ontology);
    if (ov.ontology_path) apply_config_line(cfg, "ontology_path", *ov.ontology_path);
    if (ov.annotation_path) apply_config_line(cfg, "annotation_path", *ov.annotation_path);
    if (ov.aspect) apply_config_line(cfg, "aspect", *ov.aspect);
    if (ov.root) apply_config_line(cfg, "root", *ov.root);
    if (ov.corpus_cache) apply_config_line(cfg, "corpus_cache", *ov.corpus_cache);
    if (ov.probe_cache) apply_config_line(cfg, "probe_cache", *ov.probe_cache);
    if (ov.output_dir) apply_config_line(cfg, "output_dir", *ov.output_dir);
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.provider_endpoint) cfg.provider.endpoint = *ov.provider_endpoint;
    if (ov.provider_model) cfg.provider.model = *ov.provider_model;
    if (ov.provider_key_env) cfg.provider.credential_env = *ov.provider_key_env;
    if (ov.max_in_flight) cfg.provider.max_in_flight = *ov.max_in_flight;
    if (ov.join_threshold) cfg.join_threshold = *ov.join_threshold;
    if (ov.zipf_sample) cfg.zipf_sample = *ov.zipf_sample;
    if (ov.zipf_jitter) cfg.zipf_jitter = *ov.zipf_jitter;
    if (ov.offline) cfg.offline = true;
    cfg.provider.offline = cfg.offline;

    std::filesystem::create_directories(cfg.output_dir);
    if (cfg.corpus_cache_path.empty()) cfg.corpus_cache_path = cfg.output_dir / "corpus_cache.jsonl";
    if (cfg.probe_cache_path.empty()) cfg.probe_cache_path = cfg.output_dir / "probe_cache.jsonl";
    return cfg;
}

void require_file(const std::filesystem::path& p, const char* what) {
    if (p.empty()) throw Error(std::string(what) + " not configured");
    if (!std::filesystem::exists(p)) {
        throw Error(std::string(what) + " not found: " + p.string());
    }
}

ParsedOntology load_ontology(const RunConfig& cfg) {
    require_file(cfg.ontology_path, "ontology_path");
    auto parsed = parse_obo(read_file(cfg.ontology_path), cfg.root_override);
    std::cerr << "ontology: " << parsed.graph.non_obsolete_count() << " terms, root "
              << (parsed.graph.has_root() ? parsed.graph.root().str() : std::string("-"))
              << ", " << parsed.report.unreachable.size() << " unreachable\n";
    return parsed;
}

ParsedAnnotations load_annotations(const RunConfig& cfg) {
    require_file(cfg.annotation_path, "annotation_path");
    std::string text = read_file(cfg.annotation_path);
    ParsedAnnotations parsed = cfg.ontology == OntologyKind::HPO
                                   ? parse_hpoa(text)
                                   : parse_swissprot_go(text, cfg.effective_aspect());
    std::cerr << "annotations: " << parsed.table.total_entries << " entries, "
              << parsed.table.counts.size() << " distinct ids, " << parsed.skips.skipped
              << " skipped\n";
    return parsed;
}

void write_parse_report(const RunConfig& cfg, const OboParseReport& report) {
    std::string out;
    out += "terms: " + std::to_string(report.term_count) + "\n";
    out += "obsolete: " + std::to_string(report.obsolete_count) + "\n";
    out += "discarded_relationship_lines: " +
           std::to_string(report.discarded_relationship_lines) + "\n";
    out += "unreachable: " + std::to_string(report.unreachable.size()) + "\n";
    for (const auto& id : report.unreachable) out += "  " + id.str() + "\n";
    write_file(cfg.output_dir / "parse_report.txt", out);
}

void write_skip_report(const RunConfig& cfg, const SkipReport& skips, const char* name) {
    std::string out = "skipped: " + std::to_string(skips.skipped) + "\n";
    for (const auto& s : skips.samples) out += "  " + s + "\n";
    write_file(cfg.output_dir / name, out);
}

PmcCounter make_pmc_counter(const RunConfig& cfg, CorpusCache& cache, HttpClient* http) {
    PmcClientOptions opts;
    opts.endpoint = cfg.corpus_endpoint;
    opts.offline = cfg.offline;
    opts.throttle = std::chrono::milliseconds(cfg.corpus_throttle_ms);
    opts.initial_backoff = std::chrono::milliseconds(cfg.corpus_backoff_ms);
    if (const char* key = std::getenv("NCBI_API_KEY")) opts.api_key = key;
    opts.failure_log = cfg.output_dir / "corpus_failures.log";
    return PmcCounter(cache, cfg.offline ? nullptr : http, opts);
}

// ---- subcommands ----------------------------------------------------------

int cmd_profile(const RunConfig& cfg) {
    auto parsed = load_ontology(cfg);
    ProfileReport profile = ontology_profile(parsed.graph);
    if (!cfg.annotation_path.empty()) {
        auto ann = load_annotations(cfg);
        add_annotation_rows(profile, parsed.graph, ann.table);
        auto rec = reconcile_annotations(ann.table, parsed.graph);
        std::string out = "annotation ids not in ontology: " +
                          std::to_string(rec.unknown_count) + "\n";
        for (const auto& id : rec.samples) out += "  " + id.str() + "\n";
        write_file(cfg.output_dir / "annotation_reconciliation.txt", out);
        write_skip_report(cfg, ann.skips, "annotation_skips.txt");
        write_annotation_counts_csv(ann.table, cfg.output_dir / "annotation_counts.csv");
    }
    write_parse_report(cfg, parsed.report);
    std::string name = ontology_kind_name(cfg.ontology);
    write_profile_csv(profile, name, cfg.output_dir / "profile.csv");
    write_profile_text(profile, name, cfg.output_dir / "profile.txt");
    std::cout << read_file(cfg.output_dir / "profile.txt");
    return 0;
}

int cmd_fetch_corpus(const RunConfig& cfg) {
    auto parsed = load_ontology(cfg);
    CorpusCache cache(cfg.corpus_cache_path);
    auto http = make_default_http_client();
    PmcCounter counter = make_pmc_counter(cfg, cache, http.get());

    std::size_t done = 0, total = parsed.graph.non_obsolete_count();
    for (const auto& id : parsed.graph.non_obsolete_ids()) {
        const auto& term = parsed.graph.term(id);
        counter.count(term_query(term.name));
        counter.count(identifier_query(id));
        if (++done % 200 == 0) {
            std::cerr << "  " << done << "/" << total << " terms ("
                      << counter.live_requests() << " live requests)\n";
        }
    }
    std::cerr << "corpus cache: " << cache.size() << " entries ("
              << counter.live_requests() << " live requests this run)\n";
    return 0;
}

int cmd_probe(const RunConfig& cfg) {
    auto parsed = load_ontology(cfg);
    ProbeCache cache(cfg.probe_cache_path);

    std::unique_ptr<HttpClient> http;
    std::unique_ptr<ChatClient> chat;
    if (!cfg.offline) {
        if (cfg.provider.endpoint.empty() || cfg.provider.model.empty()) {
            throw ConfigError("provider_endpoint and provider_model are required to probe live");
        }
        http = make_default_http_client();
        chat = make_chat_client(cfg.provider, http.get());
    }

    std::vector<TermRecord> terms;
    for (const auto& [id, rec] : parsed.graph.terms()) {
        if (!rec.obsolete) terms.push_back(rec);
    }
    ProbeRun run = run_probe(terms, cfg.provider, cache, chat.get());

    write_probe_csv(run.results, cfg.output_dir / "probe_results.csv");
    std::string unresolved;
    for (const auto& id : run.unresolved) unresolved += id.str() + "\n";
    write_file(cfg.output_dir / "probe_unresolved.txt", unresolved);

    bool partial = !run.unresolved.empty();
    std::cout << "probed " << run.results.size() << "/" << terms.size() << " terms";
    if (partial) std::cout << " (" << run.unresolved.size() << " unresolved; partial run)";
    std::cout << "\naccuracy: " << format_double(run.accuracy(partial), 6) << "\n";
    return 0;
}

int cmd_features(const RunConfig& cfg) {
    auto parsed = load_ontology(cfg);
    auto ann = load_annotations(cfg);
    write_skip_report(cfg, ann.skips, "annotation_skips.txt");

    CorpusCache cache(cfg.corpus_cache_path);
    auto http = make_default_http_client();
    PmcCounter counter = make_pmc_counter(cfg, cache, http.get());
    CorpusLookupFn lookup = [&](const std::string& q) { return counter.count(q).count; };

    auto probe_correct = read_probe_csv(cfg.output_dir / "probe_results.csv");

    std::vector<FeatureVector> vectors;
    std::vector<Curie> skipped_unreachable;
    for (const auto& id : parsed.graph.non_obsolete_ids()) {
        if (!parsed.graph.reachable(id)) {
            skipped_unreachable.push_back(id);
            continue;
        }
        vectors.push_back(
            build_feature_vector(parsed.graph.term(id), parsed.graph, ann.table, lookup));
    }

    JoinReport jr;
    Dataset ds = build_dataset(vectors, probe_correct, cfg.ontology, cfg.provider.model,
                               &jr, cfg.join_threshold);
    write_features_csv(ds, cfg.output_dir / "features.csv");

    std::string report;
    report += "matched: " + std::to_string(jr.matched) + "\n";
    report += "vectors_without_probe: " + std::to_string(jr.vectors_without_probe.size()) + "\n";
    for (const auto& id : jr.vectors_without_probe) report += "  " + id.str() + "\n";
    report += "probes_without_vector: " + std::to_string(jr.probes_without_vector.size()) + "\n";
    for (const auto& id : jr.probes_without_vector) report += "  " + id.str() + "\n";
    report += "unreachable_terms_skipped: " + std::to_string(skipped_unreachable.size()) + "\n";
    for (const auto& id : skipped_unreachable) report += "  " + id.str() + "\n";
    write_file(cfg.output_dir / "join_report.txt", report);

    std::cerr << "features: " << ds.rows.size() << " rows -> "
              << (cfg.output_dir / "features.csv").string() << "\n";
    return 0;
}

Dataset load_features(const RunConfig& cfg) {
    auto path = cfg.output_dir / "features.csv";
    require_file(path, "features.csv (run the features subcommand first)");
    return read_features_csv(path, cfg.ontology, cfg.provider.model);
}

int cmd_analyze(const RunConfig& cfg) {
    Dataset ds = load_features(cfg);
    std::string name = ontology_kind_name(cfg.ontology);

    UnivariateReport uni = univariate_report(ds);
    write_univariate_csv(uni, name, ds.model_name, cfg.output_dir / "univariate.csv");

    LogisticModel model = fit_logistic(ds);
    write_coefficients_csv(model, cfg.output_dir / "coefficients.csv");
    save_model_json(model, cfg.output_dir / "model.json");
    if (!model.converged || model.separation_suspected) {
        std::cerr << "warning: fit did not cleanly converge (possible separation); "
                  << "iterations=" << model.iterations << "\n";
    }

    MetricsReport m = metrics(model, ds);
    write_metrics_csv(m, name, ds.model_name, cfg.output_dir / "metrics.csv");

    std::cout << "n=" << ds.rows.size() << " accuracy=" << format_double(m.accuracy, 6)
              << " auc=" << format_double(m.auc, 6)
              << " mcfadden=" << format_double(m.mcfadden_r2, 6)
              << " tjur=" << format_double(m.tjur_r2, 6) << "\n";
    return 0;
}

int cmd_bins(const RunConfig& cfg) {
    Dataset ds = load_features(cfg);
    auto bins = annotation_bins(ds, cfg.bin_edges);
    write_bins_csv(bins, ontology_kind_name(cfg.ontology), ds.model_name,
                   cfg.output_dir / "bins.csv");
    for (const auto& b : bins) {
        std::cout << b.label << "\t" << b.total << "\t" << b.correct << "\t"
                  << format_double(b.accuracy, 6) << "\n";
    }
    return 0;
}

int cmd_desert(const RunConfig& cfg) {
    Dataset ds = load_features(cfg);
    DesertReport r = desert_report(ds);
    write_desert_csv(r, ontology_kind_name(cfg.ontology), ds.model_name,
                     cfg.output_dir / "desert.csv");
    write_desert_terms(r, cfg.output_dir / "desert_unused.txt");
    std::cout << "unused: " << r.unused_count << " ("
              << format_double(100.0 * r.unused_fraction, 4) << "%)\n"
              << "correct among unused: " << format_double(r.correct_among_unused, 6) << "\n"
              << "correct among used:   " << format_double(r.correct_among_used, 6) << "\n";
    return 0;
}

int cmd_zipf(const RunConfig& cfg) {
    auto parsed = load_ontology(cfg);
    auto ann = load_annotations(cfg);
    auto probe_correct = read_probe_csv(cfg.output_dir / "probe_results.csv");

    auto ranked = rank_terms(ann.table, parsed.graph.non_obsolete_ids());
    ZipfSample sample =
        zipf_points(ranked, probe_correct, cfg.zipf_sample, cfg.seed, cfg.zipf_jitter);
    if (sample.population_clipped) {
        std::cerr << "warning: sample size exceeds population; using all "
                  << sample.points.size() << " terms\n";
    }
    write_zipf_csv(sample.points, cfg.output_dir / "zipf_points.csv");
    write_file(cfg.output_dir / "zipf.svg", render_svg(sample.points));
    std::cerr << "zipf: " << sample.points.size() << " points -> "
              << (cfg.output_dir / "zipf.svg").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LLM term-to-identifier linking analysis over biomedical ontologies"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const RunConfig&);
    };
    const Sub subs[] = {
        {"profile", "ontology summary table (structure + annotation usage)", cmd_profile},
        {"fetch-corpus", "fill the PMC hit-count cache for every term", cmd_fetch_corpus},
        {"probe", "query the LLM for every term's identifier", cmd_probe},
        {"features", "assemble the per-term feature matrix", cmd_features},
        {"analyze", "univariate statistics + logistic regression + metrics", cmd_analyze},
        {"bins", "accuracy histogram over annotation-count buckets", cmd_bins},
        {"desert", "accuracy report partitioned by annotation status", cmd_desert},
        {"zipf", "rank-frequency plot data and SVG", cmd_zipf},
    };

    std::vector<Overrides> overrides(std::size(subs));
    for (std::size_t i = 0; i < std::size(subs); ++i) {
        auto* cmd = app.add_subcommand(subs[i].name, subs[i].help);
        add_common_options(cmd, overrides[i]);
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(subs); ++i) {
        if (!app.got_subcommand(subs[i].name)) continue;
        try {
            RunConfig cfg = resolve_config(overrides[i]);
            return subs[i].fn(cfg);
        } catch (const DegenerateError& e) {
            std::cerr << "error (degenerate statistics): " << e.what() << "\n";
            return 3;
        } catch (const NetworkError& e) {
            std::cerr << "error (network): " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 1;
}
