// Batch command-line surface for the revision-aware clone search pipeline:
// index, scan, tune, tier, stats. Exit codes: 0 success, 2 malformed or
// insufficient input data, 3 I/O failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cloneseek/config.hpp"
#include "cloneseek/errors.hpp"
#include "cloneseek/manifest.hpp"
#include "cloneseek/metrics.hpp"
#include "cloneseek/revisions.hpp"
#include "cloneseek/tiering.hpp"
#include "cloneseek/tuner.hpp"

namespace {

using Clock = std::chrono::steady_clock;

bool verbose() {
    const char* v = std::getenv("CLONESEEK_LOG");
    return v && std::string(v) != "0";
}

void info(const std::string& msg) {
    if (verbose()) std::cerr << "[cloneseek] " << msg << '\n';
}

cloneseek::SearchConfig load_config_or_default(const std::string& path) {
    if (path.empty()) return cloneseek::SearchConfig{};
    return cloneseek::load_config_file(path);
}

struct ManifestWriter {
    cloneseek::RunManifest manifest;
    std::string log_path;
    Clock::time_point start = Clock::now();

    void add_input(const std::string& path) {
        manifest.input_digests[path] = cloneseek::file_digest(path);
    }
    void finish() {
        manifest.duration_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                .count());
        cloneseek::append_manifest(manifest, log_path);
    }
};

int run_index(const std::string& dump, const std::string& out,
              const std::string& config_path, const std::string& manifest_path) {
    cloneseek::SearchConfig cfg = load_config_or_default(config_path);
    ManifestWriter mw{{"index", cfg.to_string(), {}, {out}},
                      manifest_path.empty() ? out + ".manifest" : manifest_path};
    mw.add_input(dump);
    if (!config_path.empty()) mw.add_input(config_path);

    auto revisions = cloneseek::parse_revision_dump(dump);
    cloneseek::InvertedIndex index(cfg);
    cloneseek::IngestReport report = cloneseek::ingest_revisions(revisions, index);
    index.save(out);
    mw.finish();
    std::cout << "answers=" << report.answers << " blocks=" << report.blocks
              << " indexed=" << report.revisions_indexed
              << " skipped_too_small=" << report.skipped_too_small
              << " deduplicated=" << report.deduplicated << '\n';
    info("index written to " + out);
    return 0;
}

int run_scan(const std::string& index_path, const std::string& project,
             const std::string& out, const std::string& config_path,
             const std::string& patterns_path, int jobs,
             const std::string& manifest_path) {
    cloneseek::SearchConfig cfg = load_config_or_default(config_path);
    ManifestWriter mw{{"scan", cfg.to_string(), {}, {out}},
                      manifest_path.empty() ? out + ".manifest" : manifest_path};
    mw.add_input(index_path);
    if (!config_path.empty()) mw.add_input(config_path);

    cloneseek::InvertedIndex index = cloneseek::InvertedIndex::load(index_path);
    cloneseek::ScanOptions options;
    options.jobs = jobs;
    cloneseek::BoilerplateFilter filter;
    if (!patterns_path.empty()) {
        filter = cloneseek::BoilerplateFilter::from_file(patterns_path);
        mw.add_input(patterns_path);
    }
    options.filter = &filter;
    auto recs = cloneseek::scan_project(project, index, cfg, options);
    cloneseek::write_recommendations_csv(recs, out);
    mw.finish();
    std::cout << "recommendations=" << recs.size() << '\n';
    return 0;
}

int run_tune(const std::string& grid_path, const std::string& truth_path,
             const std::string& corpus, const std::string& out,
             const std::string& manifest_path) {
    cloneseek::GridSpec grid = cloneseek::load_grid_file(grid_path);
    auto truth = cloneseek::read_ground_truth_csv(truth_path);
    std::string truth_base =
        std::filesystem::path(truth_path).parent_path().string();
    cloneseek::Tuner tuner(corpus, truth, truth_base);

    ManifestWriter mw{{"tune", "", {}, {out}},
                      manifest_path.empty() ? out + ".manifest" : manifest_path};
    mw.add_input(grid_path);
    mw.add_input(truth_path);

    info("evaluating " + std::to_string(grid.enumerate().size()) + " grid points over " +
         std::to_string(tuner.tunable_pairs()) + " ground-truth pairs");
    cloneseek::GridSearchResult result = tuner.grid_search(grid);
    cloneseek::write_score_table_csv(result, out);
    mw.manifest.config_snapshot = result.best.to_string();
    mw.finish();
    std::cout << "best_mrr=" << result.best_mrr << '\n'
              << result.best.to_string();
    return 0;
}

int run_tier(const std::string& metadata, const std::string& out,
             const std::string& manifest_path) {
    ManifestWriter mw{{"tier", "", {}, {out}},
                      manifest_path.empty() ? out + ".manifest" : manifest_path};
    mw.add_input(metadata);
    auto projects = cloneseek::read_project_metadata_csv(metadata);
    projects = cloneseek::tier_projects(std::move(projects));
    cloneseek::write_tiered_csv(projects, out);
    mw.finish();
    std::cout << "projects=" << projects.size() << '\n';
    return 0;
}

int run_stats(const std::string& dump, const std::string& out,
              const std::string& distances_out, const std::string& manifest_path) {
    ManifestWriter mw{{"stats", "", {}, {out}},
                      manifest_path.empty() ? out + ".manifest" : manifest_path};
    mw.add_input(dump);
    auto revisions = cloneseek::parse_revision_dump(dump);
    cloneseek::EditStats stats = cloneseek::revision_stats(revisions);
    cloneseek::write_stats_csv(stats, out);
    if (!distances_out.empty()) {
        cloneseek::write_block_distances_csv(stats, distances_out);
        mw.manifest.output_paths.push_back(distances_out);
    }
    mw.finish();
    std::cout << "blocks=" << stats.per_block.size()
              << " answers=" << stats.revisions_per_answer.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Revision-aware method-level code clone search"};
    app.require_subcommand(1);

    std::string dump, out, config_path, manifest_path;
    std::string index_path, project, patterns_path;
    std::string grid_path, truth_path, corpus, metadata, distances_out;
    int jobs = 1;

    auto* cmd_index = app.add_subcommand("index", "Build a snippet-revision index from a dump");
    cmd_index->add_option("--dump", dump, "Revision dump file")->required();
    cmd_index->add_option("--out", out, "Output index file")->required();
    cmd_index->add_option("--config", config_path, "Search config file");
    cmd_index->add_option("--manifest", manifest_path, "Manifest log path");

    auto* cmd_scan = app.add_subcommand("scan", "Scan a project for outdated snippet clones");
    cmd_scan->add_option("--index", index_path, "Index file")->required();
    cmd_scan->add_option("--project", project, "Project root directory")->required();
    cmd_scan->add_option("--out", out, "Recommendations CSV")->required();
    cmd_scan->add_option("--config", config_path, "Search config file");
    cmd_scan->add_option("--patterns", patterns_path, "Boilerplate pattern file");
    cmd_scan->add_option("--jobs", jobs, "Worker thread cap");
    cmd_scan->add_option("--manifest", manifest_path, "Manifest log path");

    auto* cmd_tune = app.add_subcommand("tune", "Grid search maximizing MRR");
    cmd_tune->add_option("--grid", grid_path, "Grid JSON file")->required();
    cmd_tune->add_option("--truth", truth_path, "Ground-truth CSV")->required();
    cmd_tune->add_option("--corpus", corpus, "Corpus directory to index")->required();
    cmd_tune->add_option("--out", out, "Score table CSV")->required();
    cmd_tune->add_option("--manifest", manifest_path, "Manifest log path");

    auto* cmd_tier = app.add_subcommand("tier", "Assign popularity tiers by metric quartiles");
    cmd_tier->add_option("--metadata", metadata, "Project metadata CSV")->required();
    cmd_tier->add_option("--out", out, "Tiered CSV")->required();
    cmd_tier->add_option("--manifest", manifest_path, "Manifest log path");

    auto* cmd_stats = app.add_subcommand("stats", "Revision-count and edit-size analytics");
    cmd_stats->add_option("--dump", dump, "Revision dump file")->required();
    cmd_stats->add_option("--out", out, "Stats CSV")->required();
    cmd_stats->add_option("--distances", distances_out, "Per-block distance CSV");
    cmd_stats->add_option("--manifest", manifest_path, "Manifest log path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_index->parsed()) return run_index(dump, out, config_path, manifest_path);
        if (cmd_scan->parsed())
            return run_scan(index_path, project, out, config_path, patterns_path, jobs,
                            manifest_path);
        if (cmd_tune->parsed())
            return run_tune(grid_path, truth_path, corpus, out, manifest_path);
        if (cmd_tier->parsed()) return run_tier(metadata, out, manifest_path);
        if (cmd_stats->parsed())
            return run_stats(dump, out, distances_out, manifest_path);
    } catch (const cloneseek::SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cloneseek::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cloneseek::TooFewProjects& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cloneseek::EmptyQuerySet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cloneseek::EmptyCorpus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cloneseek::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cloneseek::CorruptIndex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cloneseek::FormatVersionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
