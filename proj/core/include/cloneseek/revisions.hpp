#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cloneseek/boilerplate.hpp"
#include "cloneseek/index.hpp"
#include "cloneseek/search.hpp"

namespace cloneseek {

/// One revision of one code block of one answer, as it appears in the
/// revision dump (see docs/format.md for the dump grammar).
struct SnippetRevision {
    std::int64_t post_id = 0;
    std::int64_t local_id = 0;
    std::int64_t history_seq = 0;  // 0 = first version
    bool is_accepted = false;
    std::vector<std::string> body;
};

struct IngestReport {
    std::size_t answers = 0;
    std::size_t blocks = 0;
    std::size_t revisions_indexed = 0;
    std::size_t skipped_too_small = 0;
    std::size_t deduplicated = 0;
    std::size_t skipped_not_accepted = 0;
};

struct Recommendation {
    std::string project_id;
    std::string path;
    std::string method_name;
    int start_line = 0;
    int end_line = 0;
    std::string matched_doc_id;
    std::int64_t latest_post_id = 0;
    std::vector<std::string> latest_body;
    std::uint64_t edit_distance = 0;
};

/// Body field escaping for the newline-delimited dump format.
std::string escape_body(const std::vector<std::string>& lines);
std::vector<std::string> unescape_body(const std::string& field);

/// Throws SchemaError (with 1-based line number) on malformed records.
std::vector<SnippetRevision> parse_revision_dump(const std::string& path);

/// Indexes every qualifying revision: accepted answers only, consecutive
/// identical bodies deduplicated, first revision labeled `original`, last
/// `latest`, single-revision blocks `latest` only.
IngestReport ingest_revisions(const std::vector<SnippetRevision>& revisions,
                              InvertedIndex& index);

struct ScanOptions {
    std::vector<std::string> extensions = {".java"};
    int jobs = 1;
    const BoilerplateFilter* filter = nullptr;  // nullptr = built-in table
};

/// Scans a project tree; a method whose rank-1 hit is a non-latest snippet
/// revision yields a Recommendation carrying that block's latest body.
/// Per-file parse failures are skipped, never fatal. Results are sorted by
/// (path, start_line) regardless of traversal order.
std::vector<Recommendation> scan_project(const std::string& project_root,
                                         const InvertedIndex& index,
                                         const SearchConfig& cfg,
                                         const ScanOptions& options = {});

void write_recommendations_csv(const std::vector<Recommendation>& recs,
                               const std::string& out_path);

}  // namespace cloneseek
