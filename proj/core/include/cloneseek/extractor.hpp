#pragma once

#include <string>
#include <vector>

namespace cloneseek {

struct SourceFile {
    std::string project_id;
    std::string path;                 // relative to the project root
    std::vector<std::string> lines;   // 1-based when addressed by line number
};

struct MethodRecord {
    std::string project_id;
    std::string path;
    std::string method_name;
    int start_line = 0;  // original-file line numbers, inclusive
    int end_line = 0;
    std::vector<std::string> body;  // comment-free, layout-normalized
};

/// Removes // and /* */ comments. String and char literals are preserved
/// verbatim. Lines that held only comments are dropped; every surviving
/// line is trimmed of leading and trailing whitespace.
std::vector<std::string> strip_comments(const std::vector<std::string>& lines);

/// Same removal but keeps the line count (comment text blanked in place),
/// so token line numbers still address the original file.
std::vector<std::string> strip_comments_keep_lines(const std::vector<std::string>& lines);

/// Deterministic pretty printer, see docs/format.md for the style table.
/// Idempotent: normalize(normalize(x)) == normalize(x).
std::vector<std::string> normalize_layout(const std::vector<std::string>& lines);

/// Methods and constructors found by brace matching, nested and anonymous
/// class methods included. Records whose normalized body has fewer than
/// min_lines lines are dropped. Throws UnparsableFile when brace balancing
/// fails irrecoverably.
std::vector<MethodRecord> extract_methods(const SourceFile& file, int min_lines = 1);

/// Snippet-side entry point: bare statement sequences are wrapped in a
/// synthetic method shell so both sides of a search share one unit.
/// Returns the normalized body lines of the wrapped snippet, or an empty
/// vector when nothing extractable remains.
std::vector<std::string> wrap_snippet(const std::vector<std::string>& snippet_lines);

std::string join_lines(const std::vector<std::string>& lines);

}  // namespace cloneseek
