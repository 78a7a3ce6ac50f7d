#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cloneseek/config.hpp"
#include "cloneseek/represent.hpp"

namespace cloneseek {

/// Parsed form of a `{post}_{local}_{label}` document id.
struct RevisionKey {
    std::int64_t post_id = 0;
    std::int64_t local_id = 0;
    std::string history_label;  // "original", "1", "2", ..., "latest"

    bool operator==(const RevisionKey&) const = default;
};

std::string make_doc_id(std::int64_t post_id, std::int64_t local_id,
                        const std::string& history_label);
std::optional<RevisionKey> parse_doc_id(const std::string& doc_id);

/// Source location of a corpus method, used when project methods are the
/// indexed side (configuration tuning).
struct DocLocation {
    std::string project_id;
    std::string path;
    int start_line = 0;
    int end_line = 0;
};

struct Doc {
    std::string doc_id;
    std::vector<std::string> body;  // normalized lines
    std::optional<RevisionKey> revision;
    std::optional<DocLocation> location;
};

struct Posting {
    std::uint32_t doc = 0;    // index into docs(), stable after finalize()
    std::uint32_t count = 0;  // occurrences of the gram in the doc
};

/// Document-frequency view over a finalized index; what query reduction
/// consumes. Grams absent from the map have df 0.
struct IndexStats {
    std::uint64_t doc_count = 0;
    const std::map<std::string, std::vector<Posting>>* postings[kNumReps] = {};

    std::uint32_t df(Rep rep, const std::string& gram) const;
};

/// Per-representation inverted index from n-grams to snippet documents.
/// Build with add(), then finalize() once; queries only after finalize.
/// Finalization sorts documents by doc_id and rebuilds postings, so search
/// results do not depend on ingestion order.
class InvertedIndex {
public:
    explicit InvertedIndex(SearchConfig cfg);

    /// Throws TooSmall when body is under min_clone_size lines and
    /// DuplicateDoc when the doc_id was already added.
    void add(Doc doc);

    void finalize();
    bool finalized() const { return finalized_; }

    const SearchConfig& config() const { return cfg_; }
    std::size_t doc_count() const { return docs_.size(); }
    const Doc& doc(std::size_t idx) const { return docs_[idx]; }
    const std::vector<Doc>& docs() const { return docs_; }
    const Doc* find_doc(const std::string& doc_id) const;

    const std::vector<Posting>* postings(Rep rep, const std::string& gram) const;
    IndexStats stats() const;

    /// The doc labeled `latest` for a (post, local) block, or nullptr.
    const Doc* latest_for(std::int64_t post_id, std::int64_t local_id) const;

    /// Canonical binary serialization; save-load-save is byte identical.
    void save(const std::string& path) const;
    static InvertedIndex load(const std::string& path);

private:
    SearchConfig cfg_;
    std::vector<Doc> docs_;
    bool finalized_ = false;
    std::array<std::map<std::string, std::vector<Posting>>, kNumReps> postings_;
    std::unordered_map<std::string, std::uint32_t> by_id_;
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> latest_;
};

}  // namespace cloneseek
