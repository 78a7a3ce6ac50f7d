#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cloneseek/index.hpp"
#include "cloneseek/search.hpp"

namespace cloneseek {

/// Clone provenance classes; only QS, EX and UD participate in tuning.
enum class ClonePattern { QS, EX, UD, SQ, BP, IN, NC };

std::optional<ClonePattern> parse_pattern(const std::string& name);
bool pattern_tunable(ClonePattern pattern);

struct GroundTruthPair {
    std::string query_file;  // snippet path, relative to the truth CSV
    std::string project_id;
    std::string path;
    int start_line = 0;
    int end_line = 0;
    ClonePattern pattern = ClonePattern::NC;
};

/// CSV columns: query_file,project,path,start,end,pattern (header required).
std::vector<GroundTruthPair> read_ground_truth_csv(const std::string& path);

/// A hit resolves to the expected location when project and path agree and
/// the line ranges overlap by at least half of the shorter range.
bool resolves_to(const Doc& doc, const GroundTruthPair& expected);

/// 1/rank of the first resolving hit; 0 when none resolves or hits are empty.
double reciprocal_rank(const std::vector<SearchHit>& hits,
                       const GroundTruthPair& expected,
                       const InvertedIndex& index);

/// Arithmetic mean; throws EmptyQuerySet on an empty input.
double mean_reciprocal_rank(const std::vector<double>& per_query_rr);

/// Candidate value lists per tunable field; the cartesian product is the grid.
struct GridSpec {
    std::vector<std::array<int, kNumReps>> ngram_size;
    std::vector<std::array<int, kNumReps>> qr_threshold;
    std::vector<std::array<double, kNumReps>> sim_threshold;
    std::vector<int> boosting;
    std::vector<int> min_clone_size;

    void validate() const;  // non-empty lists, values within allowed ranges
    std::vector<SearchConfig> enumerate() const;
};

/// Parses a JSON grid document, e.g.
///   {"ngram_size": [[1,4,4,4]], "qr_threshold": [[9,6,5,9]],
///    "sim_threshold": [[50,60,70,80]], "boosting": [-1], "min_clone_size": [6]}
/// Missing keys default to the single shipped default value.
GridSpec parse_grid_json(const std::string& text);
GridSpec load_grid_file(const std::string& path);

struct GridPointScore {
    SearchConfig config;
    double mrr = 0;  // -1 marks a point whose evaluation failed
};

struct GridSearchResult {
    SearchConfig best;
    double best_mrr = 0;
    std::vector<GridPointScore> table;  // grid enumeration order
};

/// Tuning corpus: every method of every source file under the corpus root,
/// indexed with per-method locations. Indexes are cached per
/// (ngram sizes, min_clone_size) across grid points.
class Tuner {
public:
    /// truth_base resolves relative query_file paths.
    Tuner(std::string corpus_root, std::vector<GroundTruthPair> ground_truth,
          std::string truth_base);

    /// MRR of one configuration over the tunable ground-truth pairs.
    double evaluate(const SearchConfig& cfg);

    /// Exhaustive evaluation; ties broken by smaller min_clone_size, then
    /// lexicographic config order. Failed points score -1.
    GridSearchResult grid_search(const GridSpec& grid);

    std::size_t tunable_pairs() const { return pairs_.size(); }

private:
    const InvertedIndex& index_for(const SearchConfig& cfg);

    std::string corpus_root_;
    std::string truth_base_;
    std::vector<GroundTruthPair> pairs_;
    std::vector<std::vector<std::string>> query_bodies_;  // raw snippet lines
    std::map<std::string, InvertedIndex> index_cache_;
};

void write_score_table_csv(const GridSearchResult& result, const std::string& out_path);

/// True when a comes before b in the deterministic config ordering used
/// for tie-breaking (lexicographic over all fields).
bool config_less(const SearchConfig& a, const SearchConfig& b);

}  // namespace cloneseek
