#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cloneseek/revisions.hpp"

namespace cloneseek {

/// Single-character insert/delete/substitute edit distance.
/// Memory-bounded two-row dynamic program; bodies can reach tens of KB.
std::uint64_t levenshtein(const std::string& a, const std::string& b);

struct SummaryStats {
    double min = 0, max = 0, mean = 0, std_dev = 0, median = 0;
};

SummaryStats summarize(std::vector<double> values);  // throws EmptyCorpus

struct BlockDistance {
    std::int64_t post_id = 0;
    std::int64_t local_id = 0;
    std::uint64_t distance = 0;  // original body vs latest body
};

struct EditStats {
    SummaryStats distances;         // per-block original-vs-latest distances
    SummaryStats answer_distances;  // per-answer summed distances
    SummaryStats revision_counts;   // per-answer revision counts
    std::vector<BlockDistance> per_block;
    std::map<std::int64_t, std::size_t> revisions_per_answer;
    /// Distance histogram: upper bin bounds 0, 10, 100, 1000, ... and a
    /// final open bin; bin totals sum to per_block.size().
    std::vector<std::pair<std::string, std::size_t>> histogram;
};

/// RQ-style analytics over a parsed dump: distances are measured on the
/// comment-stripped raw bodies, before layout normalization.
EditStats revision_stats(const std::vector<SnippetRevision>& revisions);

void write_stats_csv(const EditStats& stats, const std::string& out_path);
void write_block_distances_csv(const EditStats& stats, const std::string& out_path);

}  // namespace cloneseek
