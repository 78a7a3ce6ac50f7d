#include "cloneseek/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "cloneseek/errors.hpp"
#include "cloneseek/extractor.hpp"

namespace cloneseek {

std::uint64_t levenshtein(const std::string& a, const std::string& b) {
    if (a.size() < b.size()) return levenshtein(b, a);
    if (b.empty()) return a.size();
    std::vector<std::uint64_t> prev(b.size() + 1);
    std::vector<std::uint64_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::uint64_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

SummaryStats summarize(std::vector<double> values) {
    if (values.empty()) throw EmptyCorpus("no values to summarize");
    std::sort(values.begin(), values.end());
    SummaryStats s;
    s.min = values.front();
    s.max = values.back();
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(sq / static_cast<double>(values.size()));
    std::size_t n = values.size();
    s.median = (n % 2 == 1) ? values[n / 2]
                            : (values[n / 2 - 1] + values[n / 2]) / 2.0;
    return s;
}

EditStats revision_stats(const std::vector<SnippetRevision>& revisions) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<const SnippetRevision*>>
        blocks;
    std::map<std::int64_t, std::set<std::int64_t>> answer_seqs;
    for (const SnippetRevision& rev : revisions) {
        if (!rev.is_accepted) continue;
        blocks[{rev.post_id, rev.local_id}].push_back(&rev);
        answer_seqs[rev.post_id].insert(rev.history_seq);
    }
    if (blocks.empty()) throw EmptyCorpus("no accepted revisions in corpus");

    EditStats stats;
    std::map<std::int64_t, std::uint64_t> per_answer_distance;
    for (const auto& [key, revs] : blocks) {
        auto [min_it, max_it] = std::minmax_element(
            revs.begin(), revs.end(),
            [](const SnippetRevision* a, const SnippetRevision* b) {
                return a->history_seq < b->history_seq;
            });
        // Measured on the posted code after comment stripping, before any
        // layout normalization.
        std::string original = join_lines(strip_comments((*min_it)->body));
        std::string latest = join_lines(strip_comments((*max_it)->body));
        std::uint64_t dist = levenshtein(original, latest);
        stats.per_block.push_back({key.first, key.second, dist});
        per_answer_distance[key.first] += dist;
    }
    for (const auto& [post, seqs] : answer_seqs) {
        stats.revisions_per_answer[post] = seqs.size();
    }

    std::vector<double> dists, answer_dists, counts;
    for (const auto& b : stats.per_block) dists.push_back(static_cast<double>(b.distance));
    for (const auto& [post, d] : per_answer_distance)
        answer_dists.push_back(static_cast<double>(d));
    for (const auto& [post, c] : stats.revisions_per_answer)
        counts.push_back(static_cast<double>(c));
    stats.distances = summarize(dists);
    stats.answer_distances = summarize(answer_dists);
    stats.revision_counts = summarize(counts);

    // Bins: {0}, [1,10], (10,100], (100,1000], (1000,10000], >10000
    const std::uint64_t bounds[] = {0, 10, 100, 1000, 10000};
    std::vector<std::size_t> bin_counts(std::size(bounds) + 1, 0);
    for (const auto& b : stats.per_block) {
        std::size_t bin = std::size(bounds);
        for (std::size_t i = 0; i < std::size(bounds); ++i) {
            if (b.distance <= bounds[i]) {
                bin = i;
                break;
            }
        }
        ++bin_counts[bin];
    }
    stats.histogram.emplace_back("0", bin_counts[0]);
    stats.histogram.emplace_back("1-10", bin_counts[1]);
    stats.histogram.emplace_back("11-100", bin_counts[2]);
    stats.histogram.emplace_back("101-1000", bin_counts[3]);
    stats.histogram.emplace_back("1001-10000", bin_counts[4]);
    stats.histogram.emplace_back(">10000", bin_counts[5]);
    return stats;
}

namespace {

void write_summary_rows(std::ofstream& out, const std::string& metric,
                        const SummaryStats& s) {
    out << metric << ",min," << s.min << '\n'
        << metric << ",max," << s.max << '\n'
        << metric << ",mean," << s.mean << '\n'
        << metric << ",std," << s.std_dev << '\n'
        << metric << ",median," << s.median << '\n';
}

}  // namespace

void write_stats_csv(const EditStats& stats, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + out_path);
    out << "metric,stat,value\n";
    out << "blocks,count," << stats.per_block.size() << '\n';
    out << "answers,count," << stats.revisions_per_answer.size() << '\n';
    write_summary_rows(out, "block_edit_distance", stats.distances);
    write_summary_rows(out, "answer_edit_distance", stats.answer_distances);
    write_summary_rows(out, "revisions_per_answer", stats.revision_counts);
    for (const auto& [bin, count] : stats.histogram) {
        out << "distance_histogram," << bin << ',' << count << '\n';
    }
    if (!out) throw IoError("write failed: " + out_path);
}

void write_block_distances_csv(const EditStats& stats, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + out_path);
    out << "post_id,local_id,edit_distance\n";
    for (const auto& b : stats.per_block) {
        out << b.post_id << ',' << b.local_id << ',' << b.distance << '\n';
    }
    if (!out) throw IoError("write failed: " + out_path);
}

}  // namespace cloneseek
