#include "cloneseek/search.hpp"

#include <algorithm>
#include <map>

#include "cloneseek/errors.hpp"

namespace cloneseek {

std::vector<std::string> reduce_query(const NgramSet& grams, Rep rep,
                                      const IndexStats& stats,
                                      const SearchConfig& cfg) {
    std::vector<std::pair<std::uint32_t, std::string>> ranked;
    ranked.reserve(grams.grams.size());
    for (const auto& [gram, count] : grams.grams) {
        ranked.emplace_back(stats.df(rep, gram), gram);
    }
    std::sort(ranked.begin(), ranked.end());  // df ascending, then gram
    std::size_t keep = std::min<std::size_t>(
        ranked.size(), static_cast<std::size_t>(cfg.qr_threshold[static_cast<int>(rep)]));
    std::vector<std::string> out;
    out.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) out.push_back(std::move(ranked[i].second));
    return out;
}

std::vector<SearchHit> search_body(const std::vector<std::string>& body,
                                   const InvertedIndex& index,
                                   const SearchConfig& cfg) {
    const IndexStats stats = index.stats();
    auto query_sets = all_ngram_sets(body, cfg.ngram_size);

    std::array<std::vector<std::string>, kNumReps> reduced;
    bool any = false;
    for (int r = 0; r < kNumReps; ++r) {
        reduced[r] = reduce_query(query_sets[r], static_cast<Rep>(r), stats, cfg);
        any = any || !reduced[r].empty();
    }
    if (!any) throw EmptyQuery("query reduced to zero grams in all representations");

    // matches[doc][rep] = number of reduced grams the doc contains
    std::map<std::uint32_t, std::array<int, kNumReps>> matches;
    for (int r = 0; r < kNumReps; ++r) {
        for (const std::string& gram : reduced[r]) {
            const std::vector<Posting>* plist = index.postings(static_cast<Rep>(r), gram);
            if (!plist) continue;
            for (const Posting& p : *plist) ++matches[p.doc][r];
        }
    }

    std::vector<SearchHit> hits;
    for (const auto& [doc_idx, per_rep] : matches) {
        SearchHit hit;
        hit.doc_id = index.doc(doc_idx).doc_id;
        bool passes = false;
        for (int r = 0; r < kNumReps; ++r) {
            double sim = reduced[r].empty()
                             ? 0.0
                             : 100.0 * per_rep[r] / static_cast<double>(reduced[r].size());
            hit.per_rep_similarity[r] = sim;
            if (!reduced[r].empty() && sim >= cfg.sim_threshold[r]) passes = true;
            double w = (r == 0 && cfg.boosting > 0) ? cfg.boosting : 1.0;
            hit.score += w * sim;
        }
        if (passes) hits.push_back(std::move(hit));
    }

    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i].rank = static_cast<int>(i) + 1;
    return hits;
}

std::vector<SearchHit> search(const MethodRecord& method,
                              const InvertedIndex& index,
                              const SearchConfig& cfg) {
    return search_body(method.body, index, cfg);
}

}  // namespace cloneseek
