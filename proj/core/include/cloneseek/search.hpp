#pragma once

#include <array>
#include <string>
#include <vector>

#include "cloneseek/extractor.hpp"
#include "cloneseek/index.hpp"

namespace cloneseek {

struct SearchHit {
    std::string doc_id;
    double score = 0;
    std::array<double, kNumReps> per_rep_similarity{};  // percentages
    int rank = 0;  // 1-based, dense
};

/// The qr_threshold[rep] rarest grams of the query (distinct grams, rarest
/// first, ties by lexicographic gram order). Grams the index has never seen
/// have df 0 and so come first.
std::vector<std::string> reduce_query(const NgramSet& grams, Rep rep,
                                      const IndexStats& stats,
                                      const SearchConfig& cfg);

/// One clone search. Candidates come from the postings of the reduced
/// query grams across all four representations; a candidate survives when
/// it reaches the similarity threshold of at least one representation.
/// Throws EmptyQuery when every representation reduces to nothing.
std::vector<SearchHit> search(const MethodRecord& method,
                              const InvertedIndex& index,
                              const SearchConfig& cfg);

/// Same search against pre-normalized body lines (snippet-side queries).
std::vector<SearchHit> search_body(const std::vector<std::string>& body,
                                   const InvertedIndex& index,
                                   const SearchConfig& cfg);

}  // namespace cloneseek
