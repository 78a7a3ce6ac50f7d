#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cloneseek {

/// Token views of a method body, one per clone-type equivalence class:
/// r0 raw lexical, r1 layout-normalized raw, r2 identifier/literal
/// abstraction, r3 additional type abstraction.
enum class Rep : std::uint8_t { R0 = 0, R1 = 1, R2 = 2, R3 = 3 };
inline constexpr int kNumReps = 4;

struct TokenStream {
    Rep representation = Rep::R0;
    std::vector<std::string> tokens;
};

/// Multiset of joined token n-grams. Ordered map so iteration order is
/// canonical everywhere (serialization, tie-breaking).
struct NgramSet {
    Rep representation = Rep::R0;
    int n = 1;
    std::map<std::string, std::uint32_t> grams;

    std::uint64_t total_count() const {
        std::uint64_t t = 0;
        for (const auto& [g, c] : grams) t += c;
        return t;
    }
};

/// Separator between tokens inside a gram; cannot occur in a token.
inline constexpr char kGramSeparator = '\x1f';

TokenStream tokenize_r0(const std::vector<std::string>& body);
TokenStream tokenize_r1(const std::vector<std::string>& body);
TokenStream tokenize_r2(const std::vector<std::string>& body);
TokenStream tokenize_r3(const std::vector<std::string>& body);
TokenStream tokenize(const std::vector<std::string>& body, Rep rep);

NgramSet ngrams(const TokenStream& stream, int n);

/// The four gram sets of one body under the given per-representation sizes.
std::array<NgramSet, kNumReps> all_ngram_sets(const std::vector<std::string>& body,
                                              const std::array<int, kNumReps>& sizes);

}  // namespace cloneseek
