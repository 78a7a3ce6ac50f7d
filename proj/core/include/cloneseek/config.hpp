#pragma once

#include <array>
#include <string>

#include "cloneseek/represent.hpp"

namespace cloneseek {

/// Full tunable parameter set of the search engine. Defaults are the
/// tuned configuration the tool ships with.
struct SearchConfig {
    std::array<int, kNumReps> ngram_size{1, 4, 4, 4};
    std::array<int, kNumReps> qr_threshold{9, 6, 5, 9};
    std::array<double, kNumReps> sim_threshold{50, 60, 70, 80};
    int boosting = -1;       // weight for r0; -1 disables boosting
    int min_clone_size = 6;  // lines, applied to indexed snippets and queries

    /// Throws ConfigError if any field is outside its allowed range.
    void validate() const;

    bool operator==(const SearchConfig&) const = default;

    /// Canonical key=value form (also the config-file format).
    std::string to_string() const;
};

/// Parses a key=value config document; unknown keys are rejected.
/// Missing keys keep their defaults.
SearchConfig parse_config(const std::string& text);
SearchConfig load_config_file(const std::string& path);

}  // namespace cloneseek
