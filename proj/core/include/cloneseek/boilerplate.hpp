#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "cloneseek/extractor.hpp"

namespace cloneseek {

/// Named regular-expression patterns matched against a method flattened to
/// one token-per-space line. Ships with a built-in table covering getters,
/// setters, equals(), compareTo(), toString(), hashCode() and trivial
/// delegating constructors; an external pattern file can replace it.
class BoilerplateFilter {
public:
    BoilerplateFilter();  // built-in table

    /// Pattern file: one `name<TAB>regex` per line, '#' comments allowed.
    static BoilerplateFilter from_file(const std::string& path);
    static BoilerplateFilter from_patterns(
        const std::vector<std::pair<std::string, std::string>>& patterns);

    /// Name of the first matching pattern, or nullopt for substantive code.
    std::optional<std::string> match(const MethodRecord& method) const;

    bool is_boilerplate(const MethodRecord& method) const {
        return match(method).has_value();
    }

    /// The flattened single-line form the patterns run against.
    static std::string flatten(const MethodRecord& method);

private:
    struct Pattern {
        std::string name;
        std::regex regex;
    };
    std::vector<Pattern> patterns_;
};

}  // namespace cloneseek
