#include "cloneseek/boilerplate.hpp"

#include <fstream>

#include "cloneseek/errors.hpp"
#include "cloneseek/represent.hpp"

namespace cloneseek {

namespace {

// Patterns run against the token-flattened method (one space between
// lexical tokens), which makes them layout-independent.
const std::vector<std::pair<std::string, std::string>>& builtin_patterns() {
    static const std::vector<std::pair<std::string, std::string>> patterns = {
        {"getter",
         R"(^(?:(?:public|private|protected|static|final|synchronized) )*[\w$.]+(?: \[ \])* (?:get|is)[A-Z_$]\w* \( \) \{ return (?:this \. )?[\w$.]+(?: \( \))? ; \}$)"},
        {"setter",
         R"(^(?:(?:public|private|protected|static|final|synchronized) )*void set[A-Z_$]\w* \( (?:final )?[\w$.]+(?: \[ \])* [\w$]+ \) \{ (?:this \. )?[\w$]+ = [\w$]+ ; \}$)"},
        {"equals", R"(boolean equals \( (?:final )?(?:java \. lang \. )?Object [\w$]+ \))"},
        {"hashCode", R"(int hashCode \( \))"},
        {"toString", R"(String toString \( \))"},
        {"compareTo", R"(int compareTo \( )"},
        {"delegating_ctor",
         R"(^(?:(?:public|private|protected) )*[\w$]+ \( [^{}]* \) \{ (?:this|super) \( [^;{}]* \) ; \}$)"},
    };
    return patterns;
}

}  // namespace

BoilerplateFilter::BoilerplateFilter() {
    for (const auto& [name, rx] : builtin_patterns()) {
        patterns_.push_back({name, std::regex(rx, std::regex::ECMAScript)});
    }
}

BoilerplateFilter BoilerplateFilter::from_patterns(
    const std::vector<std::pair<std::string, std::string>>& patterns) {
    BoilerplateFilter f;
    f.patterns_.clear();
    for (const auto& [name, rx] : patterns) {
        f.patterns_.push_back({name, std::regex(rx, std::regex::ECMAScript)});
    }
    return f;
}

BoilerplateFilter BoilerplateFilter::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pattern file: " + path);
    std::vector<std::pair<std::string, std::string>> patterns;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ConfigError("pattern line missing tab separator: " + line);
        }
        patterns.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return from_patterns(patterns);
}

std::string BoilerplateFilter::flatten(const MethodRecord& method) {
    TokenStream stream = tokenize_r0(method.body);
    std::string out;
    for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += stream.tokens[i];
    }
    return out;
}

std::optional<std::string> BoilerplateFilter::match(const MethodRecord& method) const {
    std::string flat = flatten(method);
    for (const Pattern& p : patterns_) {
        if (std::regex_search(flat, p.regex)) return p.name;
    }
    return std::nullopt;
}

}  // namespace cloneseek
