#pragma once

#include <stdexcept>
#include <string>

namespace cloneseek {

struct UnparsableFile : std::runtime_error {
    explicit UnparsableFile(const std::string& what) : std::runtime_error(what) {}
};

struct TooSmall : std::runtime_error {
    explicit TooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateDoc : std::runtime_error {
    explicit DuplicateDoc(const std::string& what) : std::runtime_error(what) {}
};

struct FormatVersionMismatch : std::runtime_error {
    explicit FormatVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CorruptIndex : std::runtime_error {
    explicit CorruptIndex(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyQuery : std::runtime_error {
    explicit EmptyQuery(const std::string& what) : std::runtime_error(what) {}
};

// Carries the 1-based line of the offending dump record.
struct SchemaError : std::runtime_error {
    SchemaError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct TooFewProjects : std::runtime_error {
    explicit TooFewProjects(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyQuerySet : std::runtime_error {
    explicit EmptyQuerySet(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyCorpus : std::runtime_error {
    explicit EmptyCorpus(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cloneseek
