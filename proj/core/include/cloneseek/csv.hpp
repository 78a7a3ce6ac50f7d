#pragma once

#include <string>
#include <vector>

namespace cloneseek {
namespace csv {

/// RFC-4180 style quoting: fields with commas, quotes or newlines are
/// wrapped in double quotes, embedded quotes doubled.
std::string escape(const std::string& field);
std::string join_row(const std::vector<std::string>& fields);

/// Splits one physical line into fields. Quoted fields with embedded
/// newlines are not supported by this reader.
std::vector<std::string> split_row(const std::string& line);

}  // namespace csv
}  // namespace cloneseek
