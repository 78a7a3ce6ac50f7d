#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cloneseek {

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters.
std::string file_digest(const std::string& path);

/// One append-only record per CLI run: command, config snapshot, input
/// digests, output paths, wall time.
struct RunManifest {
    std::string command;
    std::string config_snapshot;
    std::map<std::string, std::string> input_digests;
    std::vector<std::string> output_paths;
    std::uint64_t duration_ms = 0;

    std::string to_json() const;
};

/// Appends one JSON line to the manifest log.
void append_manifest(const RunManifest& manifest, const std::string& log_path);

}  // namespace cloneseek
