#include "cloneseek/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "cloneseek/errors.hpp"

namespace cloneseek {

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for digest: " + path);
    std::uint64_t hash = 1469598103934665603ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config_snapshot;
    j["inputs"] = input_digests;
    j["outputs"] = output_paths;
    j["duration_ms"] = duration_ms;
    return j.dump();
}

void append_manifest(const RunManifest& manifest, const std::string& log_path) {
    std::ofstream out(log_path, std::ios::app);
    if (!out) throw IoError("cannot open manifest log: " + log_path);
    out << manifest.to_json() << '\n';
    if (!out) throw IoError("write failed: " + log_path);
}

}  // namespace cloneseek
