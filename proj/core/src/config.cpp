#include "cloneseek/config.hpp"

#include <fstream>
#include <sstream>

#include "cloneseek/errors.hpp"

namespace cloneseek {

namespace {

template <typename T, std::size_t N>
std::string join_csv(const std::array<T, N>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

template <typename T>
std::array<T, kNumReps> parse_quad(const std::string& key, const std::string& value) {
    std::array<T, kNumReps> out{};
    std::istringstream is(value);
    std::string item;
    int i = 0;
    while (std::getline(is, item, ',')) {
        if (i >= kNumReps) throw ConfigError(key + ": expected 4 values");
        std::istringstream vs(item);
        if (!(vs >> out[i])) throw ConfigError(key + ": bad value '" + item + "'");
        ++i;
    }
    if (i != kNumReps) throw ConfigError(key + ": expected 4 values");
    return out;
}

std::string strip_ws(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void SearchConfig::validate() const {
    for (int r = 0; r < kNumReps; ++r) {
        if (ngram_size[r] < 1 || ngram_size[r] > 24)
            throw ConfigError("ngram_size out of range [1,24]");
        if (qr_threshold[r] < 2 || qr_threshold[r] > 20)
            throw ConfigError("qr_threshold out of range [2,20]");
        if (sim_threshold[r] <= 0 || sim_threshold[r] > 100)
            throw ConfigError("sim_threshold out of range (0,100]");
    }
    if (min_clone_size < 6 || min_clone_size > 16)
        throw ConfigError("min_clone_size out of range [6,16]");
}

std::string SearchConfig::to_string() const {
    std::ostringstream os;
    os << "ngram_size=" << join_csv(ngram_size) << '\n'
       << "qr_threshold=" << join_csv(qr_threshold) << '\n'
       << "sim_threshold=" << join_csv(sim_threshold) << '\n'
       << "boosting=" << boosting << '\n'
       << "min_clone_size=" << min_clone_size << '\n';
    return os.str();
}

SearchConfig parse_config(const std::string& text) {
    SearchConfig cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string s = strip_ws(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value: " + s);
        std::string key = strip_ws(s.substr(0, eq));
        std::string value = strip_ws(s.substr(eq + 1));
        if (key == "ngram_size") cfg.ngram_size = parse_quad<int>(key, value);
        else if (key == "qr_threshold") cfg.qr_threshold = parse_quad<int>(key, value);
        else if (key == "sim_threshold") cfg.sim_threshold = parse_quad<double>(key, value);
        else if (key == "boosting") cfg.boosting = std::stoi(value);
        else if (key == "min_clone_size") cfg.min_clone_size = std::stoi(value);
        else throw ConfigError("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

SearchConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

}  // namespace cloneseek
