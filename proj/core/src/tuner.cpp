#include "cloneseek/tuner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cloneseek/csv.hpp"
#include "cloneseek/errors.hpp"
#include "cloneseek/extractor.hpp"

namespace fs = std::filesystem;

namespace cloneseek {

std::optional<ClonePattern> parse_pattern(const std::string& name) {
    if (name == "QS") return ClonePattern::QS;
    if (name == "EX") return ClonePattern::EX;
    if (name == "UD") return ClonePattern::UD;
    if (name == "SQ") return ClonePattern::SQ;
    if (name == "BP") return ClonePattern::BP;
    if (name == "IN") return ClonePattern::IN;
    if (name == "NC") return ClonePattern::NC;
    return std::nullopt;
}

bool pattern_tunable(ClonePattern pattern) {
    return pattern == ClonePattern::QS || pattern == ClonePattern::EX ||
           pattern == ClonePattern::UD;
}

std::vector<GroundTruthPair> read_ground_truth_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ground truth file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty ground truth file");
    std::vector<std::string> header = csv::split_row(line);
    if (header.size() < 6 || header[0] != "query_file") {
        throw ConfigError("ground truth header must be query_file,project,path,start,end,pattern");
    }
    std::vector<GroundTruthPair> pairs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> f = csv::split_row(line);
        if (f.size() < 6) {
            throw ConfigError("ground truth line " + std::to_string(line_no) +
                              ": expected 6 fields");
        }
        GroundTruthPair p;
        p.query_file = f[0];
        p.project_id = f[1];
        p.path = f[2];
        try {
            p.start_line = std::stoi(f[3]);
            p.end_line = std::stoi(f[4]);
        } catch (const std::exception&) {
            throw ConfigError("ground truth line " + std::to_string(line_no) +
                              ": non-numeric line bound");
        }
        auto pattern = parse_pattern(f[5]);
        if (!pattern) {
            throw ConfigError("ground truth line " + std::to_string(line_no) +
                              ": unknown pattern " + f[5]);
        }
        p.pattern = *pattern;
        pairs.push_back(std::move(p));
    }
    return pairs;
}

bool resolves_to(const Doc& doc, const GroundTruthPair& expected) {
    if (!doc.location) return false;
    const DocLocation& loc = *doc.location;
    if (!expected.project_id.empty() && loc.project_id != expected.project_id)
        return false;
    if (loc.path != expected.path) return false;
    int lo = std::max(loc.start_line, expected.start_line);
    int hi = std::min(loc.end_line, expected.end_line);
    int overlap = hi - lo + 1;
    if (overlap <= 0) return false;
    int shorter = std::min(loc.end_line - loc.start_line + 1,
                           expected.end_line - expected.start_line + 1);
    return 2 * overlap >= shorter;
}

double reciprocal_rank(const std::vector<SearchHit>& hits,
                       const GroundTruthPair& expected,
                       const InvertedIndex& index) {
    for (const SearchHit& hit : hits) {
        const Doc* doc = index.find_doc(hit.doc_id);
        if (doc && resolves_to(*doc, expected)) {
            return 1.0 / static_cast<double>(hit.rank);
        }
    }
    return 0.0;
}

double mean_reciprocal_rank(const std::vector<double>& per_query_rr) {
    if (per_query_rr.empty()) throw EmptyQuerySet("no queries to average");
    double sum = 0;
    for (double rr : per_query_rr) sum += rr;
    return sum / static_cast<double>(per_query_rr.size());
}

void GridSpec::validate() const {
    if (ngram_size.empty() || qr_threshold.empty() || sim_threshold.empty() ||
        boosting.empty() || min_clone_size.empty()) {
        throw ConfigError("grid has an empty candidate list");
    }
    for (const SearchConfig& cfg : enumerate()) cfg.validate();
}

std::vector<SearchConfig> GridSpec::enumerate() const {
    std::vector<SearchConfig> out;
    for (const auto& ng : ngram_size)
        for (const auto& qr : qr_threshold)
            for (const auto& sim : sim_threshold)
                for (int b : boosting)
                    for (int mcs : min_clone_size) {
                        SearchConfig cfg;
                        cfg.ngram_size = ng;
                        cfg.qr_threshold = qr;
                        cfg.sim_threshold = sim;
                        cfg.boosting = b;
                        cfg.min_clone_size = mcs;
                        out.push_back(cfg);
                    }
    return out;
}

namespace {

template <typename T>
std::array<T, kNumReps> quad_from_json(const nlohmann::json& j) {
    std::array<T, kNumReps> out{};
    if (j.is_array() && j.size() == kNumReps) {
        for (int i = 0; i < kNumReps; ++i) out[i] = j[i].get<T>();
        return out;
    }
    if (j.is_number()) {
        out.fill(j.get<T>());
        return out;
    }
    throw ConfigError("grid entry must be a 4-element array or a scalar");
}

}  // namespace

GridSpec parse_grid_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("grid JSON parse error: ") + e.what());
    }
    SearchConfig defaults;
    GridSpec grid;
    if (j.contains("ngram_size"))
        for (const auto& v : j["ngram_size"]) grid.ngram_size.push_back(quad_from_json<int>(v));
    else
        grid.ngram_size.push_back(defaults.ngram_size);
    if (j.contains("qr_threshold"))
        for (const auto& v : j["qr_threshold"]) grid.qr_threshold.push_back(quad_from_json<int>(v));
    else
        grid.qr_threshold.push_back(defaults.qr_threshold);
    if (j.contains("sim_threshold"))
        for (const auto& v : j["sim_threshold"]) grid.sim_threshold.push_back(quad_from_json<double>(v));
    else
        grid.sim_threshold.push_back(defaults.sim_threshold);
    if (j.contains("boosting"))
        for (const auto& v : j["boosting"]) grid.boosting.push_back(v.get<int>());
    else
        grid.boosting.push_back(defaults.boosting);
    if (j.contains("min_clone_size"))
        for (const auto& v : j["min_clone_size"]) grid.min_clone_size.push_back(v.get<int>());
    else
        grid.min_clone_size.push_back(defaults.min_clone_size);
    grid.validate();
    return grid;
}

GridSpec load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open grid file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_grid_json(os.str());
}

bool config_less(const SearchConfig& a, const SearchConfig& b) {
    auto key = [](const SearchConfig& c) {
        return std::make_tuple(c.ngram_size, c.qr_threshold, c.sim_threshold,
                               c.boosting, c.min_clone_size);
    };
    return key(a) < key(b);
}

Tuner::Tuner(std::string corpus_root, std::vector<GroundTruthPair> ground_truth,
             std::string truth_base)
    : corpus_root_(std::move(corpus_root)), truth_base_(std::move(truth_base)) {
    for (GroundTruthPair& p : ground_truth) {
        if (!pattern_tunable(p.pattern)) continue;
        fs::path qpath(p.query_file);
        if (qpath.is_relative() && !truth_base_.empty()) {
            qpath = fs::path(truth_base_) / qpath;
        }
        std::ifstream in(qpath);
        if (!in) throw IoError("cannot open query snippet: " + qpath.string());
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
        pairs_.push_back(std::move(p));
        query_bodies_.push_back(std::move(lines));
    }
    if (pairs_.empty()) {
        throw EmptyQuerySet("ground truth has no QS/EX/UD pairs");
    }
}

const InvertedIndex& Tuner::index_for(const SearchConfig& cfg) {
    std::string key;
    for (int v : cfg.ngram_size) key += std::to_string(v) + ",";
    key += "|" + std::to_string(cfg.min_clone_size);
    auto it = index_cache_.find(key);
    if (it != index_cache_.end()) return it->second;

    InvertedIndex index(cfg);
    fs::path root(corpus_root_);
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& fpath : files) {
        std::string rel = fs::relative(fpath, root).generic_string();
        std::string project, path_in_project;
        std::size_t slash = rel.find('/');
        if (slash == std::string::npos) {
            path_in_project = rel;
        } else {
            project = rel.substr(0, slash);
            path_in_project = rel.substr(slash + 1);
        }
        SourceFile file;
        file.project_id = project;
        file.path = path_in_project;
        std::ifstream in(fpath);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            file.lines.push_back(line);
        }
        std::vector<MethodRecord> methods;
        try {
            methods = extract_methods(file, cfg.min_clone_size);
        } catch (const UnparsableFile&) {
            continue;
        }
        for (MethodRecord& m : methods) {
            Doc doc;
            doc.doc_id = rel + ":" + std::to_string(m.start_line) + "-" +
                         std::to_string(m.end_line);
            doc.location = DocLocation{project, path_in_project, m.start_line,
                                       m.end_line};
            doc.body = std::move(m.body);
            index.add(std::move(doc));
        }
    }
    index.finalize();
    return index_cache_.emplace(std::move(key), std::move(index)).first->second;
}

double Tuner::evaluate(const SearchConfig& cfg) {
    const InvertedIndex& index = index_for(cfg);
    std::vector<double> rrs;
    rrs.reserve(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        std::vector<std::string> body = wrap_snippet(query_bodies_[i]);
        if (static_cast<int>(body.size()) < cfg.min_clone_size) {
            rrs.push_back(0.0);  // query under the size gate
            continue;
        }
        std::vector<SearchHit> hits;
        try {
            hits = search_body(body, index, cfg);
        } catch (const EmptyQuery&) {
            rrs.push_back(0.0);
            continue;
        }
        rrs.push_back(reciprocal_rank(hits, pairs_[i], index));
    }
    return mean_reciprocal_rank(rrs);
}

GridSearchResult Tuner::grid_search(const GridSpec& grid) {
    grid.validate();
    GridSearchResult result;
    bool have_best = false;
    for (const SearchConfig& cfg : grid.enumerate()) {
        double mrr = -1;
        try {
            mrr = evaluate(cfg);
        } catch (const std::exception&) {
            // recorded as -1 in the table
        }
        result.table.push_back({cfg, mrr});
        if (mrr < 0) continue;
        bool better = !have_best || mrr > result.best_mrr;
        if (!better && mrr == result.best_mrr) {
            if (cfg.min_clone_size != result.best.min_clone_size) {
                better = cfg.min_clone_size < result.best.min_clone_size;
            } else {
                better = config_less(cfg, result.best);
            }
        }
        if (better) {
            have_best = true;
            result.best = cfg;
            result.best_mrr = mrr;
        }
    }
    if (!have_best) throw EmptyQuerySet("no grid point evaluated successfully");
    return result;
}

namespace {

template <typename T, std::size_t N>
std::string quad_str(const std::array<T, N>& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) os << '|';
        os << a[i];
    }
    return os.str();
}

}  // namespace

void write_score_table_csv(const GridSearchResult& result, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + out_path);
    out << "ngram_size,qr_threshold,sim_threshold,boosting,min_clone_size,mrr\n";
    for (const GridPointScore& p : result.table) {
        std::ostringstream mrr;
        mrr.precision(10);
        mrr << p.mrr;
        out << csv::join_row({quad_str(p.config.ngram_size),
                              quad_str(p.config.qr_threshold),
                              quad_str(p.config.sim_threshold),
                              std::to_string(p.config.boosting),
                              std::to_string(p.config.min_clone_size), mrr.str()})
            << '\n';
    }
    if (!out) throw IoError("write failed: " + out_path);
}

}  // namespace cloneseek
