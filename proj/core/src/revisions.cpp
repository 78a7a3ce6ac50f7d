#include "cloneseek/revisions.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "cloneseek/csv.hpp"
#include "cloneseek/errors.hpp"
#include "cloneseek/extractor.hpp"
#include "cloneseek/metrics.hpp"

namespace fs = std::filesystem;

namespace cloneseek {

std::string escape_body(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += "\\n";
        for (char c : lines[i]) {
            switch (c) {
                case '\\': out += "\\\\"; break;
                case '\t': out += "\\t"; break;
                case '\n': out += "\\n"; break;
                default: out += c;
            }
        }
    }
    return out;
}

std::vector<std::string> unescape_body(const std::string& field) {
    std::vector<std::string> lines;
    std::string cur;
    for (std::size_t i = 0; i < field.size(); ++i) {
        char c = field[i];
        if (c == '\\' && i + 1 < field.size()) {
            char next = field[i + 1];
            ++i;
            if (next == 'n') {
                lines.push_back(std::move(cur));
                cur.clear();
            } else if (next == 't') {
                cur += '\t';
            } else if (next == '\\') {
                cur += '\\';
            } else {
                cur += next;  // unknown escape: keep literally
            }
        } else {
            cur += c;
        }
    }
    lines.push_back(std::move(cur));
    return lines;
}

std::vector<SnippetRevision> parse_revision_dump(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dump file: " + path);
    std::vector<SnippetRevision> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            std::size_t tab = line.find('\t', pos);
            if (tab == std::string::npos) {
                throw SchemaError(line_no, "expected 5 tab-separated fields");
            }
            fields.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
        fields.push_back(line.substr(pos));

        SnippetRevision rev;
        try {
            rev.post_id = std::stoll(fields[0]);
            rev.local_id = std::stoll(fields[1]);
            rev.history_seq = std::stoll(fields[2]);
        } catch (const std::exception&) {
            throw SchemaError(line_no, "non-numeric id field");
        }
        if (rev.post_id <= 0) throw SchemaError(line_no, "post_id must be positive");
        if (rev.local_id < 0) throw SchemaError(line_no, "local_id must be non-negative");
        if (rev.history_seq < 0) throw SchemaError(line_no, "history_seq must be non-negative");
        if (fields[3] == "1" || fields[3] == "true") rev.is_accepted = true;
        else if (fields[3] == "0" || fields[3] == "false") rev.is_accepted = false;
        else throw SchemaError(line_no, "is_accepted must be 0/1/true/false");
        rev.body = unescape_body(fields[4]);
        out.push_back(std::move(rev));
    }
    return out;
}

IngestReport ingest_revisions(const std::vector<SnippetRevision>& revisions,
                              InvertedIndex& index) {
    IngestReport report;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<const SnippetRevision*>>
        blocks;
    std::map<std::int64_t, bool> answers;
    for (const SnippetRevision& rev : revisions) {
        if (!rev.is_accepted) {
            ++report.skipped_not_accepted;
            continue;
        }
        answers[rev.post_id] = true;
        blocks[{rev.post_id, rev.local_id}].push_back(&rev);
    }
    report.answers = answers.size();
    report.blocks = blocks.size();

    for (auto& [key, revs] : blocks) {
        std::sort(revs.begin(), revs.end(),
                  [](const SnippetRevision* a, const SnippetRevision* b) {
                      return a->history_seq < b->history_seq;
                  });
        // Normalize each body, then drop text-only revisions whose code
        // block did not change from the previous one.
        std::vector<std::vector<std::string>> bodies;
        for (const SnippetRevision* rev : revs) {
            std::vector<std::string> wrapped = wrap_snippet(rev->body);
            if (!bodies.empty() && wrapped == bodies.back()) {
                ++report.deduplicated;
                continue;
            }
            bodies.push_back(std::move(wrapped));
        }
        for (std::size_t i = 0; i < bodies.size(); ++i) {
            std::string label;
            if (i + 1 == bodies.size()) label = "latest";
            else if (i == 0) label = "original";
            else label = std::to_string(i);
            if (static_cast<int>(bodies[i].size()) < index.config().min_clone_size) {
                ++report.skipped_too_small;
                continue;
            }
            Doc doc;
            doc.doc_id = make_doc_id(key.first, key.second, label);
            doc.revision = RevisionKey{key.first, key.second, label};
            doc.body = std::move(bodies[i]);
            index.add(std::move(doc));
            ++report.revisions_indexed;
        }
    }
    index.finalize();
    return report;
}

namespace {

std::vector<Recommendation> scan_file(const SourceFile& file,
                                      const InvertedIndex& index,
                                      const SearchConfig& cfg,
                                      const BoilerplateFilter& filter) {
    std::vector<Recommendation> recs;
    std::vector<MethodRecord> methods;
    try {
        methods = extract_methods(file, cfg.min_clone_size);
    } catch (const UnparsableFile& e) {
        std::cerr << "skip: " << e.what() << '\n';
        return recs;
    }
    for (const MethodRecord& method : methods) {
        if (filter.is_boilerplate(method)) continue;
        std::vector<SearchHit> hits;
        try {
            hits = search(method, index, cfg);
        } catch (const EmptyQuery&) {
            continue;
        }
        if (hits.empty()) continue;
        const Doc* doc = index.find_doc(hits.front().doc_id);
        if (!doc || !doc->revision) continue;
        if (doc->revision->history_label == "latest") continue;
        const Doc* latest = index.latest_for(doc->revision->post_id,
                                             doc->revision->local_id);
        if (!latest) continue;
        Recommendation rec;
        rec.project_id = file.project_id;
        rec.path = file.path;
        rec.method_name = method.method_name;
        rec.start_line = method.start_line;
        rec.end_line = method.end_line;
        rec.matched_doc_id = doc->doc_id;
        rec.latest_post_id = doc->revision->post_id;
        rec.latest_body = latest->body;
        rec.edit_distance = levenshtein(join_lines(doc->body), join_lines(latest->body));
        recs.push_back(std::move(rec));
    }
    return recs;
}

}  // namespace

std::vector<Recommendation> scan_project(const std::string& project_root,
                                         const InvertedIndex& index,
                                         const SearchConfig& cfg,
                                         const ScanOptions& options) {
    fs::path root(project_root);
    if (!fs::exists(root)) throw IoError("project root does not exist: " + project_root);
    std::string project_id = root.filename().string();
    if (project_id.empty()) project_id = project_root;

    std::vector<std::string> paths;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (std::find(options.extensions.begin(), options.extensions.end(), ext) ==
            options.extensions.end()) {
            continue;
        }
        paths.push_back(fs::relative(entry.path(), root).generic_string());
    }
    std::sort(paths.begin(), paths.end());

    BoilerplateFilter builtin;
    const BoilerplateFilter& filter = options.filter ? *options.filter : builtin;

    std::vector<std::vector<Recommendation>> per_file(paths.size());
    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < paths.size(); i += stride) {
            SourceFile file;
            file.project_id = project_id;
            file.path = paths[i];
            std::ifstream in(root / paths[i]);
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                file.lines.push_back(line);
            }
            per_file[i] = scan_file(file, index, cfg, filter);
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || paths.size() <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) {
            threads.emplace_back(worker, static_cast<std::size_t>(t),
                                 static_cast<std::size_t>(jobs));
        }
        for (auto& th : threads) th.join();
    }

    std::vector<Recommendation> recs;  // paths already sorted; files in order
    for (auto& chunk : per_file) {
        recs.insert(recs.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
    }
    std::stable_sort(recs.begin(), recs.end(),
                     [](const Recommendation& a, const Recommendation& b) {
                         if (a.path != b.path) return a.path < b.path;
                         return a.start_line < b.start_line;
                     });
    return recs;
}

void write_recommendations_csv(const std::vector<Recommendation>& recs,
                               const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + out_path);
    out << "file,method,start_line,end_line,post_id,matched_doc_id,edit_distance\n";
    for (const Recommendation& r : recs) {
        out << csv::join_row({r.path, r.method_name, std::to_string(r.start_line),
                              std::to_string(r.end_line),
                              std::to_string(r.latest_post_id), r.matched_doc_id,
                              std::to_string(r.edit_distance)})
            << '\n';
    }
    if (!out) throw IoError("write failed: " + out_path);
}

}  // namespace cloneseek
