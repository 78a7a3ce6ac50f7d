#include "cloneseek/index.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>

#include "cloneseek/errors.hpp"

namespace cloneseek {

std::string make_doc_id(std::int64_t post_id, std::int64_t local_id,
                        const std::string& history_label) {
    return std::to_string(post_id) + "_" + std::to_string(local_id) + "_" +
           history_label;
}

std::optional<RevisionKey> parse_doc_id(const std::string& doc_id) {
    std::size_t a = doc_id.find('_');
    if (a == std::string::npos) return std::nullopt;
    std::size_t b = doc_id.find('_', a + 1);
    if (b == std::string::npos) return std::nullopt;
    RevisionKey key;
    auto parse_int = [](const char* first, const char* last, std::int64_t& out) {
        auto [p, ec] = std::from_chars(first, last, out);
        return ec == std::errc() && p == last;
    };
    const char* s = doc_id.data();
    if (!parse_int(s, s + a, key.post_id)) return std::nullopt;
    if (!parse_int(s + a + 1, s + b, key.local_id)) return std::nullopt;
    key.history_label = doc_id.substr(b + 1);
    if (key.history_label.empty()) return std::nullopt;
    return key;
}

std::uint32_t IndexStats::df(Rep rep, const std::string& gram) const {
    const auto* m = postings[static_cast<int>(rep)];
    if (!m) return 0;
    auto it = m->find(gram);
    return it == m->end() ? 0 : static_cast<std::uint32_t>(it->second.size());
}

InvertedIndex::InvertedIndex(SearchConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
}

void InvertedIndex::add(Doc doc) {
    if (static_cast<int>(doc.body.size()) < cfg_.min_clone_size) {
        throw TooSmall(doc.doc_id + ": body has " + std::to_string(doc.body.size()) +
                       " lines, minimum is " + std::to_string(cfg_.min_clone_size));
    }
    auto [it, inserted] = by_id_.emplace(doc.doc_id, 0);
    if (!inserted) throw DuplicateDoc(doc.doc_id);
    docs_.push_back(std::move(doc));
    finalized_ = false;
}

void InvertedIndex::finalize() {
    std::sort(docs_.begin(), docs_.end(),
              [](const Doc& a, const Doc& b) { return a.doc_id < b.doc_id; });
    for (auto& m : postings_) m.clear();
    by_id_.clear();
    latest_.clear();
    for (std::uint32_t i = 0; i < docs_.size(); ++i) {
        const Doc& d = docs_[i];
        by_id_[d.doc_id] = i;
        if (d.revision && d.revision->history_label == "latest") {
            latest_[{d.revision->post_id, d.revision->local_id}] = i;
        }
        auto sets = all_ngram_sets(d.body, cfg_.ngram_size);
        for (int r = 0; r < kNumReps; ++r) {
            for (const auto& [gram, count] : sets[r].grams) {
                postings_[r][gram].push_back({i, count});
            }
        }
    }
    finalized_ = true;
}

const Doc* InvertedIndex::find_doc(const std::string& doc_id) const {
    auto it = by_id_.find(doc_id);
    return it == by_id_.end() ? nullptr : &docs_[it->second];
}

const std::vector<Posting>* InvertedIndex::postings(Rep rep,
                                                    const std::string& gram) const {
    const auto& m = postings_[static_cast<int>(rep)];
    auto it = m.find(gram);
    return it == m.end() ? nullptr : &it->second;
}

IndexStats InvertedIndex::stats() const {
    IndexStats s;
    s.doc_count = docs_.size();
    for (int r = 0; r < kNumReps; ++r) s.postings[r] = &postings_[r];
    return s;
}

const Doc* InvertedIndex::latest_for(std::int64_t post_id,
                                     std::int64_t local_id) const {
    auto it = latest_.find({post_id, local_id});
    return it == latest_.end() ? nullptr : &docs_[it->second];
}

namespace {

constexpr char kMagic[4] = {'C', 'S', 'I', 'X'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

void put_i64(std::ostream& os, std::int64_t v) {
    put_u64(os, static_cast<std::uint64_t>(v));
}

void put_f64(std::ostream& os, double v) {
    static_assert(sizeof(double) == 8);
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(os, bits);
}

void put_str(std::ostream& os, const std::string& s) {
    put_u64(os, s.size());
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& is) {
    char b[4];
    if (!is.read(b, 4)) throw CorruptIndex("unexpected end of file");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    char b[8];
    if (!is.read(b, 8)) throw CorruptIndex("unexpected end of file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
}

std::int64_t get_i64(std::istream& is) {
    return static_cast<std::int64_t>(get_u64(is));
}

double get_f64(std::istream& is) {
    std::uint64_t bits = get_u64(is);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

std::string get_str(std::istream& is) {
    std::uint64_t n = get_u64(is);
    if (n > (1ull << 32)) throw CorruptIndex("implausible string length");
    std::string s(n, '\0');
    if (n && !is.read(s.data(), static_cast<std::streamsize>(n))) {
        throw CorruptIndex("unexpected end of file");
    }
    return s;
}

}  // namespace

void InvertedIndex::save(const std::string& path) const {
    if (!finalized_) throw IoError("index not finalized before save");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for write: " + path);
    os.write(kMagic, 4);
    put_u32(os, kFormatVersion);
    for (int v : cfg_.ngram_size) put_u32(os, static_cast<std::uint32_t>(v));
    for (int v : cfg_.qr_threshold) put_u32(os, static_cast<std::uint32_t>(v));
    for (double v : cfg_.sim_threshold) put_f64(os, v);
    put_u32(os, static_cast<std::uint32_t>(cfg_.boosting));
    put_u32(os, static_cast<std::uint32_t>(cfg_.min_clone_size));
    put_u64(os, docs_.size());
    for (const Doc& d : docs_) {
        put_str(os, d.doc_id);
        put_u64(os, d.body.size());
        for (const std::string& line : d.body) put_str(os, line);
        os.put(d.revision ? 1 : 0);
        if (d.revision) {
            put_i64(os, d.revision->post_id);
            put_i64(os, d.revision->local_id);
            put_str(os, d.revision->history_label);
        }
        os.put(d.location ? 1 : 0);
        if (d.location) {
            put_str(os, d.location->project_id);
            put_str(os, d.location->path);
            put_u32(os, static_cast<std::uint32_t>(d.location->start_line));
            put_u32(os, static_cast<std::uint32_t>(d.location->end_line));
        }
    }
    if (!os) throw IoError("write failed: " + path);
}

InvertedIndex InvertedIndex::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open index file: " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw CorruptIndex("bad magic in " + path);
    }
    std::uint32_t version = get_u32(is);
    if (version != kFormatVersion) {
        throw FormatVersionMismatch("index format version " + std::to_string(version) +
                                    ", expected " + std::to_string(kFormatVersion));
    }
    SearchConfig cfg;
    for (int r = 0; r < kNumReps; ++r) cfg.ngram_size[r] = static_cast<int>(get_u32(is));
    for (int r = 0; r < kNumReps; ++r) cfg.qr_threshold[r] = static_cast<int>(get_u32(is));
    for (int r = 0; r < kNumReps; ++r) cfg.sim_threshold[r] = get_f64(is);
    cfg.boosting = static_cast<std::int32_t>(get_u32(is));
    cfg.min_clone_size = static_cast<std::int32_t>(get_u32(is));
    InvertedIndex idx(cfg);
    std::uint64_t n_docs = get_u64(is);
    for (std::uint64_t i = 0; i < n_docs; ++i) {
        Doc d;
        d.doc_id = get_str(is);
        std::uint64_t n_lines = get_u64(is);
        d.body.reserve(n_lines);
        for (std::uint64_t k = 0; k < n_lines; ++k) d.body.push_back(get_str(is));
        int has_rev = is.get();
        if (has_rev == EOF) throw CorruptIndex("unexpected end of file");
        if (has_rev) {
            RevisionKey key;
            key.post_id = get_i64(is);
            key.local_id = get_i64(is);
            key.history_label = get_str(is);
            d.revision = key;
        }
        int has_loc = is.get();
        if (has_loc == EOF) throw CorruptIndex("unexpected end of file");
        if (has_loc) {
            DocLocation loc;
            loc.project_id = get_str(is);
            loc.path = get_str(is);
            loc.start_line = static_cast<int>(get_u32(is));
            loc.end_line = static_cast<int>(get_u32(is));
            d.location = loc;
        }
        idx.docs_.push_back(std::move(d));
    }
    idx.finalize();
    return idx;
}

}  // namespace cloneseek
