#include <doctest.h>

#include <random>
#include <set>

#include "cloneseek/errors.hpp"
#include "cloneseek/index.hpp"
#include "cloneseek/search.hpp"

using namespace cloneseek;

namespace {

std::vector<std::string> make_body(const std::string& tag, int lines = 8) {
    std::vector<std::string> body;
    body.push_back("void " + tag + " ( ) {");
    for (int i = 1; i < lines - 1; ++i) {
        body.push_back("    " + tag + "v" + std::to_string(i) + " = " +
                       std::to_string(i * 7) + " ;");
    }
    body.push_back("}");
    return body;
}

InvertedIndex small_index(const SearchConfig& cfg, int docs = 6) {
    InvertedIndex index(cfg);
    for (int i = 0; i < docs; ++i) {
        Doc d;
        d.doc_id = make_doc_id(1000 + i, 0, "latest");
        d.revision = RevisionKey{1000 + i, 0, "latest"};
        d.body = make_body("fn" + std::to_string(i));
        index.add(d);
    }
    index.finalize();
    return index;
}

}  // namespace

TEST_CASE("reduce_query keeps the rarest grams") {
    // stats with controlled document frequencies
    std::map<std::string, std::vector<Posting>> plist;
    plist["a"] = std::vector<Posting>(1);
    plist["b"] = std::vector<Posting>(5);
    plist["c"] = std::vector<Posting>(9);
    IndexStats stats;
    stats.doc_count = 10;
    for (int r = 0; r < kNumReps; ++r) stats.postings[r] = &plist;

    NgramSet q;
    q.n = 1;
    q.grams = {{"a", 1}, {"b", 1}, {"c", 1}};
    SearchConfig cfg;
    cfg.qr_threshold = {2, 2, 2, 2};
    auto reduced = reduce_query(q, Rep::R0, stats, cfg);
    CHECK(reduced == std::vector<std::string>{"a", "b"});

    cfg.qr_threshold = {10, 10, 10, 10};
    CHECK(reduce_query(q, Rep::R0, stats, cfg).size() == 3);
}

TEST_CASE("reduce_query breaks df ties lexicographically, unknown grams are rarest") {
    std::map<std::string, std::vector<Posting>> plist;
    plist["x"] = std::vector<Posting>(2);
    plist["y"] = std::vector<Posting>(2);
    IndexStats stats;
    stats.doc_count = 4;
    for (int r = 0; r < kNumReps; ++r) stats.postings[r] = &plist;

    NgramSet q;
    q.grams = {{"y", 1}, {"x", 1}, {"unseen", 1}};
    SearchConfig cfg;
    cfg.qr_threshold = {2, 2, 2, 2};
    auto reduced = reduce_query(q, Rep::R0, stats, cfg);
    REQUIRE(reduced.size() == 2);
    CHECK(reduced[0] == "unseen");  // df 0 comes first
    CHECK(reduced[1] == "x");       // tie at df 2 -> lexicographic
}

TEST_CASE("exact copy is rank 1 with all similarities 100") {
    SearchConfig cfg;
    InvertedIndex index = small_index(cfg);
    const Doc& target = *index.find_doc("1002_0_latest");
    auto hits = search_body(target.body, index, cfg);
    REQUIRE(!hits.empty());
    CHECK(hits[0].doc_id == "1002_0_latest");
    CHECK(hits[0].rank == 1);
    for (int r = 0; r < kNumReps; ++r) {
        CHECK(hits[0].per_rep_similarity[r] == doctest::Approx(100.0));
    }
}

TEST_CASE("renamed copy is retrievable via r2/r3") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    Doc d;
    d.doc_id = make_doc_id(1, 0, "latest");
    d.revision = RevisionKey{1, 0, "latest"};
    d.body = {"void process ( ) {",
              "    total = first + second ;",
              "    count = total * third ;",
              "    result = count - fourth ;",
              "    output = result / fifth ;",
              "    done = output ;",
              "}"};
    index.add(d);
    index.finalize();

    // consistent renaming: r0 overlap collapses, r2/r3 stay identical
    std::vector<std::string> renamed = {"void handle ( ) {",
                                        "    sum = alpha + beta ;",
                                        "    num = sum * gamma ;",
                                        "    val = num - delta ;",
                                        "    out = val / epsilon ;",
                                        "    fin = out ;",
                                        "}"};
    auto hits = search_body(renamed, index, cfg);
    REQUIRE(!hits.empty());
    CHECK(hits[0].doc_id == "1_0_latest");
    CHECK(hits[0].per_rep_similarity[2] == doctest::Approx(100.0));
    CHECK(hits[0].per_rep_similarity[3] == doctest::Approx(100.0));
}

TEST_CASE("unrelated query over a disjoint vocabulary returns nothing") {
    SearchConfig cfg;
    InvertedIndex index = small_index(cfg);
    std::vector<std::string> unrelated = {"if ( zulu ) {",
                                          "    while ( yankee ) {",
                                          "        xray [ whiskey ] ++ ;",
                                          "    }",
                                          "    throw victor ;",
                                          "}"};
    auto hits = search_body(unrelated, index, cfg);
    // shared single tokens may surface r2/r3 overlap, but no hit may carry
    // a perfect raw match
    for (const auto& h : hits) CHECK(h.per_rep_similarity[0] < 100.0);
}

TEST_CASE("empty query throws EmptyQuery") {
    SearchConfig cfg;
    InvertedIndex index = small_index(cfg);
    CHECK_THROWS_AS(search_body({}, index, cfg), EmptyQuery);
}

TEST_CASE("boosting -1 and 1 produce identical rankings") {
    SearchConfig base;
    InvertedIndex index = small_index(base, 10);
    SearchConfig off = base;
    off.boosting = -1;
    SearchConfig one = base;
    one.boosting = 1;
    for (std::size_t i = 0; i < index.doc_count(); ++i) {
        auto ha = search_body(index.doc(i).body, index, off);
        auto hb = search_body(index.doc(i).body, index, one);
        REQUIRE(ha.size() == hb.size());
        for (std::size_t k = 0; k < ha.size(); ++k) CHECK(ha[k].doc_id == hb[k].doc_id);
    }
}

TEST_CASE("search is deterministic") {
    SearchConfig cfg;
    InvertedIndex index = small_index(cfg);
    auto a = search_body(index.doc(0).body, index, cfg);
    auto b = search_body(index.doc(0).body, index, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].doc_id == b[i].doc_id);
        CHECK(a[i].score == b[i].score);
        CHECK(a[i].rank == b[i].rank);
    }
}

TEST_CASE("removing a non-matching doc leaves surviving similarities unchanged") {
    SearchConfig cfg;
    InvertedIndex with(cfg), without(cfg);
    std::vector<std::string> query;
    for (int i = 0; i < 8; ++i) {
        Doc d;
        d.doc_id = make_doc_id(2000 + i, 0, "latest");
        d.body = make_body("sfn" + std::to_string(i));
        if (i == 0) query = d.body;
        with.add(d);
        if (i != 7) without.add(d);  // doc 7 shares no grams relevant to query 0's hits
    }
    with.finalize();
    without.finalize();
    auto ha = search_body(query, with, cfg);
    auto hb = search_body(query, without, cfg);
    std::set<std::string> ids_b;
    for (const auto& h : hb) ids_b.insert(h.doc_id);
    for (const auto& h : ha) {
        if (h.doc_id == make_doc_id(2007, 0, "latest")) continue;
        if (!ids_b.count(h.doc_id)) continue;
        for (const auto& h2 : hb) {
            if (h2.doc_id == h.doc_id) {
                for (int r = 0; r < kNumReps; ++r) {
                    CHECK(h.per_rep_similarity[r] == h2.per_rep_similarity[r]);
                }
            }
        }
    }
}
