#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <queue>
#include <random>
#include <set>

#include "cloneseek/errors.hpp"
#include "cloneseek/metrics.hpp"

using namespace cloneseek;

namespace {

// Independent oracle: breadth-first search over single-character edits.
// Only feasible for tiny strings and alphabets.
std::uint64_t bfs_edit_distance(const std::string& a, const std::string& b,
                                const std::string& alphabet) {
    if (a == b) return 0;
    std::set<std::string> seen = {a};
    std::queue<std::pair<std::string, std::uint64_t>> frontier;
    frontier.emplace(a, 0);
    while (!frontier.empty()) {
        auto [cur, dist] = frontier.front();
        frontier.pop();
        std::vector<std::string> next;
        for (std::size_t i = 0; i <= cur.size(); ++i) {
            for (char c : alphabet) {
                next.push_back(cur.substr(0, i) + c + cur.substr(i));  // insert
            }
            if (i < cur.size()) {
                next.push_back(cur.substr(0, i) + cur.substr(i + 1));  // delete
                for (char c : alphabet) {
                    std::string sub = cur;
                    sub[i] = c;  // substitute
                    next.push_back(sub);
                }
            }
        }
        for (auto& n : next) {
            if (n == b) return dist + 1;
            if (n.size() <= std::max(a.size(), b.size()) && seen.insert(n).second) {
                frontier.emplace(n, dist + 1);
            }
        }
    }
    return ~0ull;
}

SnippetRevision rev(std::int64_t post, std::int64_t local, std::int64_t seq,
                    std::vector<std::string> body) {
    return SnippetRevision{post, local, seq, true, std::move(body)};
}

}  // namespace

TEST_CASE("levenshtein textbook examples") {
    CHECK(levenshtein("kitten", "sitting") == 3);
    CHECK(levenshtein("flaw", "lawn") == 2);
    CHECK(levenshtein("", "") == 0);
    CHECK(levenshtein("", "abc") == 3);
    CHECK(levenshtein("abc", "") == 3);
    CHECK(levenshtein("same", "same") == 0);
}

TEST_CASE("levenshtein agrees with a BFS oracle on short strings") {
    const std::string alphabet = "ab";
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto rand_str = [&] {
            std::string s;
            std::size_t len = rng() % 5;
            for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
            return s;
        };
        std::string a = rand_str(), b = rand_str();
        CHECK(levenshtein(a, b) == bfs_edit_distance(a, b, alphabet));
    }
}

TEST_CASE("levenshtein metric axioms on random strings") {
    std::mt19937 rng(31);
    auto rand_str = [&] {
        std::string s;
        std::size_t len = rng() % 20;
        for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('a' + rng() % 4);
        return s;
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::string a = rand_str(), b = rand_str(), c = rand_str();
        std::uint64_t ab = levenshtein(a, b);
        CHECK(ab == levenshtein(b, a));                       // symmetry
        CHECK((ab == 0) == (a == b));                         // identity
        CHECK(ab <= levenshtein(a, c) + levenshtein(c, b));   // triangle
        std::uint64_t lo = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
        CHECK(ab >= lo);                                      // length bound
        CHECK(ab <= std::max(a.size(), b.size()));
    }
}

TEST_CASE("summarize computes population statistics") {
    SummaryStats s = summarize({2, 4, 4, 4, 5, 5, 7, 9});
    CHECK(s.mean == doctest::Approx(5.0));
    CHECK(s.std_dev == doctest::Approx(2.0));
    CHECK(s.min == doctest::Approx(2.0));
    CHECK(s.max == doctest::Approx(9.0));
    CHECK(s.median == doctest::Approx(4.5));
    CHECK(summarize({1, 2, 3}).median == doctest::Approx(2.0));
    CHECK_THROWS_AS(summarize({}), EmptyCorpus);
}

TEST_CASE("revision_stats measures original-vs-latest distances per block") {
    std::vector<SnippetRevision> revs = {
        rev(1, 0, 0, {"abc"}),
        rev(1, 0, 1, {"abd"}),      // intermediate, ignored by the distance
        rev(1, 0, 2, {"abcxyz"}),   // latest: distance 3 from "abc"
        rev(2, 0, 0, {"same"}),
        rev(2, 0, 1, {"same"}),     // distance 0
        rev(3, 0, 0, {"solo"}),     // single revision: distance 0
    };
    EditStats stats = revision_stats(revs);
    REQUIRE(stats.per_block.size() == 3);
    CHECK(stats.per_block[0].post_id == 1);
    CHECK(stats.per_block[0].distance == 3);
    CHECK(stats.per_block[1].distance == 0);
    CHECK(stats.per_block[2].distance == 0);
    CHECK(stats.distances.mean == doctest::Approx(1.0));
    CHECK(stats.distances.median == doctest::Approx(0.0));

    // revision counts are distinct history sequences per answer
    CHECK(stats.revisions_per_answer.at(1) == 3);
    CHECK(stats.revisions_per_answer.at(2) == 2);
    CHECK(stats.revisions_per_answer.at(3) == 1);
    CHECK(stats.revision_counts.mean == doctest::Approx(2.0));
    CHECK(stats.revision_counts.median == doctest::Approx(2.0));
}

TEST_CASE("revision_stats strips comments before measuring") {
    std::vector<SnippetRevision> revs = {
        rev(5, 0, 0, {"int a = 1; // note", "use(a);"}),
        rev(5, 0, 1, {"int a = 1; /* different remark */", "use(a);"}),
    };
    EditStats stats = revision_stats(revs);
    REQUIRE(stats.per_block.size() == 1);
    CHECK(stats.per_block[0].distance == 0);
}

TEST_CASE("histogram bins cover the population exactly once") {
    std::vector<SnippetRevision> revs;
    std::int64_t post = 100;
    auto add_pair = [&](const std::string& from, const std::string& to) {
        revs.push_back(rev(post, 0, 0, {from}));
        revs.push_back(rev(post, 0, 1, {to}));
        ++post;
    };
    add_pair("x", "x");                        // 0
    add_pair("x", "xy");                       // 1-10
    add_pair(std::string(5, 'a'), std::string(60, 'b'));     // 11-100
    add_pair(std::string(5, 'a'), std::string(600, 'b'));    // 101-1000
    add_pair(std::string(5, 'a'), std::string(6000, 'b'));   // 1001-10000
    EditStats stats = revision_stats(revs);
    std::size_t total = 0;
    for (const auto& [label, count] : stats.histogram) total += count;
    CHECK(total == stats.per_block.size());
    // first bin is the zero-distance bin with exactly one member
    REQUIRE(!stats.histogram.empty());
    CHECK(stats.histogram.front().second == 1);
}

TEST_CASE("stats CSVs are written in long format with headers") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cloneseek_metrics_csv";
    fs::create_directories(dir);

    std::vector<SnippetRevision> revs = {rev(1, 0, 0, {"abc"}), rev(1, 0, 1, {"abcd"})};
    EditStats stats = revision_stats(revs);

    fs::path summary = dir / "summary.csv";
    write_stats_csv(stats, summary.string());
    std::ifstream in(summary);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "metric,stat,value");

    fs::path blocks = dir / "blocks.csv";
    write_block_distances_csv(stats, blocks.string());
    std::ifstream bin_(blocks);
    REQUIRE(std::getline(bin_, header));
    CHECK(header == "post_id,local_id,edit_distance");
    std::string row;
    REQUIRE(std::getline(bin_, row));
    CHECK(row == "1,0,1");
    fs::remove_all(dir);
}
