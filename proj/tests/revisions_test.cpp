#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cloneseek/errors.hpp"
#include "cloneseek/revisions.hpp"

using namespace cloneseek;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> snippet_body(const std::string& tag, int extra = 0) {
    std::vector<std::string> body = {
        "int " + tag + "A = load" + tag + "();",
        "int " + tag + "B = " + tag + "A * 3;",
        tag + "Store(" + tag + "B);",
        "if (" + tag + "B > 10) {",
        "    " + tag + "Flush();",
        "}",
    };
    for (int i = 0; i < extra; ++i) {
        body.push_back(tag + "Extra" + std::to_string(i) + "();");
    }
    return body;
}

SnippetRevision rev(std::int64_t post, std::int64_t local, std::int64_t seq,
                    std::vector<std::string> body, bool accepted = true) {
    return SnippetRevision{post, local, seq, accepted, std::move(body)};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) {
        path = fs::temp_directory_path() / name;
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::vector<std::string>& lines) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::trunc);
    for (const auto& l : lines) out << l << '\n';
}

}  // namespace

TEST_CASE("body escaping round-trips") {
    std::vector<std::string> body = {"a\tb", "line with \\backslash", "", "end"};
    CHECK(unescape_body(escape_body(body)) == body);
}

TEST_CASE("dump parsing: schema errors carry line numbers") {
    TempDir dir("cloneseek_dump_test");
    fs::path dump = dir.path / "dump.tsv";
    {
        std::ofstream out(dump);
        out << "1\t0\t0\t1\tint a = 1;\n";
        out << "not_a_number\t0\t0\t1\tx\n";
    }
    try {
        parse_revision_dump(dump.string());
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("dump parsing: well-formed records") {
    TempDir dir("cloneseek_dump_ok");
    fs::path dump = dir.path / "dump.tsv";
    {
        std::ofstream out(dump);
        out << "# comment line\n";
        out << "42\t1\t0\t1\tfirst();\\nsecond();\n";
        out << "42\t1\t1\t0\tthird();\n";
    }
    auto revs = parse_revision_dump(dump.string());
    REQUIRE(revs.size() == 2);
    CHECK(revs[0].post_id == 42);
    CHECK(revs[0].local_id == 1);
    CHECK(revs[0].body == std::vector<std::string>{"first();", "second();"});
    CHECK(revs[0].is_accepted);
    CHECK(!revs[1].is_accepted);
}

TEST_CASE("ingest labels revisions original/1/latest") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    std::vector<SnippetRevision> revs = {
        rev(8394534, 0, 0, snippet_body("va")),
        rev(8394534, 0, 1, snippet_body("vb")),
        rev(8394534, 0, 2, snippet_body("vc")),
    };
    IngestReport report = ingest_revisions(revs, index);
    CHECK(report.answers == 1);
    CHECK(report.blocks == 1);
    CHECK(report.revisions_indexed == 3);
    CHECK(index.find_doc("8394534_0_original") != nullptr);
    CHECK(index.find_doc("8394534_0_1") != nullptr);
    CHECK(index.find_doc("8394534_0_latest") != nullptr);
}

TEST_CASE("single-revision block is indexed as latest only") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    auto report = ingest_revisions({rev(7, 0, 0, snippet_body("solo"))}, index);
    CHECK(report.revisions_indexed == 1);
    CHECK(index.find_doc("7_0_latest") != nullptr);
    CHECK(index.find_doc("7_0_original") == nullptr);
}

TEST_CASE("ingest skips small bodies and deduplicates identical consecutive revisions") {
    SearchConfig cfg;  // min_clone_size 6
    InvertedIndex index(cfg);
    std::vector<SnippetRevision> revs = {
        rev(9, 0, 0, {"int a = 1;", "use(a);"}),          // 2 lines wrapped -> still < 6? wrapped adds 2
        rev(10, 0, 0, snippet_body("dup")),
        rev(10, 0, 1, snippet_body("dup")),               // identical code block
        rev(10, 0, 2, snippet_body("dup", 2)),
    };
    IngestReport report = ingest_revisions(revs, index);
    CHECK(report.deduplicated == 1);
    CHECK(report.skipped_too_small >= 1);
    CHECK(index.find_doc("10_0_original") != nullptr);
    CHECK(index.find_doc("10_0_latest") != nullptr);
    CHECK(index.find_doc("10_0_1") == nullptr);  // collapsed by dedup
}

TEST_CASE("non-accepted answers never enter the index") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    auto report = ingest_revisions({rev(11, 0, 0, snippet_body("na"), false)}, index);
    CHECK(report.revisions_indexed == 0);
    CHECK(report.skipped_not_accepted == 1);
    CHECK(index.doc_count() == 0);
}

TEST_CASE("scan_project recommends when a non-latest revision matches") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    ingest_revisions({rev(500, 0, 0, snippet_body("old")),
                      rev(500, 0, 1, snippet_body("neu", 3))},
                     index);

    TempDir dir("cloneseek_scan_test");
    // project method that verbatim-copies the original revision body
    std::vector<std::string> file_lines = {"class App {", "  void copied() {"};
    for (const auto& l : snippet_body("old")) file_lines.push_back("    " + l);
    file_lines.push_back("  }");
    file_lines.push_back("}");
    write_file(dir.path / "proj" / "src" / "App.java", file_lines);

    auto recs = scan_project((dir.path / "proj").string(), index, cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].matched_doc_id == "500_0_original");
    CHECK(recs[0].latest_post_id == 500);
    CHECK(recs[0].path == "src/App.java");
    CHECK(!recs[0].latest_body.empty());
    CHECK(recs[0].edit_distance > 0);
}

TEST_CASE("scan_project stays quiet for latest bodies and boilerplate") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    ingest_revisions({rev(600, 0, 0, snippet_body("aa")),
                      rev(600, 0, 1, snippet_body("bb", 2))},
                     index);

    TempDir dir("cloneseek_scan_quiet");
    std::vector<std::string> latest_copy = {"class App {", "  void copied() {"};
    for (const auto& l : snippet_body("bb", 2)) latest_copy.push_back("    " + l);
    latest_copy.push_back("  }");
    latest_copy.push_back("}");
    write_file(dir.path / "proj" / "Latest.java", latest_copy);
    write_file(dir.path / "proj" / "Boiler.java",
               {"class B {", "  public int getX(){", "    return x;", "  }", "}"});

    auto recs = scan_project((dir.path / "proj").string(), index, cfg);
    CHECK(recs.empty());
}

TEST_CASE("scan_project skips unparsable files without aborting") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    ingest_revisions({rev(700, 0, 0, snippet_body("pa")),
                      rev(700, 0, 1, snippet_body("pb", 1))},
                     index);

    TempDir dir("cloneseek_scan_broken");
    write_file(dir.path / "proj" / "Broken.java",
               {"class Broken {", "  void never() {", "    open("});
    std::vector<std::string> ok = {"class Ok {", "  void copied() {"};
    for (const auto& l : snippet_body("pa")) ok.push_back("    " + l);
    ok.push_back("  }");
    ok.push_back("}");
    write_file(dir.path / "proj" / "Ok.java", ok);

    auto recs = scan_project((dir.path / "proj").string(), index, cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].path == "Ok.java");
}

TEST_CASE("recommendations CSV has a header and quotes commas") {
    TempDir dir("cloneseek_csv_test");
    fs::path out = dir.path / "recs.csv";

    write_recommendations_csv({}, out.string());
    {
        std::ifstream in(out);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line == "file,method,start_line,end_line,post_id,matched_doc_id,edit_distance");
        CHECK(!std::getline(in, line));
    }

    Recommendation rec;
    rec.path = "dir,with,commas/App.java";
    rec.method_name = "copied";
    rec.start_line = 2;
    rec.end_line = 9;
    rec.matched_doc_id = "500_0_original";
    rec.latest_post_id = 500;
    rec.edit_distance = 12;
    write_recommendations_csv({rec}, out.string());
    {
        std::ifstream in(out);
        std::string header, row;
        REQUIRE(std::getline(in, header));
        REQUIRE(std::getline(in, row));
        CHECK(row.find("\"dir,with,commas/App.java\"") != std::string::npos);
    }
}

TEST_CASE("scan results are independent of job count") {
    SearchConfig cfg;
    InvertedIndex index(cfg);
    ingest_revisions({rev(800, 0, 0, snippet_body("ja")),
                      rev(800, 0, 1, snippet_body("jb", 1)),
                      rev(801, 0, 0, snippet_body("jc")),
                      rev(801, 0, 1, snippet_body("jd", 2))},
                     index);

    TempDir dir("cloneseek_scan_jobs");
    for (int i = 0; i < 6; ++i) {
        std::vector<std::string> lines = {"class F" + std::to_string(i) + " {",
                                          "  void copied() {"};
        for (const auto& l : snippet_body(i % 2 ? "ja" : "jc"))
            lines.push_back("    " + l);
        lines.push_back("  }");
        lines.push_back("}");
        write_file(dir.path / "proj" / ("F" + std::to_string(i) + ".java"), lines);
    }
    ScanOptions one, four;
    four.jobs = 4;
    auto a = scan_project((dir.path / "proj").string(), index, cfg, one);
    auto b = scan_project((dir.path / "proj").string(), index, cfg, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].path == b[i].path);
        CHECK(a[i].matched_doc_id == b[i].matched_doc_id);
    }
}
