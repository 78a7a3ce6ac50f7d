#include "cloneseek/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "cloneseek/errors.hpp"
#include "cloneseek/lexer.hpp"

namespace cloneseek {

namespace {

enum class ScanState { Code, BlockComment, InString };

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> strip_comments_keep_lines(const std::vector<std::string>& lines) {
    std::vector<std::string> out;
    out.reserve(lines.size());
    ScanState state = ScanState::Code;
    char quote = '"';
    for (const std::string& line : lines) {
        std::string kept;
        kept.reserve(line.size());
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            switch (state) {
                case ScanState::Code:
                    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') {
                        i = line.size();  // line comment: discard the rest
                        break;
                    }
                    if (c == '/' && i + 1 < line.size() && line[i + 1] == '*') {
                        state = ScanState::BlockComment;
                        kept += ' ';  // keep tokens on either side separated
                        i += 2;
                        break;
                    }
                    if (c == '"' || c == '\'') {
                        state = ScanState::InString;
                        quote = c;
                    }
                    kept += c;
                    ++i;
                    break;
                case ScanState::BlockComment:
                    if (c == '*' && i + 1 < line.size() && line[i + 1] == '/') {
                        state = ScanState::Code;
                        i += 2;
                    } else {
                        ++i;
                    }
                    break;
                case ScanState::InString:
                    if (c == '\\' && i + 1 < line.size()) {
                        kept += c;
                        kept += line[i + 1];
                        i += 2;
                        break;
                    }
                    if (c == quote) state = ScanState::Code;
                    kept += c;
                    ++i;
                    break;
            }
        }
        // Java string/char literals do not span lines; reset to avoid
        // swallowing the rest of a malformed snippet.
        if (state == ScanState::InString) state = ScanState::Code;
        out.push_back(std::move(kept));
    }
    return out;
}

std::vector<std::string> strip_comments(const std::vector<std::string>& lines) {
    std::vector<std::string> blanked = strip_comments_keep_lines(lines);
    std::vector<std::string> out;
    out.reserve(blanked.size());
    for (std::size_t i = 0; i < blanked.size(); ++i) {
        if (is_blank(blanked[i]) && !is_blank(lines[i])) continue;  // comment-only line
        out.push_back(trim(blanked[i]));
    }
    return out;
}

namespace {

bool no_space_after(const Token& t) {
    if (t.kind == TokenKind::Punct) {
        return t.text == "(" || t.text == "[" || t.text == "." || t.text == "@";
    }
    return false;
}

bool no_space_before(const Token& t) {
    if (t.kind == TokenKind::Punct) {
        return t.text == ")" || t.text == "]" || t.text == ";" ||
               t.text == "," || t.text == "." || t.text == "(";
    }
    return false;
}

std::string render_line(const std::vector<Token>& toks, int depth) {
    std::string line(static_cast<std::size_t>(depth) * 4, ' ');
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i > 0 && !no_space_after(toks[i - 1]) && !no_space_before(toks[i])) {
            line += ' ';
        }
        line += toks[i].text;
    }
    return line;
}

}  // namespace

std::vector<std::string> normalize_layout(const std::vector<std::string>& lines) {
    std::vector<Token> toks = lex(lines);
    std::vector<std::string> out;
    std::vector<Token> buf;
    int depth = 0;
    int paren = 0;
    auto flush = [&] {
        if (!buf.empty()) {
            out.push_back(render_line(buf, depth));
            buf.clear();
        }
    };
    for (const Token& t : toks) {
        if (t.kind == TokenKind::Punct && t.text == "{") {
            buf.push_back(t);
            flush();
            ++depth;
            continue;
        }
        if (t.kind == TokenKind::Punct && t.text == "}") {
            flush();
            depth = std::max(0, depth - 1);
            buf.push_back(t);
            flush();
            continue;
        }
        if (t.kind == TokenKind::Punct && t.text == "(") ++paren;
        if (t.kind == TokenKind::Punct && t.text == ")") paren = std::max(0, paren - 1);
        buf.push_back(t);
        if (t.kind == TokenKind::Punct && t.text == ";" && paren == 0) flush();
    }
    flush();
    return out;
}

namespace {

bool is_modifier_or_type_word(const std::string& w) {
    static const std::unordered_set<std::string> words = {
        "public", "private", "protected", "static", "final", "abstract",
        "native", "synchronized", "strictfp", "transient", "volatile",
        "default", "extends", "super", "throws",
        "boolean", "byte", "char", "double", "float", "int", "long",
        "short", "void", "var",
    };
    return words.count(w) > 0;
}

// Tokens allowed inside a declaration header when walking back from the
// method name: return type, generics, annotations, modifiers.
bool belongs_to_header(const Token& t) {
    switch (t.kind) {
        case TokenKind::Identifier:
            return true;
        case TokenKind::Keyword:
            return is_modifier_or_type_word(t.text);
        case TokenKind::Punct:
            return t.text == "." || t.text == "[" || t.text == "]" ||
                   t.text == "," || t.text == "@";
        case TokenKind::Operator:
            return t.text == "<" || t.text == ">" || t.text == "&" ||
                   t.text == "?";
        default:
            return false;
    }
}

bool tok_is(const Token& t, const char* text) { return t.text == text; }

}  // namespace

std::vector<MethodRecord> extract_methods(const SourceFile& file, int min_lines) {
    std::vector<std::string> blanked = strip_comments_keep_lines(file.lines);
    std::vector<Token> toks = lex(blanked);
    std::vector<MethodRecord> records;

    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        // Candidate header: name '(' ... ')' [throws ...] '{'
        if (toks[i].kind != TokenKind::Identifier) continue;
        if (!tok_is(toks[i + 1], "(")) continue;
        if (i > 0) {
            const Token& prev = toks[i - 1];
            if (prev.kind == TokenKind::Keyword &&
                (prev.text == "new" || prev.text == "record")) {
                continue;  // anonymous class creation / record declaration
            }
            if (tok_is(prev, ".") || tok_is(prev, "=")) continue;  // call / assignment
        }
        // Match the parameter list.
        std::size_t j = i + 1;
        int pdepth = 0;
        for (; j < toks.size(); ++j) {
            if (tok_is(toks[j], "(")) ++pdepth;
            else if (tok_is(toks[j], ")")) {
                if (--pdepth == 0) break;
            } else if (tok_is(toks[j], "{") || tok_is(toks[j], ";")) {
                break;
            }
        }
        if (j >= toks.size() || !tok_is(toks[j], ")")) continue;
        // Skip an optional throws clause.
        std::size_t k = j + 1;
        if (k < toks.size() && toks[k].kind == TokenKind::Keyword &&
            toks[k].text == "throws") {
            ++k;
            while (k < toks.size() &&
                   (toks[k].kind == TokenKind::Identifier || tok_is(toks[k], ",") ||
                    tok_is(toks[k], "."))) {
                ++k;
            }
        }
        if (k >= toks.size() || !tok_is(toks[k], "{")) continue;

        // Walk back over modifiers, annotations and the return type.
        std::size_t start = i;
        while (start > 0 && belongs_to_header(toks[start - 1])) --start;

        // Match the body braces.
        int depth = 0;
        std::size_t close = k;
        bool closed = false;
        for (; close < toks.size(); ++close) {
            if (tok_is(toks[close], "{")) ++depth;
            else if (tok_is(toks[close], "}")) {
                if (--depth == 0) {
                    closed = true;
                    break;
                }
            }
        }
        if (!closed) {
            throw UnparsableFile(file.path + ": method body starting at line " +
                                 std::to_string(toks[k].line) + " never closes");
        }

        MethodRecord rec;
        rec.project_id = file.project_id;
        rec.path = file.path;
        rec.method_name = toks[i].text;
        rec.start_line = toks[start].line;
        rec.end_line = toks[close].line;
        std::vector<std::string> slice(
            file.lines.begin() + (rec.start_line - 1),
            file.lines.begin() + rec.end_line);
        rec.body = normalize_layout(strip_comments(slice));
        if (rec.body.empty()) continue;
        if (static_cast<int>(rec.body.size()) < min_lines) continue;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<std::string> wrap_snippet(const std::vector<std::string>& snippet_lines) {
    std::vector<std::string> stripped = strip_comments(snippet_lines);
    bool all_blank = std::all_of(stripped.begin(), stripped.end(),
                                 [](const std::string& s) { return is_blank(s); });
    if (stripped.empty() || all_blank) return {};

    SourceFile probe{"", "<snippet>", stripped};
    bool has_method = false;
    try {
        has_method = !extract_methods(probe, 1).empty();
    } catch (const UnparsableFile&) {
        has_method = false;
    }
    if (has_method) return normalize_layout(stripped);

    std::vector<std::string> wrapped;
    wrapped.reserve(stripped.size() + 2);
    wrapped.push_back("void snippet() {");
    wrapped.insert(wrapped.end(), stripped.begin(), stripped.end());
    wrapped.push_back("}");
    return normalize_layout(wrapped);
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out += '\n';
        out += lines[i];
    }
    return out;
}

}  // namespace cloneseek
