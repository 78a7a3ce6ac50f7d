#include "cloneseek/lexer.hpp"

#include <cctype>
#include <unordered_set>

namespace cloneseek {

namespace {

const std::unordered_set<std::string>& keyword_set() {
    static const std::unordered_set<std::string> kw = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for",
        "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private",
        "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while",
        "var", "record", "yield", "true", "false", "null",
    };
    return kw;
}

const std::unordered_set<std::string>& type_keyword_set() {
    static const std::unordered_set<std::string> kw = {
        "boolean", "byte", "char", "double", "float", "int", "long",
        "short", "void",
    };
    return kw;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_op_char(char c) {
    switch (c) {
        case '+': case '-': case '*': case '/': case '%':
        case '=': case '<': case '>': case '!': case '&':
        case '|': case '^': case '~': case '?': case ':':
            return true;
        default:
            return false;
    }
}

// Multi-character operators, longest first within each head character.
bool match_multi_op(const std::string& s, std::size_t i, std::size_t& len) {
    static const char* ops[] = {
        ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=",
        ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=",
        "|=", "^=", "<<", ">>",
    };
    for (const char* op : ops) {
        std::size_t n = std::char_traits<char>::length(op);
        if (s.compare(i, n, op) == 0) {
            len = n;
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_java_keyword(const std::string& word) {
    return keyword_set().count(word) > 0;
}

bool is_type_keyword(const std::string& word) {
    return type_keyword_set().count(word) > 0;
}

std::vector<Token> lex(const std::vector<std::string>& lines) {
    std::vector<Token> out;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& s = lines[li];
        const int line_no = static_cast<int>(li) + 1;
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (is_ident_start(c)) {
                std::size_t j = i + 1;
                while (j < s.size() && is_ident_char(s[j])) ++j;
                std::string word = s.substr(i, j - i);
                TokenKind kind = is_java_keyword(word) ? TokenKind::Keyword
                                                       : TokenKind::Identifier;
                out.push_back({kind, std::move(word), line_no});
                i = j;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && i + 1 < s.size() &&
                 std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
                std::size_t j = i;
                while (j < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[j])) ||
                        s[j] == '.' || s[j] == '_' ||
                        ((s[j] == '+' || s[j] == '-') && j > i &&
                         (s[j - 1] == 'e' || s[j - 1] == 'E')))) {
                    ++j;
                }
                out.push_back({TokenKind::Number, s.substr(i, j - i), line_no});
                i = j;
                continue;
            }
            if (c == '"' || c == '\'') {
                char quote = c;
                std::size_t j = i + 1;
                while (j < s.size()) {
                    if (s[j] == '\\' && j + 1 < s.size()) {
                        j += 2;
                        continue;
                    }
                    if (s[j] == quote) {
                        ++j;
                        break;
                    }
                    ++j;
                }
                // Unterminated literal: take the rest of the line.
                out.push_back({TokenKind::String, s.substr(i, j - i), line_no});
                i = j;
                continue;
            }
            std::size_t oplen = 0;
            if (match_multi_op(s, i, oplen)) {
                out.push_back({TokenKind::Operator, s.substr(i, oplen), line_no});
                i += oplen;
                continue;
            }
            if (is_op_char(c)) {
                out.push_back({TokenKind::Operator, std::string(1, c), line_no});
                ++i;
                continue;
            }
            // Everything else (braces, brackets, separators, @, stray bytes).
            out.push_back({TokenKind::Punct, std::string(1, c), line_no});
            ++i;
        }
    }
    return out;
}

}  // namespace cloneseek
